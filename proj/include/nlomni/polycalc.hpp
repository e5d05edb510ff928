#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nlomni/check.hpp"
#include "nlomni/multilinear.hpp"
#include "nlomni/poly.hpp"
#include "nlomni/random.hpp"

namespace nlomni {

/// X = Σ X^i ∂_i on the coordinate space Q^m.
class PolyVecField {
 public:
  explicit PolyVecField(int dim);
  explicit PolyVecField(std::vector<Poly> components);

  int dim() const { return static_cast<int>(comp_.size()); }
  const Poly& operator[](int i) const { return comp_[static_cast<std::size_t>(i)]; }
  Poly& operator[](int i) { return comp_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  /// X(f) = Σ X^i ∂_i f
  Poly apply(const Poly& f) const;

  PolyVecField& operator+=(const PolyVecField& other);
  PolyVecField& operator-=(const PolyVecField& other);

  friend PolyVecField operator+(PolyVecField a, const PolyVecField& b) { return a += b; }
  friend PolyVecField operator-(PolyVecField a, const PolyVecField& b) { return a -= b; }
  friend PolyVecField operator*(const Poly& f, const PolyVecField& x);
  friend bool operator==(const PolyVecField& a, const PolyVecField& b) = default;

 private:
  std::vector<Poly> comp_;
};

struct FormTag {};
struct MultiVecTag {};

/// Sparse graded object Σ_J c_J dy_J (forms) or Σ_J c_J ∂_J (multivectors)
/// on strictly increasing index tuples with polynomial coefficients.
template <class Tag>
class Graded {
 public:
  using Terms = std::map<WedgeIndex, Poly>;

  Graded(int dim, int grade);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const WedgeIndex& idx) const;

  /// Adds p · (basis element for idx in any order), folding the sign.
  void add_term(WedgeIndex idx, const Poly& p);

  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  Graded& operator*=(const Scalar& c);

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(Graded a) { return a *= Scalar(-1); }
  friend Graded operator*(const Scalar& c, Graded a) { return a *= c; }
  friend Graded operator*(const Poly& f, const Graded& a) {
    Graded out(a.dim_, a.grade_);
    for (const auto& [idx, p] : a.terms_) out.add_term(idx, f * p);
    return out;
  }
  friend bool operator==(const Graded& a, const Graded& b) = default;

 private:
  void require_compatible(const Graded& other) const;

  int dim_;
  int grade_;
  Terms terms_;
};

using PolyForm = Graded<FormTag>;
using PolyMultiVec = Graded<MultiVecTag>;

extern template class Graded<FormTag>;
extern template class Graded<MultiVecTag>;

/// f as a 0-form.
PolyForm function_form(const Poly& f);
/// The coefficient of a 0-form.
Poly as_function(const PolyForm& f);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

PolyForm ext_d(const PolyForm& w);
/// i_X contracts X into the first slot. Throws std::invalid_argument on a 0-form.
PolyForm interior_vec(const PolyVecField& x, const PolyForm& w);
/// L_X = i_X d + d i_X (on functions, L_X f = X(f)).
PolyForm lie_form(const PolyVecField& x, const PolyForm& w);
/// L_X from the coordinate formula
/// L_X(c dy_J) = X(c) dy_J + c Σ_r dy_{j_1} ∧ .. ∧ dX^{j_r} ∧ .. ∧ dy_{j_k};
/// used as a cross-check.
PolyForm lie_form_components(const PolyVecField& x, const PolyForm& w);

/// [X, Y]^i = X(Y^i) − Y(X^i)
PolyVecField vf_bracket(const PolyVecField& x, const PolyVecField& y);
/// L_X π = X(π^J) ∂_J − Σ_r Σ_i π^J ∂_{j_r}(X^i) ∂_{J[r→i]}
PolyMultiVec lie_multivec(const PolyVecField& x, const PolyMultiVec& pi);

/// ⟨π♯(dy_{j_1} ∧ ... ∧ dy_{j_{n−1}}), dy_l⟩ = π(dy_{j_1}, ..., dy_{j_{n−1}}, dy_l),
/// extended linearly over the (n−1)-form.
PolyVecField sharp(const PolyMultiVec& pi, const PolyForm& a);
/// Full contraction ⟨w, π⟩ = Σ_J w_J π^J of a k-form with a k-vector.
Poly contract(const PolyForm& w, const PolyMultiVec& pi);

/// An n-vector field that passed nambu_poisson_check. Only obtainable from
/// that check, so every consumer of the twisted bracket has been gated.
class NambuPoisson {
 public:
  const PolyMultiVec& tensor() const { return pi_; }
  int dim() const { return pi_.dim(); }
  int arity() const { return pi_.grade(); }

 private:
  friend struct NambuPoissonResult nambu_poisson_check(const PolyMultiVec& pi, const SuiteConfig& config);
  explicit NambuPoisson(PolyMultiVec pi) : pi_(std::move(pi)) {}
  PolyMultiVec pi_;
};

struct NambuPoissonResult {
  Check check;
  std::optional<NambuPoisson> structure;
};

/// L_{π♯(df_1 ∧ ... ∧ df_{n−1})} π = 0 for every increasing (n−1)-tuple of
/// test functions drawn from the coordinates and a seeded set of random
/// polynomials of degree ≤ 2. A pass is verification on that generator set.
NambuPoissonResult nambu_poisson_check(const PolyMultiVec& pi, const SuiteConfig& config = {});

/// Section X + α of TM ⊕ ∧^{n−1}T*M.
struct GenSection {
  PolyVecField vec;
  PolyForm form;

  GenSection(PolyVecField x, PolyForm a);
  static GenSection zero(int dim, int arity);

  int dim() const { return vec.dim(); }
  int arity() const { return form.grade() + 1; }

  friend GenSection operator+(const GenSection& s, const GenSection& t) { return {s.vec + t.vec, s.form + t.form}; }
  friend GenSection operator-(const GenSection& s, const GenSection& t) { return {s.vec - t.vec, s.form - t.form}; }
  friend GenSection operator*(const Poly& f, const GenSection& s) { return {f * s.vec, f * s.form}; }
  friend bool operator==(const GenSection& s, const GenSection& t) = default;
};

// Term masks: bit k drops term k of the displayed sum. Used to build mutants.

/// [α, β]_π = L_{π♯α}β − L_{π♯β}α + d i_{π♯β}α   (terms 0, 1, 2)
PolyForm np_form_bracket(const NambuPoisson& np, const PolyForm& a, const PolyForm& b);
PolyForm np_form_bracket_raw(const PolyMultiVec& pi, const PolyForm& a, const PolyForm& b, unsigned omit = 0);

/// (X + α, Y + β)_+ = i_X β + i_Y α
PolyForm std_pairing(const GenSection& s, const GenSection& t);

/// ⟦X+α, Y+β⟧ = [X, Y] + L_X β − i_Y dα   (terms 0, 1, 2)
GenSection std_courant(const GenSection& s, const GenSection& t, unsigned omit = 0);

/// ⟦X+α, Y+β⟧_π = [X,Y] + [X,π♯β] + [π♯α,Y] − π♯(L_X β) + π♯(i_Y dα)
///              + L_X β − i_Y dα + [α, β]_π   (terms 0..7)
GenSection pi_courant(const NambuPoisson& np, const GenSection& s, const GenSection& t);
GenSection pi_courant_raw(const PolyMultiVec& pi, const GenSection& s, const GenSection& t, unsigned omit = 0,
                          unsigned omit_form_bracket = 0);

/// ρ_π(X + α) = X + π♯α
PolyVecField rho_pi(const PolyMultiVec& pi, const GenSection& s);
/// Ψ(X + α) = X + π♯α + α
GenSection psi(const PolyMultiVec& pi, const GenSection& s);
GenSection psi_inverse(const PolyMultiVec& pi, const GenSection& s);

// Seeded generators; coefficients in [−3, 3], each monomial present with
// probability 1/2.
Poly random_poly(int dim, int degree, SeededRng& rng);
PolyVecField random_vector_field(int dim, int degree, SeededRng& rng);
PolyForm random_form(int dim, int grade, int degree, SeededRng& rng);
GenSection random_section(int dim, int arity, int degree, SeededRng& rng);

/// d∘d = 0, L_X against the coordinate formula, i_{[X,Y]} = L_X i_Y − i_Y L_X,
/// and the left Leibniz identity of the standard bracket; config.samples
/// random inputs each.
std::vector<Check> calculus_suite(int dim, int arity, const SuiteConfig& config = {});

/// Mutant selection for the twisted-bracket suites.
struct TwistedBrackets {
  unsigned omit_twisted = 0;
  unsigned omit_form_bracket = 0;
  unsigned omit_standard = 0;
};

/// Leibniz identity, anchored module rule, the self-bracket formula, the
/// corrected pairing compatibility, Ψ-conjugation with the standard
/// bracket, Ψ round-trip and the pairing defect of Ψ, on config.samples
/// seeded random sections (coefficients of degree ≤ 1; functions of degree ≤ 2).
std::vector<Check> twisted_courant_suite(const NambuPoisson& np, const SuiteConfig& config = {},
                                         const TwistedBrackets& brackets = {});

/// Clean pairing compatibility on Hamiltonian vector fields plus closed
/// forms; the sign of π♯(L_{π♯ξ}η) − [π♯ξ, π♯η] = ±(i_{dξ}π) π♯η, found
/// empirically; and, with non-closed forms, the corrected compatibility.
std::vector<Check> hamiltonian_compat_suite(const NambuPoisson& np, const SuiteConfig& config = {},
                                            const TwistedBrackets& brackets = {});

}  // namespace nlomni
