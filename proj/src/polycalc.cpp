#include "nlomni/polycalc.hpp"

#include <functional>

#include "nlomni/serialize.hpp"

namespace nlomni {

// ---------------------------------------------------------------------------
// PolyVecField

PolyVecField::PolyVecField(int dim) : comp_(static_cast<std::size_t>(dim), Poly(dim)) {}

PolyVecField::PolyVecField(std::vector<Poly> components) : comp_(std::move(components)) {
  for (const auto& p : comp_) {
    if (p.nvars() != dim()) throw DimensionMismatch("PolyVecField", dim(), p.nvars());
  }
}

bool PolyVecField::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly PolyVecField::apply(const Poly& f) const {
  if (f.nvars() != dim()) throw DimensionMismatch("PolyVecField::apply", dim(), f.nvars());
  Poly out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (comp_[static_cast<std::size_t>(i)].is_zero()) continue;
    const Poly df = f.derivative(i);
    if (!df.is_zero()) out += comp_[static_cast<std::size_t>(i)] * df;
  }
  return out;
}

PolyVecField& PolyVecField::operator+=(const PolyVecField& other) {
  if (dim() != other.dim()) throw DimensionMismatch("PolyVecField", dim(), other.dim());
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += other.comp_[i];
  return *this;
}

PolyVecField& PolyVecField::operator-=(const PolyVecField& other) {
  if (dim() != other.dim()) throw DimensionMismatch("PolyVecField", dim(), other.dim());
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= other.comp_[i];
  return *this;
}

PolyVecField operator*(const Poly& f, const PolyVecField& x) {
  PolyVecField out(x.dim());
  for (int i = 0; i < x.dim(); ++i) out[i] = f * x[i];
  return out;
}

// ---------------------------------------------------------------------------
// Graded

template <class Tag>
Graded<Tag>::Graded(int dim, int grade) : dim_(dim), grade_(grade) {
  if (grade < 0) throw std::invalid_argument("negative grade");
}

template <class Tag>
Poly Graded<Tag>::coeff(const WedgeIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Poly(dim_) : it->second;
}

template <class Tag>
void Graded<Tag>::add_term(WedgeIndex idx, const Poly& p) {
  if (static_cast<int>(idx.size()) != grade_) throw DimensionMismatch("graded add_term", grade_, static_cast<int>(idx.size()));
  if (p.nvars() != dim_) throw DimensionMismatch("graded add_term", dim_, p.nvars());
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw std::out_of_range("graded add_term: index out of range");
  }
  if (p.is_zero()) return;
  const int sign = sort_with_sign(idx);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, dim_);
  if (sign > 0) it->second += p;
  else it->second -= p;
  if (it->second.is_zero()) terms_.erase(it);
}

template <class Tag>
void Graded<Tag>::require_compatible(const Graded& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("graded", dim_, other.dim_);
  if (grade_ != other.grade_) throw DimensionMismatch("graded grade", grade_, other.grade_);
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator+=(const Graded& other) {
  require_compatible(other);
  for (const auto& [idx, p] : other.terms_) add_term(idx, p);
  return *this;
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator-=(const Graded& other) {
  require_compatible(other);
  for (const auto& [idx, p] : other.terms_) add_term(idx, -p);
  return *this;
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, p] : terms_) p *= c;
  return *this;
}

template class Graded<FormTag>;
template class Graded<MultiVecTag>;

// ---------------------------------------------------------------------------
// exterior calculus

PolyForm function_form(const Poly& f) {
  PolyForm out(f.nvars(), 0);
  out.add_term({}, f);
  return out;
}

Poly as_function(const PolyForm& f) {
  if (f.grade() != 0) throw DimensionMismatch("as_function grade", 0, f.grade());
  return f.coeff({});
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge", a.dim(), b.dim());
  PolyForm out(a.dim(), a.grade() + b.grade());
  for (const auto& [i, p] : a.terms()) {
    for (const auto& [j, q] : b.terms()) {
      WedgeIndex idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      out.add_term(std::move(idx), p * q);
    }
  }
  return out;
}

PolyForm ext_d(const PolyForm& w) {
  PolyForm out(w.dim(), w.grade() + 1);
  for (const auto& [idx, c] : w.terms()) {
    for (int i = 0; i < w.dim(); ++i) {
      const Poly di = c.derivative(i);
      if (di.is_zero()) continue;
      WedgeIndex t{i};
      t.insert(t.end(), idx.begin(), idx.end());
      out.add_term(std::move(t), di);
    }
  }
  return out;
}

PolyForm interior_vec(const PolyVecField& x, const PolyForm& w) {
  if (x.dim() != w.dim()) throw DimensionMismatch("interior_vec", w.dim(), x.dim());
  if (w.grade() == 0) throw std::invalid_argument("interior_vec: contraction of a 0-form");
  PolyForm out(w.dim(), w.grade() - 1);
  for (const auto& [idx, c] : w.terms()) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const Poly& xr = x[idx[r]];
      if (xr.is_zero()) continue;
      const Poly term = xr * c;
      out.add_term(drop_slot(idx, r), r % 2 == 0 ? term : -term);
    }
  }
  return out;
}

PolyForm lie_form(const PolyVecField& x, const PolyForm& w) {
  if (x.dim() != w.dim()) throw DimensionMismatch("lie_form", w.dim(), x.dim());
  if (w.grade() == 0) return function_form(x.apply(as_function(w)));
  return interior_vec(x, ext_d(w)) + ext_d(interior_vec(x, w));
}

PolyForm lie_form_components(const PolyVecField& x, const PolyForm& w) {
  if (x.dim() != w.dim()) throw DimensionMismatch("lie_form_components", w.dim(), x.dim());
  PolyForm out(w.dim(), w.grade());
  for (const auto& [idx, c] : w.terms()) {
    out.add_term(idx, x.apply(c));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (int i = 0; i < w.dim(); ++i) {
        const Poly dx = x[idx[r]].derivative(i);
        if (dx.is_zero()) continue;
        WedgeIndex t = idx;
        t[r] = i;
        out.add_term(std::move(t), c * dx);
      }
    }
  }
  return out;
}

PolyVecField vf_bracket(const PolyVecField& x, const PolyVecField& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("vf_bracket", x.dim(), y.dim());
  PolyVecField out(x.dim());
  for (int i = 0; i < x.dim(); ++i) out[i] = x.apply(y[i]) - y.apply(x[i]);
  return out;
}

PolyMultiVec lie_multivec(const PolyVecField& x, const PolyMultiVec& pi) {
  if (x.dim() != pi.dim()) throw DimensionMismatch("lie_multivec", pi.dim(), x.dim());
  PolyMultiVec out(pi.dim(), pi.grade());
  for (const auto& [idx, c] : pi.terms()) {
    out.add_term(idx, x.apply(c));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (int i = 0; i < pi.dim(); ++i) {
        const Poly dx = x[i].derivative(idx[r]);
        if (dx.is_zero()) continue;
        WedgeIndex t = idx;
        t[r] = i;
        out.add_term(std::move(t), -(c * dx));
      }
    }
  }
  return out;
}

PolyVecField sharp(const PolyMultiVec& pi, const PolyForm& a) {
  if (pi.dim() != a.dim()) throw DimensionMismatch("sharp", pi.dim(), a.dim());
  if (a.grade() != pi.grade() - 1) throw DimensionMismatch("sharp grade", pi.grade() - 1, a.grade());
  PolyVecField out(pi.dim());
  for (const auto& [idx, c] : a.terms()) {
    for (int l = 0; l < pi.dim(); ++l) {
      WedgeIndex t = idx;
      t.push_back(l);
      const int sign = sort_with_sign(t);
      if (sign == 0) continue;
      auto it = pi.terms().find(t);
      if (it == pi.terms().end()) continue;
      const Poly term = c * it->second;
      if (sign > 0) out[l] += term;
      else out[l] -= term;
    }
  }
  return out;
}

Poly contract(const PolyForm& w, const PolyMultiVec& pi) {
  if (w.dim() != pi.dim()) throw DimensionMismatch("contract", pi.dim(), w.dim());
  if (w.grade() != pi.grade()) throw DimensionMismatch("contract grade", pi.grade(), w.grade());
  Poly out(w.dim());
  for (const auto& [idx, c] : w.terms()) {
    auto it = pi.terms().find(idx);
    if (it != pi.terms().end()) out += c * it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nambu-Poisson

namespace {

constexpr int random_test_functions = 3;

PolyForm exact_wedge(const std::vector<Poly>& fs, int dim) {
  PolyForm out = function_form(Poly::constant(dim, 1));
  for (const auto& f : fs) out = wedge(out, ext_d(function_form(f)));
  return out;
}

}  // namespace

NambuPoissonResult nambu_poisson_check(const PolyMultiVec& pi, const SuiteConfig& config) {
  NambuPoissonResult result{Check("nambu_poisson"), std::nullopt};
  Check& check = result.check;
  const int m = pi.dim();
  const int n = pi.grade();
  if (n < 2) throw std::invalid_argument("nambu_poisson_check: grade must be at least 2");

  std::vector<Poly> functions;
  for (int i = 0; i < m; ++i) functions.push_back(Poly::variable(m, i));
  SeededRng rng(config.seed, "nambu_poisson");
  for (int k = 0; k < random_test_functions; ++k) functions.push_back(random_poly(m, 2, rng));

  for (const auto& tuple : wedge_basis(static_cast<int>(functions.size()), n - 1)) {
    ++check.cases;
    std::vector<Poly> fs;
    for (int t : tuple) fs.push_back(functions[static_cast<std::size_t>(t)]);
    const PolyVecField x = sharp(pi, exact_wedge(fs, m));
    const PolyMultiVec l = lie_multivec(x, pi);
    if (!l.is_zero()) {
      nlohmann::json f = nlohmann::json::array();
      for (const auto& p : fs) f.push_back(to_string(p));
      check.fail({{"functions", f}, {"hamiltonian", to_json(x)}, {"lie_derivative", to_json(l)}});
      return result;
    }
  }
  check.note = "verified on generator set: coordinates and " + std::to_string(random_test_functions) +
               " random polynomials of degree <= 2";
  result.structure = NambuPoisson(pi);
  return result;
}

// ---------------------------------------------------------------------------
// sections and brackets

GenSection::GenSection(PolyVecField x, PolyForm a) : vec(std::move(x)), form(std::move(a)) {
  if (vec.dim() != form.dim()) throw DimensionMismatch("GenSection", vec.dim(), form.dim());
  if (form.grade() < 1) throw std::invalid_argument("GenSection: arity must be at least 2");
}

GenSection GenSection::zero(int dim, int arity) { return {PolyVecField(dim), PolyForm(dim, arity - 1)}; }

namespace {

bool keeps(unsigned omit, int term) { return (omit & (1u << term)) == 0; }

void require_pi_shape(const PolyMultiVec& pi, const GenSection& s) {
  if (pi.dim() != s.dim()) throw DimensionMismatch("bivector section", pi.dim(), s.dim());
  if (pi.grade() != s.arity()) throw DimensionMismatch("multivector grade", s.arity(), pi.grade());
}

}  // namespace

PolyForm np_form_bracket_raw(const PolyMultiVec& pi, const PolyForm& a, const PolyForm& b, unsigned omit) {
  if (a.grade() != pi.grade() - 1 || b.grade() != a.grade()) throw DimensionMismatch("np_form_bracket grade", pi.grade() - 1, b.grade());
  const PolyVecField pa = sharp(pi, a);
  const PolyVecField pb = sharp(pi, b);
  PolyForm out(a.dim(), a.grade());
  if (keeps(omit, 0)) out += lie_form(pa, b);
  if (keeps(omit, 1)) out -= lie_form(pb, a);
  if (keeps(omit, 2)) out += ext_d(interior_vec(pb, a));
  return out;
}

PolyForm np_form_bracket(const NambuPoisson& np, const PolyForm& a, const PolyForm& b) {
  return np_form_bracket_raw(np.tensor(), a, b);
}

PolyForm std_pairing(const GenSection& s, const GenSection& t) {
  if (s.dim() != t.dim()) throw DimensionMismatch("std_pairing", s.dim(), t.dim());
  return interior_vec(s.vec, t.form) + interior_vec(t.vec, s.form);
}

GenSection std_courant(const GenSection& s, const GenSection& t, unsigned omit) {
  if (s.dim() != t.dim()) throw DimensionMismatch("std_courant", s.dim(), t.dim());
  if (s.arity() != t.arity()) throw DimensionMismatch("std_courant arity", s.arity(), t.arity());
  GenSection out = GenSection::zero(s.dim(), s.arity());
  if (keeps(omit, 0)) out.vec = vf_bracket(s.vec, t.vec);
  if (keeps(omit, 1)) out.form += lie_form(s.vec, t.form);
  if (keeps(omit, 2)) out.form -= interior_vec(t.vec, ext_d(s.form));
  return out;
}

GenSection pi_courant_raw(const PolyMultiVec& pi, const GenSection& s, const GenSection& t, unsigned omit,
                          unsigned omit_form_bracket) {
  require_pi_shape(pi, s);
  require_pi_shape(pi, t);
  const PolyVecField& x = s.vec;
  const PolyVecField& y = t.vec;
  const PolyForm& a = s.form;
  const PolyForm& b = t.form;
  const PolyForm lx_b = lie_form(x, b);
  const PolyForm iy_da = interior_vec(y, ext_d(a));

  GenSection out = GenSection::zero(s.dim(), s.arity());
  if (keeps(omit, 0)) out.vec += vf_bracket(x, y);
  if (keeps(omit, 1)) out.vec += vf_bracket(x, sharp(pi, b));
  if (keeps(omit, 2)) out.vec += vf_bracket(sharp(pi, a), y);
  if (keeps(omit, 3)) out.vec -= sharp(pi, lx_b);
  if (keeps(omit, 4)) out.vec += sharp(pi, iy_da);
  if (keeps(omit, 5)) out.form += lx_b;
  if (keeps(omit, 6)) out.form -= iy_da;
  if (keeps(omit, 7)) out.form += np_form_bracket_raw(pi, a, b, omit_form_bracket);
  return out;
}

GenSection pi_courant(const NambuPoisson& np, const GenSection& s, const GenSection& t) {
  return pi_courant_raw(np.tensor(), s, t);
}

PolyVecField rho_pi(const PolyMultiVec& pi, const GenSection& s) {
  require_pi_shape(pi, s);
  return s.vec + sharp(pi, s.form);
}

GenSection psi(const PolyMultiVec& pi, const GenSection& s) {
  require_pi_shape(pi, s);
  return {s.vec + sharp(pi, s.form), s.form};
}

GenSection psi_inverse(const PolyMultiVec& pi, const GenSection& s) {
  require_pi_shape(pi, s);
  return {s.vec - sharp(pi, s.form), s.form};
}

// ---------------------------------------------------------------------------
// generators

Poly random_poly(int dim, int degree, SeededRng& rng) {
  Poly p(dim);
  Poly::Exponent e(static_cast<std::size_t>(dim), 0);
  // Monomials of total degree ≤ degree, lexicographic in the exponent vector.
  std::function<void(int, int)> visit = [&](int var, int budget) {
    if (var == dim) {
      if (rng.coin()) p.add_term(e, rng.coefficient());
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      visit(var + 1, budget - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  visit(0, degree);
  return p;
}

PolyVecField random_vector_field(int dim, int degree, SeededRng& rng) {
  PolyVecField x(dim);
  for (int i = 0; i < dim; ++i) x[i] = random_poly(dim, degree, rng);
  return x;
}

PolyForm random_form(int dim, int grade, int degree, SeededRng& rng) {
  PolyForm w(dim, grade);
  for (const auto& idx : wedge_basis(dim, grade)) w.add_term(idx, random_poly(dim, degree, rng));
  return w;
}

GenSection random_section(int dim, int arity, int degree, SeededRng& rng) {
  PolyVecField x = random_vector_field(dim, degree, rng);
  PolyForm a = random_form(dim, arity - 1, degree, rng);
  return {std::move(x), std::move(a)};
}

// ---------------------------------------------------------------------------
// suites

namespace {

constexpr int section_degree = 1;
constexpr int function_degree = 2;

// Runs `body` for each sample until the first failure; body returns a
// witness on failure.
template <class Body>
void sample(Check& check, int samples, Body body) {
  for (int s = 0; s < samples; ++s) {
    ++check.cases;
    if (auto w = body(); w) {
      check.fail(std::move(*w));
      return;
    }
  }
}

using Witness = std::optional<nlohmann::json>;

}  // namespace

std::vector<Check> calculus_suite(int dim, int arity, const SuiteConfig& config) {
  std::vector<Check> out;

  Check dd("calculus.dd_zero");
  {
    SeededRng rng(config.seed, dd.id);
    sample(dd, config.samples, [&]() -> Witness {
      const PolyForm w = random_form(dim, rng.uniform(0, dim), 3, rng);
      const PolyForm r = ext_d(ext_d(w));
      if (r.is_zero()) return std::nullopt;
      return nlohmann::json{{"form", to_json(w)}, {"dd", to_json(r)}};
    });
  }
  out.push_back(std::move(dd));

  Check cartan("calculus.cartan_formula");
  {
    SeededRng rng(config.seed, cartan.id);
    sample(cartan, config.samples, [&]() -> Witness {
      const PolyVecField x = random_vector_field(dim, 2, rng);
      const PolyForm w = random_form(dim, rng.uniform(0, dim), 2, rng);
      const PolyForm lhs = lie_form(x, w);
      const PolyForm rhs = lie_form_components(x, w);
      if (lhs == rhs) return std::nullopt;
      return nlohmann::json{{"X", to_json(x)}, {"form", to_json(w)}, {"cartan", to_json(lhs)}, {"components", to_json(rhs)}};
    });
  }
  out.push_back(std::move(cartan));

  Check ib("calculus.interior_bracket");
  {
    SeededRng rng(config.seed, ib.id);
    sample(ib, config.samples, [&]() -> Witness {
      const PolyVecField x = random_vector_field(dim, 2, rng);
      const PolyVecField y = random_vector_field(dim, 2, rng);
      const PolyForm w = random_form(dim, rng.uniform(1, dim), 2, rng);
      const PolyForm lhs = interior_vec(vf_bracket(x, y), w);
      const PolyForm rhs = lie_form(x, interior_vec(y, w)) - interior_vec(y, lie_form(x, w));
      if (lhs == rhs) return std::nullopt;
      return nlohmann::json{{"X", to_json(x)}, {"Y", to_json(y)}, {"form", to_json(w)}, {"defect", to_json(lhs - rhs)}};
    });
  }
  out.push_back(std::move(ib));

  Check leib("calculus.standard_leibniz");
  {
    SeededRng rng(config.seed, leib.id);
    sample(leib, config.samples, [&]() -> Witness {
      const GenSection a = random_section(dim, arity, section_degree, rng);
      const GenSection b = random_section(dim, arity, section_degree, rng);
      const GenSection c = random_section(dim, arity, section_degree, rng);
      const GenSection lhs = std_courant(a, std_courant(b, c));
      const GenSection rhs = std_courant(std_courant(a, b), c) + std_courant(b, std_courant(a, c));
      if (lhs == rhs) return std::nullopt;
      return nlohmann::json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}, {"defect", to_json(lhs - rhs)}};
    });
  }
  out.push_back(std::move(leib));
  return out;
}

namespace {

struct Twisted {
  const PolyMultiVec& pi;
  TwistedBrackets mask;

  GenSection bracket(const GenSection& s, const GenSection& t) const {
    return pi_courant_raw(pi, s, t, mask.omit_twisted, mask.omit_form_bracket);
  }
  GenSection standard(const GenSection& s, const GenSection& t) const { return std_courant(s, t, mask.omit_standard); }

  // ⟦e1, e2⟧_π − ([X,π♯β] − π♯(L_X β) + π♯(i_Y dα)) + i_{π♯β} dα
  GenSection corrected(const GenSection& e1, const GenSection& e2) const {
    const PolyVecField pb = sharp(pi, e2.form);
    const PolyForm da = ext_d(e1.form);
    GenSection r = bracket(e1, e2);
    r.vec -= vf_bracket(e1.vec, pb) - sharp(pi, lie_form(e1.vec, e2.form)) + sharp(pi, interior_vec(e2.vec, da));
    r.form += interior_vec(pb, da);
    return r;
  }

  // L_{ρ(e1)}(e2, e3)_+ minus the corrected right-hand side.
  PolyForm corrected_defect(const GenSection& e1, const GenSection& e2, const GenSection& e3) const {
    const PolyForm lhs = lie_form(rho_pi(pi, e1), std_pairing(e2, e3));
    return lhs - std_pairing(corrected(e1, e2), e3) - std_pairing(e2, corrected(e1, e3));
  }

  PolyForm clean_defect(const GenSection& e1, const GenSection& e2, const GenSection& e3) const {
    const PolyForm lhs = lie_form(rho_pi(pi, e1), std_pairing(e2, e3));
    return lhs - std_pairing(bracket(e1, e2), e3) - std_pairing(e2, bracket(e1, e3));
  }
};

nlohmann::json triple_json(const GenSection& a, const GenSection& b, const GenSection& c) {
  return {{"e1", to_json(a)}, {"e2", to_json(b)}, {"e3", to_json(c)}};
}

}  // namespace

std::vector<Check> twisted_courant_suite(const NambuPoisson& np, const SuiteConfig& config, const TwistedBrackets& brackets) {
  const PolyMultiVec& pi = np.tensor();
  const int m = np.dim();
  const int n = np.arity();
  const Twisted tw{pi, brackets};
  std::vector<Check> out;

  Check leib("twisted.leibniz");
  {
    SeededRng rng(config.seed, leib.id);
    sample(leib, config.samples, [&]() -> Witness {
      const GenSection a = random_section(m, n, section_degree, rng);
      const GenSection b = random_section(m, n, section_degree, rng);
      const GenSection c = random_section(m, n, section_degree, rng);
      const GenSection lhs = tw.bracket(a, tw.bracket(b, c));
      const GenSection rhs = tw.bracket(tw.bracket(a, b), c) + tw.bracket(b, tw.bracket(a, c));
      if (lhs == rhs) return std::nullopt;
      auto w = triple_json(a, b, c);
      w["defect"] = to_json(lhs - rhs);
      return w;
    });
  }
  out.push_back(std::move(leib));

  Check module("twisted.module_rule");
  {
    SeededRng rng(config.seed, module.id);
    sample(module, config.samples, [&]() -> Witness {
      const GenSection s = random_section(m, n, section_degree, rng);
      const GenSection t = random_section(m, n, section_degree, rng);
      const Poly f = random_poly(m, function_degree, rng);
      const GenSection lhs = tw.bracket(s, f * t);
      const GenSection rhs = f * tw.bracket(s, t) + rho_pi(pi, s).apply(f) * t;
      if (lhs == rhs) return std::nullopt;
      return nlohmann::json{{"s", to_json(s)}, {"t", to_json(t)}, {"f", to_string(f)}, {"defect", to_json(lhs - rhs)}};
    });
  }
  out.push_back(std::move(module));

  Check self("twisted.self_bracket");
  {
    SeededRng rng(config.seed, self.id);
    sample(self, config.samples, [&]() -> Witness {
      const GenSection s = random_section(m, n, section_degree, rng);
      // d(X,α)_+ + d(π♯α,α)_+ − π♯(d(X,α)_+) with (X,α)_+ = i_X α
      const PolyForm d_xa = ext_d(interior_vec(s.vec, s.form));
      const GenSection expected{PolyVecField(m) - sharp(pi, d_xa), d_xa + ext_d(interior_vec(sharp(pi, s.form), s.form))};
      const GenSection got = tw.bracket(s, s);
      if (got == expected) return std::nullopt;
      return nlohmann::json{{"s", to_json(s)}, {"bracket", to_json(got)}, {"expected", to_json(expected)}};
    });
  }
  out.push_back(std::move(self));

  Check compat("twisted.pairing_compat");
  {
    SeededRng rng(config.seed, compat.id);
    sample(compat, config.samples, [&]() -> Witness {
      const GenSection a = random_section(m, n, section_degree, rng);
      const GenSection b = random_section(m, n, section_degree, rng);
      const GenSection c = random_section(m, n, section_degree, rng);
      const PolyForm d = tw.corrected_defect(a, b, c);
      if (d.is_zero()) return std::nullopt;
      auto w = triple_json(a, b, c);
      w["defect"] = to_json(d);
      return w;
    });
  }
  out.push_back(std::move(compat));

  Check conj("twisted.psi_conjugation");
  {
    SeededRng rng(config.seed, conj.id);
    sample(conj, config.samples, [&]() -> Witness {
      const GenSection s = random_section(m, n, section_degree, rng);
      const GenSection t = random_section(m, n, section_degree, rng);
      const GenSection lhs = psi(pi, tw.bracket(s, t));
      const GenSection rhs = tw.standard(psi(pi, s), psi(pi, t));
      if (lhs == rhs) return std::nullopt;
      return nlohmann::json{{"s", to_json(s)}, {"t", to_json(t)}, {"defect", to_json(lhs - rhs)}};
    });
  }
  out.push_back(std::move(conj));

  Check round("twisted.psi_roundtrip");
  {
    SeededRng rng(config.seed, round.id);
    sample(round, config.samples, [&]() -> Witness {
      const GenSection s = random_section(m, n, section_degree, rng);
      if (psi_inverse(pi, psi(pi, s)) == s && psi(pi, psi_inverse(pi, s)) == s) return std::nullopt;
      return nlohmann::json{{"s", to_json(s)}};
    });
  }
  out.push_back(std::move(round));

  Check pairing("twisted.psi_pairing_defect");
  {
    SeededRng rng(config.seed, pairing.id);
    sample(pairing, config.samples, [&]() -> Witness {
      const GenSection s = random_section(m, n, section_degree, rng);
      const GenSection t = random_section(m, n, section_degree, rng);
      const PolyForm got = std_pairing(psi(pi, s), psi(pi, t)) - std_pairing(s, t);
      const PolyForm expected = interior_vec(sharp(pi, s.form), t.form) + interior_vec(sharp(pi, t.form), s.form);
      if (got == expected) return std::nullopt;
      return nlohmann::json{{"s", to_json(s)}, {"t", to_json(t)}, {"difference", to_json(got)}, {"expected", to_json(expected)}};
    });
  }
  out.push_back(std::move(pairing));
  return out;
}

namespace {

PolyVecField hamiltonian(const PolyMultiVec& pi, SeededRng& rng) {
  std::vector<Poly> fs;
  for (int k = 0; k < pi.grade() - 1; ++k) fs.push_back(random_poly(pi.dim(), function_degree, rng));
  return sharp(pi, exact_wedge(fs, pi.dim()));
}

// d of a random (n−2)-form plus a random constant (n−1)-form.
PolyForm closed_form(int dim, int arity, SeededRng& rng) {
  return ext_d(random_form(dim, arity - 2, function_degree, rng)) + random_form(dim, arity - 1, 0, rng);
}

}  // namespace

std::vector<Check> hamiltonian_compat_suite(const NambuPoisson& np, const SuiteConfig& config, const TwistedBrackets& brackets) {
  const PolyMultiVec& pi = np.tensor();
  const int m = np.dim();
  const int n = np.arity();
  const Twisted tw{pi, brackets};
  std::vector<Check> out;

  Check clean("hamiltonian.pairing_compat");
  {
    SeededRng rng(config.seed, clean.id);
    sample(clean, config.samples, [&]() -> Witness {
      std::vector<GenSection> e;
      for (int k = 0; k < 3; ++k) {
        PolyVecField x = hamiltonian(pi, rng);
        e.emplace_back(std::move(x), closed_form(m, n, rng));
      }
      const PolyForm d = tw.clean_defect(e[0], e[1], e[2]);
      if (d.is_zero()) return std::nullopt;
      auto w = triple_json(e[0], e[1], e[2]);
      w["defect"] = to_json(d);
      return w;
    });
  }
  out.push_back(std::move(clean));

  // π♯(L_{π♯ξ}η) − [π♯ξ, π♯η] against (i_{dξ}π) π♯η
  Check sign("hamiltonian.sharp_lie_sign");
  {
    SeededRng rng(config.seed, sign.id);
    int found = 0;
    sample(sign, config.samples, [&]() -> Witness {
      const PolyForm xi = random_form(m, n - 1, function_degree, rng);
      const PolyForm eta = random_form(m, n - 1, section_degree, rng);
      const PolyVecField pxi = sharp(pi, xi);
      const PolyVecField peta = sharp(pi, eta);
      const PolyVecField lhs = sharp(pi, lie_form(pxi, eta)) - vf_bracket(pxi, peta);
      const PolyVecField base = contract(ext_d(xi), pi) * peta;
      const bool plus = lhs == base;
      const bool minus = lhs + base == PolyVecField(m);
      if (plus && minus) return std::nullopt;  // both sides vanish
      const int s = plus ? 1 : minus ? -1 : 0;
      if (s != 0 && (found == 0 || found == s)) {
        found = s;
        return std::nullopt;
      }
      return nlohmann::json{{"xi", to_json(xi)}, {"eta", to_json(eta)}, {"lhs", to_json(lhs)}, {"base", to_json(base)},
                            {"established_sign", found}};
    });
    if (sign.passed()) {
      if (found == 0) {
        sign.note = "sign undetermined: both sides vanished on every sample";
      } else {
        const bool n_minus_one = (found > 0) == ((n - 1) % 2 == 0);
        sign.note = std::string("sign = ") + (found > 0 ? "+1" : "-1") + " = (-1)^" + (n_minus_one ? "(n-1)" : "n") +
                    " for n = " + std::to_string(n);
      }
    }
  }
  out.push_back(std::move(sign));

  Check general("hamiltonian.nonclosed_corrected_compat");
  {
    SeededRng rng(config.seed, general.id);
    int clean_failures = 0;
    sample(general, config.samples, [&]() -> Witness {
      std::vector<GenSection> e;
      for (int k = 0; k < 3; ++k) {
        PolyVecField x = hamiltonian(pi, rng);
        e.emplace_back(std::move(x), random_form(m, n - 1, section_degree, rng));
      }
      if (!tw.clean_defect(e[0], e[1], e[2]).is_zero()) ++clean_failures;
      const PolyForm d = tw.corrected_defect(e[0], e[1], e[2]);
      if (d.is_zero()) return std::nullopt;
      auto w = triple_json(e[0], e[1], e[2]);
      w["defect"] = to_json(d);
      return w;
    });
    general.note = "uncorrected identity failed on " + std::to_string(clean_failures) + " of " +
                   std::to_string(general.cases) + " non-closed samples";
  }
  out.push_back(std::move(general));
  return out;
}

}  // namespace nlomni
