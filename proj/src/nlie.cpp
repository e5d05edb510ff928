#include "nlomni/nlie.hpp"

#include <functional>

namespace nlomni {

NLieAlgebra::NLieAlgebra(int arity, int dim) : arity_(arity), dim_(dim) {
  if (arity < 2) throw std::invalid_argument("NLieAlgebra: arity must be at least 2");
  if (dim < 1) throw std::invalid_argument("NLieAlgebra: dimension must be at least 1");
}

void NLieAlgebra::set_bracket(const WedgeIndex& args, const Vector& value) {
  if (static_cast<int>(args.size()) != arity_) throw DimensionMismatch("NLieAlgebra::set_bracket arity", arity_, static_cast<int>(args.size()));
  if (!is_increasing(args)) throw std::invalid_argument("NLieAlgebra::set_bracket: arguments must be strictly increasing");
  if (args.front() < 0 || args.back() >= dim_) throw std::out_of_range("NLieAlgebra::set_bracket: index out of range");
  if (static_cast<int>(value.size()) != dim_) throw DimensionMismatch("NLieAlgebra::set_bracket value", dim_, static_cast<int>(value.size()));
  if (is_zero(value)) constants_.erase(args);
  else constants_[args] = value;
}

Vector NLieAlgebra::bracket_basis(WedgeIndex args) const {
  if (static_cast<int>(args.size()) != arity_) throw DimensionMismatch("NLieAlgebra::bracket_basis arity", arity_, static_cast<int>(args.size()));
  const int sign = sort_with_sign(args);
  if (sign == 0) return zero_vector(dim_);
  auto it = constants_.find(args);
  if (it == constants_.end()) return zero_vector(dim_);
  return sign > 0 ? it->second : Scalar(-1) * it->second;
}

Vector NLieAlgebra::bracket(std::span<const Vector> args) const {
  if (static_cast<int>(args.size()) != arity_) throw DimensionMismatch("NLieAlgebra::bracket arity", arity_, static_cast<int>(args.size()));
  for (const auto& a : args) {
    if (static_cast<int>(a.size()) != dim_) throw DimensionMismatch("NLieAlgebra::bracket", dim_, static_cast<int>(a.size()));
  }
  Vector out = zero_vector(dim_);
  if (constants_.empty()) return out;
  WedgeIndex idx(static_cast<std::size_t>(arity_));
  std::function<void(std::size_t, const Scalar&)> expand = [&](std::size_t slot, const Scalar& weight) {
    if (slot == args.size()) {
      axpy(out, weight, bracket_basis(idx));
      return;
    }
    for (int i = 0; i < dim_; ++i) {
      const auto& c = args[slot][static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      idx[slot] = i;
      expand(slot + 1, weight * c);
    }
  };
  expand(0, Scalar(1));
  return out;
}

// ---------------------------------------------------------------------------

FIResult fi_check(const NLieAlgebra& g, FIMode mode) {
  FIResult result;
  const int n = g.arity();
  const int m = g.dim();
  for (const auto& u : wedge_basis(m, n - 1)) {
    std::vector<Vector> args;
    for (int i : u) args.push_back(unit_vector(m, i));
    args.push_back(zero_vector(m));

    // ad_u on basis vectors
    std::vector<Vector> ad_u(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
      WedgeIndex t = u;
      t.push_back(l);
      ad_u[static_cast<std::size_t>(l)] = g.bracket_basis(t);
    }

    for (const auto& v : wedge_basis(m, n)) {
      ++result.cases;
      args.back() = g.bracket_basis(v);
      Vector defect = g.bracket(args);
      std::vector<Vector> vs;
      for (int i : v) vs.push_back(unit_vector(m, i));
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<Vector> replaced = vs;
        replaced[i] = ad_u[static_cast<std::size_t>(v[i])];
        axpy(defect, -1, g.bracket(replaced));
      }
      if (!is_zero(defect)) {
        result.violations.push_back(FIWitness{u, v, std::move(defect)});
        if (mode == FIMode::first_witness) return result;
      }
    }
  }
  return result;
}

FundamentalIdentityError::FundamentalIdentityError(FIWitness w)
    : std::runtime_error("bracket violates the Fundamental Identity"), witness_(std::move(w)) {}

void require_fi(const NLieAlgebra& g) {
  auto r = fi_check(g);
  if (!r.ok()) throw FundamentalIdentityError(std::move(r.violations.front()));
}

Endo ad(const NLieAlgebra& g, const FundamentalObject& u) {
  if (u.dim() != g.dim()) throw DimensionMismatch("ad", g.dim(), u.dim());
  if (u.grade() != g.arity() - 1) throw DimensionMismatch("ad grade", g.arity() - 1, u.grade());
  Endo a(g.dim());
  for (const auto& [idx, c] : u.terms()) {
    for (int l = 0; l < g.dim(); ++l) {
      WedgeIndex t = idx;
      t.push_back(l);
      const Vector col = g.bracket_basis(std::move(t));
      for (int k = 0; k < g.dim(); ++k) {
        const auto& x = col[static_cast<std::size_t>(k)];
        if (sgn(x) != 0) a(k, l) += c * x;
      }
    }
  }
  return a;
}

FundamentalObject fo_compose(const NLieAlgebra& g, const FundamentalObject& u, const FundamentalObject& v) {
  if (v.dim() != g.dim()) throw DimensionMismatch("fo_compose", g.dim(), v.dim());
  return endo_derivation(ad(g, u), v);
}

BracketTable induced_leibniz_unchecked(const NLieAlgebra& g) {
  const auto basis = wedge_basis(g.dim(), g.arity() - 1);
  std::map<WedgeIndex, int> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<int>(i);
  const int d = static_cast<int>(basis.size());
  std::vector<Endo> ads;
  for (const auto& b : basis) ads.push_back(ad(g, WedgeVector::basis(g.dim(), b)));
  return BracketTable::tabulate(d, [&](int i, int j) {
    const auto w = endo_derivation(ads[static_cast<std::size_t>(i)], WedgeVector::basis(g.dim(), basis[static_cast<std::size_t>(j)]));
    Vector out = zero_vector(d);
    for (const auto& [idx, c] : w.terms()) out[static_cast<std::size_t>(position.at(idx))] = c;
    return out;
  });
}

BracketTable induced_leibniz(const NLieAlgebra& g) {
  require_fi(g);
  return induced_leibniz_unchecked(g);
}

namespace {

// Defect of the derivation rule for A on the basis tuple `args`.
Vector derivation_defect(const NLieAlgebra& g, const Endo& a, const WedgeIndex& args) {
  const int m = g.dim();
  Vector defect = a.apply(g.bracket_basis(args));
  std::vector<Vector> vs;
  for (int i : args) vs.push_back(unit_vector(m, i));
  for (std::size_t r = 0; r < args.size(); ++r) {
    std::vector<Vector> replaced = vs;
    replaced[r] = a.column(args[r]);
    axpy(defect, -1, g.bracket(replaced));
  }
  return defect;
}

}  // namespace

bool is_derivation(const NLieAlgebra& g, const Endo& a) {
  if (a.dim() != g.dim()) throw DimensionMismatch("is_derivation", g.dim(), a.dim());
  for (const auto& args : wedge_basis(g.dim(), g.arity())) {
    if (!is_zero(derivation_defect(g, a, args))) return false;
  }
  return true;
}

std::vector<Endo> derivation_basis(const NLieAlgebra& g) {
  const int m = g.dim();
  const int unknowns = m * m;  // A(row, col) ↦ row * m + col
  std::vector<Vector> rows;
  for (const auto& args : wedge_basis(m, g.arity())) {
    // The defect is linear in A; its coefficient on each unknown is the
    // defect of the corresponding matrix unit.
    std::vector<Vector> per_unknown;
    per_unknown.reserve(static_cast<std::size_t>(unknowns));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) per_unknown.push_back(derivation_defect(g, Endo::unit(m, r, c), args));
    for (int k = 0; k < m; ++k) {
      Vector row = zero_vector(unknowns);
      for (int q = 0; q < unknowns; ++q) row[static_cast<std::size_t>(q)] = per_unknown[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  std::vector<Endo> basis;
  for (const auto& x : nullspace(std::move(rows), unknowns)) {
    Endo a(m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = x[static_cast<std::size_t>(r * m + c)];
    basis.push_back(std::move(a));
  }
  return basis;
}

NLieAlgebra change_basis(const NLieAlgebra& g, const Endo& p) {
  if (p.dim() != g.dim()) throw DimensionMismatch("change_basis", g.dim(), p.dim());
  const auto p_inv = inverse(p);
  if (!p_inv) throw std::invalid_argument("change_basis: matrix is singular");
  NLieAlgebra out(g.arity(), g.dim());
  for (const auto& args : wedge_basis(g.dim(), g.arity())) {
    std::vector<Vector> images;
    for (int i : args) images.push_back(p.column(i));
    out.set_bracket(args, p_inv->apply(g.bracket(images)));
  }
  out.basis_names = g.basis_names;
  return out;
}

}  // namespace nlomni
