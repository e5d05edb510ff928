#include "nlomni/leibniz.hpp"

namespace nlomni {

SparseVector sparsify(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
  }
  return s;
}

Vector densify(const SparseVector& s, int dim) {
  Vector v = zero_vector(dim);
  for (const auto& [i, c] : s) v[static_cast<std::size_t>(i)] = c;
  return v;
}

BracketTable::BracketTable(int dim) : dim_(dim), products_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 0) throw std::invalid_argument("BracketTable: negative dimension");
}

BracketTable BracketTable::tabulate(int dim, const std::function<Vector(int, int)>& f) {
  BracketTable t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.set_product(i, j, f(i, j));
  return t;
}

void BracketTable::set_product(int i, int j, const Vector& value) {
  if (static_cast<int>(value.size()) != dim_) throw DimensionMismatch("BracketTable::set_product", dim_, static_cast<int>(value.size()));
  products_.at(slot(i, j)) = sparsify(value);
}

Scalar BracketTable::at(int i, int j, int k) const {
  for (const auto& [idx, c] : product(i, j)) {
    if (idx == k) return c;
  }
  return 0;
}

Vector BracketTable::apply(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("BracketTable::apply", dim_, static_cast<int>(x.size()));
  if (static_cast<int>(y.size()) != dim_) throw DimensionMismatch("BracketTable::apply", dim_, static_cast<int>(y.size()));
  Vector r = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    if (sgn(xi) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      const auto& yj = y[static_cast<std::size_t>(j)];
      if (sgn(yj) == 0) continue;
      const Scalar w = xi * yj;
      for (const auto& [k, c] : product(i, j)) r[static_cast<std::size_t>(k)] += w * c;
    }
  }
  return r;
}

Vector BracketTable::apply_left_basis(int i, const Vector& y) const {
  Vector r = zero_vector(dim_);
  for (int j = 0; j < dim_; ++j) {
    const auto& yj = y[static_cast<std::size_t>(j)];
    if (sgn(yj) == 0) continue;
    for (const auto& [k, c] : product(i, j)) r[static_cast<std::size_t>(k)] += yj * c;
  }
  return r;
}

Vector BracketTable::apply_right_basis(const Vector& x, int j) const {
  Vector r = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    if (sgn(xi) == 0) continue;
    for (const auto& [k, c] : product(i, j)) r[static_cast<std::size_t>(k)] += xi * c;
  }
  return r;
}

bool BracketTable::is_zero() const {
  for (const auto& p : products_) {
    if (!p.empty()) return false;
  }
  return true;
}

BracketTable operator+(const BracketTable& a, const BracketTable& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("BracketTable +", a.dim_, b.dim_);
  return BracketTable::tabulate(a.dim_, [&](int i, int j) { return a.product_dense(i, j) + b.product_dense(i, j); });
}

LeibnizResult leibniz_check(const BracketTable& t) {
  LeibnizResult result;
  const int d = t.dim();
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      const Vector xy = t.product_dense(x, y);
      for (int z = 0; z < d; ++z) {
        ++result.triples;
        Vector defect = t.apply_left_basis(x, t.product_dense(y, z));
        axpy(defect, -1, t.apply_left_basis(y, t.product_dense(x, z)));
        axpy(defect, -1, t.apply_right_basis(xy, z));
        if (!is_zero(defect)) {
          result.witness = LeibnizWitness{x, y, z, std::move(defect)};
          return result;
        }
      }
    }
  }
  return result;
}

namespace {

void require_square(const BracketTable& t, const EndoOnLeibniz& n, const char* what) {
  if (t.dim() != n.dim()) throw DimensionMismatch(what, t.dim(), n.dim());
}

}  // namespace

BracketTable deformed_bracket(const BracketTable& t, const EndoOnLeibniz& n) {
  require_square(t, n, "deformed_bracket");
  return BracketTable::tabulate(t.dim(), [&](int i, int j) {
    Vector r = t.apply_right_basis(n.column(i), j);
    axpy(r, 1, t.apply_left_basis(i, n.column(j)));
    axpy(r, -1, n.apply(t.product_dense(i, j)));
    return r;
  });
}

BracketTable nijenhuis_torsion(const BracketTable& t, const EndoOnLeibniz& n) {
  require_square(t, n, "nijenhuis_torsion");
  const BracketTable deformed = deformed_bracket(t, n);
  return BracketTable::tabulate(t.dim(), [&](int i, int j) {
    return t.apply(n.column(i), n.column(j)) - n.apply(deformed.product_dense(i, j));
  });
}

std::optional<PairWitness> first_nonzero(const BracketTable& t) {
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      if (!t.product(i, j).empty()) return PairWitness{i, j, t.product_dense(i, j)};
  return std::nullopt;
}

NijenhuisConsequences nijenhuis_consequences_check(const BracketTable& t, const EndoOnLeibniz& n) {
  require_square(t, n, "nijenhuis_consequences_check");
  NijenhuisConsequences out;
  out.torsion = first_nonzero(nijenhuis_torsion(t, n));

  const BracketTable deformed = deformed_bracket(t, n);
  out.deformed = leibniz_check(deformed);

  const BracketTable morphism_defect = BracketTable::tabulate(t.dim(), [&](int i, int j) {
    return n.apply(deformed.product_dense(i, j)) - t.apply(n.column(i), n.column(j));
  });
  out.morphism = first_nonzero(morphism_defect);

  out.sum = leibniz_check(t + deformed);
  return out;
}

}  // namespace nlomni
