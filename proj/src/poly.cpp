#include "nlomni/poly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nlomni/multilinear.hpp"

namespace nlomni {

namespace {
thread_local int degree_cap = 12;
}

DegreeOverflow::DegreeOverflow(int degree, int cap)
    : std::runtime_error("polynomial degree " + std::to_string(degree) + " exceeds the cap of " + std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

int max_degree() { return degree_cap; }

DegreeCap::DegreeCap(int cap) : previous_(degree_cap) {
  if (cap < 0 || cap > 255) throw std::invalid_argument("DegreeCap: cap must lie in [0, 255]");
  degree_cap = cap;
}

DegreeCap::~DegreeCap() { degree_cap = previous_; }

int Monomial::degree() const {
  int d = 0;
  for (std::uint64_t w : words) {
    for (; w != 0; w >>= 8) d += static_cast<int>(w & 0xff);
  }
  return d;
}

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("Poly: negative number of variables");
  if (nvars > Monomial::max_vars) {
    throw std::invalid_argument("Poly: at most " + std::to_string(Monomial::max_vars) + " variables are supported");
  }
}

Monomial Poly::monomial(const Exponent& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("Poly exponent", nvars_, static_cast<int>(e.size()));
  Monomial m;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 || e[k] > 255) throw std::out_of_range("Poly: exponent out of range");
    m.set(k, e[k]);
  }
  return m;
}

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial{}, Coef(c));
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("Poly::variable: index out of range");
  Poly p(nvars);
  Monomial m;
  m.set(static_cast<std::size_t>(i), 1);
  p.terms_.emplace_back(m, 1);
  return p;
}

Poly Poly::linear(const Vector& coeffs) {
  const int m = static_cast<int>(coeffs.size());
  Poly p(m);
  // y_k sorts after y_{k+1}, so walk backwards.
  for (int k = m - 1; k >= 0; --k) {
    if (sgn(coeffs[static_cast<std::size_t>(k)]) == 0) continue;
    Monomial mono;
    mono.set(static_cast<std::size_t>(k), 1);
    p.terms_.emplace_back(mono, Coef(coeffs[static_cast<std::size_t>(k)]));
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    return std::hash<std::uint64_t>{}(m.words[0] * 0x9e3779b97f4a7c15ULL ^ m.words[1]);
  }
};

auto by_monomial = [](const auto& term, const Monomial& m) { return term.first < m; };

}  // namespace

Scalar Poly::coeff(const Exponent& e) const {
  const Monomial m = monomial(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, by_monomial);
  return it != terms_.end() && it->first == m ? it->second.to_scalar() : Scalar(0);
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  const Monomial m = monomial(e);
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, by_monomial);
  if (it == terms_.end() || it->first != m) {
    terms_.emplace(it, m, Coef(c));
    return;
  }
  it->second += Coef(c);
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("Poly::derivative: index out of range");
  const auto slot = static_cast<std::size_t>(i);
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[slot];
    if (k == 0) continue;
    Monomial d = e;
    d.set(slot, k - 1);
    out.terms_.emplace_back(d, c * Coef(k));
  }
  // Lowering one exponent can reorder terms.
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void Poly::require_compatible(const Poly& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("Poly", nvars_, other.nvars_);
}

void Poly::merge(const Poly& other, int sign) {
  require_compatible(other);
  if (other.terms_.empty()) return;
  Terms out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : -b->second);
      ++b;
    } else {
      Coef c = sign > 0 ? a->second + b->second : a->second - b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& other) {
  merge(other, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  merge(other, -1);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  const Coef k(c);
  for (auto& [e, v] : terms_) v *= k;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  Poly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  const int d = a.degree() + b.degree();
  if (d > max_degree()) throw DegreeOverflow(d, max_degree());
  std::unordered_map<Monomial, Coef, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ea + eb);
      it->second += ca * cb;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first, then reverse-lexicographic within a degree.
  Poly::Terms terms(p.terms().rbegin(), p.terms().rend());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.degree() > y.first.degree(); });
  bool first = true;
  for (const auto& [e, coef] : terms) {
    const Scalar c = coef.to_scalar();
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < static_cast<std::size_t>(p.nvars()); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace nlomni
