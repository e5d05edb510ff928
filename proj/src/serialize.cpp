#include "nlomni/serialize.hpp"

namespace nlomni {

nlohmann::json to_json(const Scalar& x) { return to_string(x); }

nlohmann::json to_json(const Vector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

nlohmann::json index_json(const WedgeIndex& idx) {
  auto arr = nlohmann::json::array();
  for (int i : idx) arr.push_back(i + 1);
  return arr;
}

std::string wedge_label(const WedgeIndex& idx) {
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += '^';
    s += 'e' + std::to_string(idx[k] + 1);
  }
  return s;
}

nlohmann::json to_json(const WedgeVector& w) {
  auto obj = nlohmann::json::object();
  for (const auto& [idx, c] : w.terms()) obj[wedge_label(idx)] = to_string(c);
  return obj;
}

nlohmann::json to_json(const Endo& a) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const TensorPairValue& t) {
  auto obj = nlohmann::json::object();
  for (const auto& [key, c] : t.terms()) {
    obj["e" + std::to_string(key.first + 1) + "|" + wedge_label(key.second)] = to_string(c);
  }
  return obj;
}

namespace {

std::string graded_label(const WedgeIndex& idx, const char* prefix) {
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += '^';
    s += prefix + std::to_string(idx[k] + 1);
  }
  return s;
}

template <class G>
nlohmann::json graded_json(const G& g, const char* prefix) {
  auto obj = nlohmann::json::object();
  for (const auto& [idx, p] : g.terms()) obj[graded_label(idx, prefix)] = to_string(p);
  return obj;
}

}  // namespace

nlohmann::json to_json(const Poly& p) { return to_string(p); }

nlohmann::json to_json(const PolyVecField& x) {
  auto arr = nlohmann::json::array();
  for (int i = 0; i < x.dim(); ++i) arr.push_back(to_string(x[i]));
  return arr;
}

nlohmann::json to_json(const PolyForm& w) { return graded_json(w, "dy"); }
nlohmann::json to_json(const PolyMultiVec& pi) { return graded_json(pi, "d"); }

nlohmann::json to_json(const GenSection& s) { return {{"vector", to_json(s.vec)}, {"form", to_json(s.form)}}; }

}  // namespace nlomni
