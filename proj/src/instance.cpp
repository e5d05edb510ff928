#include "nlomni/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nlomni/serialize.hpp"

namespace nlomni {

std::string_view to_string(InstanceErrorCode c) {
  switch (c) {
    case InstanceErrorCode::io: return "E_IO";
    case InstanceErrorCode::schema: return "E_SCHEMA";
    case InstanceErrorCode::args_order: return "E_ARGS_ORDER";
    case InstanceErrorCode::rational: return "E_RATIONAL";
    case InstanceErrorCode::index: return "E_INDEX";
  }
  return "E_?";
}

InstanceError::InstanceError(InstanceErrorCode code, std::string field, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(code)) + " at " + (line > 0 ? "line " + std::to_string(line) : field.empty() ? "/" : field) +
                         ": " + message),
      code_(code),
      field_(std::move(field)),
      line_(line) {}

namespace {

using json = nlohmann::json;

[[noreturn]] void schema(const std::string& field, const std::string& message) {
  throw InstanceError(InstanceErrorCode::schema, field, message);
}

int require_int(const json& doc, const std::string& key, int lo) {
  const std::string field = "/" + key;
  if (!doc.contains(key)) schema(field, "missing required field");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) schema(field, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 64) schema(field, "out of range [" + std::to_string(lo) + ", 64]");
  return static_cast<int>(x);
}

int parse_index(const json& v, int dim, const std::string& field) {
  if (!v.is_number_integer()) schema(field, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 1 || i > dim) throw InstanceError(InstanceErrorCode::index, field, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<int>(i) - 1;
}

int parse_index_key(const std::string& key, int dim, const std::string& field) {
  const bool digits = !key.empty() && key.size() <= 9 && std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits) throw InstanceError(InstanceErrorCode::index, field, "value key \"" + key + "\" is not an index");
  const int i = std::stoi(key);
  if (i < 1 || i > dim) throw InstanceError(InstanceErrorCode::index, field, "index " + key + " outside 1.." + std::to_string(dim));
  return i - 1;
}

}  // namespace

Instance parse_instance(const json& doc, std::string default_name) {
  if (!doc.is_object()) schema("", "top level must be an object");
  static const std::set<std::string> known{"name", "description", "n", "dim", "basis", "brackets"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) schema("/" + key, "unknown field");
  }
  std::string name = std::move(default_name);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema("/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const int n = require_int(doc, "n", 2);
  const int dim = require_int(doc, "dim", 1);
  if (n > dim) schema("/n", "arity exceeds dimension");

  NLieAlgebra g(n, dim);
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != dim) schema("/basis", "expected " + std::to_string(dim) + " names");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) schema("/basis/" + std::to_string(i), "expected a string");
      g.basis_names.push_back(b[i].get<std::string>());
    }
  }

  if (!doc.contains("brackets")) schema("/brackets", "missing required field");
  const json& brackets = doc["brackets"];
  if (!brackets.is_array()) schema("/brackets", "expected an array");
  std::set<WedgeIndex> seen;
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const std::string at = "/brackets/" + std::to_string(k);
    const json& entry = brackets[k];
    if (!entry.is_object()) schema(at, "expected an object");
    for (const auto& [key, _] : entry.items()) {
      if (key != "args" && key != "value") schema(at + "/" + key, "unknown field");
    }
    if (!entry.contains("args") || !entry["args"].is_array()) schema(at + "/args", "expected an array");
    const json& args = entry["args"];
    if (static_cast<int>(args.size()) != n) schema(at + "/args", "expected " + std::to_string(n) + " indices");
    WedgeIndex idx;
    for (std::size_t s = 0; s < args.size(); ++s) idx.push_back(parse_index(args[s], dim, at + "/args/" + std::to_string(s)));
    if (!is_increasing(idx)) throw InstanceError(InstanceErrorCode::args_order, at + "/args", "indices must be strictly increasing");
    if (!seen.insert(idx).second) schema(at + "/args", "duplicate bracket entry");

    if (!entry.contains("value") || !entry["value"].is_object()) schema(at + "/value", "expected an object");
    Vector v = zero_vector(dim);
    for (const auto& [key, lit] : entry["value"].items()) {
      const std::string field = at + "/value/" + key;
      const int i = parse_index_key(key, dim, field);
      if (!lit.is_string()) schema(field, "rationals are strings \"p\" or \"p/q\"");
      try {
        v[static_cast<std::size_t>(i)] = parse_scalar(lit.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw InstanceError(InstanceErrorCode::rational, field, "bad rational literal \"" + lit.get<std::string>() + "\"");
      }
    }
    g.set_bracket(idx, v);
  }
  return {std::move(name), std::move(g)};
}

Instance parse_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(InstanceErrorCode::io, "", "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw InstanceError(InstanceErrorCode::schema, "", "malformed JSON", line);
  }
  return parse_instance(doc, path.stem().string());
}

nlohmann::json to_instance_json(const std::string& name, const NLieAlgebra& g) {
  json doc{{"name", name}, {"n", g.arity()}, {"dim", g.dim()}};
  if (!g.basis_names.empty()) doc["basis"] = g.basis_names;
  auto brackets = json::array();
  for (const auto& [idx, v] : g.constants()) {
    json value = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) value[std::to_string(i + 1)] = to_string(v[i]);
    }
    brackets.push_back({{"args", index_json(idx)}, {"value", std::move(value)}});
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

}  // namespace nlomni
