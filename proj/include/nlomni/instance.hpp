#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nlomni/nlie.hpp"

namespace nlomni {

enum class InstanceErrorCode { io, schema, args_order, rational, index };

/// "E_IO", "E_SCHEMA", "E_ARGS_ORDER", "E_RATIONAL", "E_INDEX"
std::string_view to_string(InstanceErrorCode c);

/// Rejected instance file. field is a JSON pointer into the document
/// ("/brackets/2/args"); line is set when the text itself does not parse.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorCode code, std::string field, const std::string& message, int line = 0);
  InstanceErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  InstanceErrorCode code_;
  std::string field_;
  int line_;
};

struct Instance {
  std::string name;
  NLieAlgebra algebra;
};

// Instance file:
//   {"name": "fix_b", "n": 3, "dim": 4, "basis": ["e1", ...],
//    "brackets": [{"args": [1, 2, 3], "value": {"4": "1"}}]}
// Indices are 1-based; args strictly increasing; values are "p" or "p/q".

Instance parse_instance(const nlohmann::json& doc, std::string default_name = "instance");
Instance parse_instance_file(const std::filesystem::path& path);

nlohmann::json to_instance_json(const std::string& name, const NLieAlgebra& g);

}  // namespace nlomni
