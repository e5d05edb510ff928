#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace nlomni {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

/// Outcome of one executable identity. A failed check keeps the first
/// witness encountered in its canonical iteration order.
struct Check {
  std::string id;
  Status status = Status::pass;
  std::uint64_t cases = 0;
  nlohmann::json witness;  // null unless status == fail
  std::string note;

  explicit Check(std::string id_) : id(std::move(id_)) {}

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  /// Records a failure. Only the first witness is kept.
  void fail(nlohmann::json w);
  void skip(std::string reason);
};

/// Worst status of a list: any fail → fail; all skip → skip; else pass.
Status combined_status(const std::vector<Check>& checks);

struct SuiteConfig {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 42;
  int samples = 200;
  int max_degree = 12;
};

nlohmann::json to_json(const SuiteConfig& c);

}  // namespace nlomni
