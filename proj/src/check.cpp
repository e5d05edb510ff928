#include "nlomni/check.hpp"

#include <algorithm>

namespace nlomni {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

void Check::fail(nlohmann::json w) {
  if (status == Status::fail) return;
  status = Status::fail;
  witness = std::move(w);
}

void Check::skip(std::string reason) {
  status = Status::skip;
  note = std::move(reason);
}

Status combined_status(const std::vector<Check>& checks) {
  if (std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; })) return Status::fail;
  if (!checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::skip; }))
    return Status::skip;
  return Status::pass;
}

nlohmann::json to_json(const SuiteConfig& c) {
  return {{"mode", c.mode == SuiteConfig::Mode::exhaustive ? "exhaustive" : "random"},
          {"seed", c.seed},
          {"samples", c.samples},
          {"max_degree", c.max_degree}};
}

}  // namespace nlomni
