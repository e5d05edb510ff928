#include "nlomni/runner.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "nlomni/leibniz.hpp"
#include "nlomni/linearize.hpp"
#include "nlomni/omni.hpp"
#include "nlomni/polycalc.hpp"
#include "nlomni/serialize.hpp"

namespace nlomni {

std::string_view tool_version() { return NLOMNI_VERSION; }

namespace {

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName command_names[] = {
    {Command::nlie, "check-nlie"},
    {Command::omni, "check-omni"},
    {Command::nonabelian, "check-nonabelian"},
    {Command::nambu, "check-nambu"},
    {Command::linearization, "check-linearization"},
    {Command::calculus, "check-calculus"},
    {Command::all, "all"},
};

const std::vector<std::string> twisted_ids{"twisted.leibniz",      "twisted.module_rule",   "twisted.self_bracket",
                                           "twisted.pairing_compat", "twisted.psi_conjugation", "twisted.psi_roundtrip",
                                           "twisted.psi_pairing_defect"};
const std::vector<std::string> hamiltonian_ids{"hamiltonian.pairing_compat", "hamiltonian.sharp_lie_sign",
                                               "hamiltonian.nonclosed_corrected_compat"};

void append(std::vector<Check>& out, std::vector<Check> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

void skip_all(std::vector<Check>& out, const std::vector<std::string>& ids, const std::string& reason) {
  for (const auto& id : ids) {
    Check c(id);
    c.skip(reason);
    out.push_back(std::move(c));
  }
}

nlohmann::json fi_witness(const FIWitness& w) {
  return {{"u", index_json(w.u)}, {"v", index_json(w.v)}, {"defect", to_json(w.defect)}};
}

// Prerequisite of the suites that need an n-Lie algebra.
Check fi_prerequisite(const std::string& suite, const NLieAlgebra& g) {
  Check c(suite + ".fundamental_identity");
  const auto r = fi_check(g);
  c.cases = r.cases;
  if (!r.ok()) c.fail(fi_witness(r.violations.front()));
  return c;
}

const std::string needs_fi = "requires the Fundamental Identity";

std::vector<Check> nlie_suite(const NLieAlgebra& g) {
  Check fi("nlie.fundamental_identity");
  const auto r = fi_check(g);
  fi.cases = r.cases;
  if (!r.ok()) fi.fail(fi_witness(r.violations.front()));

  Check lb("nlie.induced_leibniz");
  const auto wedges = wedge_basis(g.dim(), g.arity() - 1);
  const auto lr = leibniz_check(induced_leibniz_unchecked(g));
  lb.cases = lr.triples;
  if (lr.witness) {
    const auto& w = *lr.witness;
    auto label = [&](int k) { return wedge_label(wedges[static_cast<std::size_t>(k)]); };
    lb.fail({{"x", label(w.x)}, {"y", label(w.y)}, {"z", label(w.z)}, {"defect", to_json(WedgeVector::from_vector(w.defect))}});
  }
  return {std::move(fi), std::move(lb)};
}

std::vector<Check> omni_suite(const NLieAlgebra& g, const SuiteConfig& config) {
  return {omni_leibniz_check(g.dim(), g.arity()), omni_compat_check(g.dim(), g.arity(), config), graph_test(g)};
}

std::vector<Check> nonabelian_suite(const NLieAlgebra& g) {
  std::vector<Check> out{fi_prerequisite("nonabelian", g)};
  if (out.front().failed()) {
    skip_all(out, {"nonabelian.structure"}, needs_fi);
    return out;
  }
  const NonabelianOmni omni(g);
  append(out, nonabelian_compat_check(omni));
  append(out, nijenhuis_suite(omni));
  append(out, deformation_identity_check(omni));
  return out;
}

std::vector<Check> nambu_suite(const NLieAlgebra& g, const SuiteConfig& config) {
  std::vector<Check> out{fi_prerequisite("nambu", g)};
  std::vector<std::string> rest{"nambu.nambu_poisson"};
  rest.insert(rest.end(), twisted_ids.begin(), twisted_ids.end());
  rest.insert(rest.end(), hamiltonian_ids.begin(), hamiltonian_ids.end());
  if (out.front().failed()) {
    skip_all(out, rest, needs_fi);
    return out;
  }
  auto np = nambu_poisson_check(linear_np(g), config);
  Check gate("nambu.nambu_poisson");
  gate.cases = np.check.cases;
  gate.note = np.check.note;
  if (!np.structure) {
    const std::string reason = "linear n-vector field of the algebra is not Nambu-Poisson";
    gate.skip(reason + "; witness " + np.check.witness.dump());
    out.push_back(std::move(gate));
    skip_all(out, {rest.begin() + 1, rest.end()}, reason);
    return out;
  }
  out.push_back(std::move(gate));
  append(out, twisted_courant_suite(*np.structure, config));
  append(out, hamiltonian_compat_suite(*np.structure, config));
  return out;
}

std::vector<Check> linearization_suite(const NLieAlgebra& g, const SuiteConfig& config) {
  std::vector<Check> out;
  append(out, standard_hat_identities(g.dim(), g.arity(), config));
  append(out, standard_linearization_suite(g.dim(), g.arity(), config));
  out.push_back(fi_prerequisite("linearization", g));
  if (out.back().failed()) {
    skip_all(out, {"linear_np", "nambu_linearization"}, needs_fi);
    return out;
  }
  append(out, linear_np_identities(g, config));
  append(out, nambu_linearization_suite(g, config));
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::json check_json(const Check& c) {
  nlohmann::json j{{"id", c.id}, {"status", to_string(c.status)}, {"cases", c.cases}};
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : command_names)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : command_names)
    if (n == name) return cmd;
  return std::nullopt;
}

std::vector<std::string> suites_of(Command c) {
  switch (c) {
    case Command::nlie: return {"nlie"};
    case Command::omni: return {"nonabelian", "omni"};
    case Command::nonabelian: return {"nonabelian"};
    case Command::nambu: return {"nambu"};
    case Command::linearization: return {"linearization"};
    case Command::calculus: return {"calculus"};
    case Command::all: return {"calculus", "linearization", "nambu", "nlie", "nonabelian", "omni"};
  }
  return {};
}

Status RunResult::status() const {
  bool any_pass = false;
  for (const auto& t : targets) {
    for (const auto& s : t.suites) {
      const Status st = s.status();
      if (st == Status::fail) return Status::fail;
      if (st == Status::pass) any_pass = true;
    }
  }
  return any_pass ? Status::pass : Status::skip;
}

SuiteResult run_suite(const std::string& id, const NLieAlgebra& g, const SuiteConfig& config) {
  const DegreeCap cap(config.max_degree);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{id, {}, 0};
  if (id == "nlie") r.checks = nlie_suite(g);
  else if (id == "omni") r.checks = omni_suite(g, config);
  else if (id == "nonabelian") r.checks = nonabelian_suite(g);
  else if (id == "nambu") r.checks = nambu_suite(g, config);
  else if (id == "linearization") r.checks = linearization_suite(g, config);
  else if (id == "calculus") r.checks = calculus_suite(g.dim(), g.arity(), config);
  else throw std::invalid_argument("unknown suite " + id);
  r.timing_ms = elapsed_ms(start);
  return r;
}

RunResult run(Command command, const std::vector<Instance>& targets, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  out.command = command;
  out.config = config;
  for (const auto& t : targets) {
    TargetResult tr{t.name, t.algebra.arity(), t.algebra.dim(), {}};
    for (const auto& id : suites_of(command)) tr.suites.push_back(run_suite(id, t.algebra, config));
    out.targets.push_back(std::move(tr));
  }
  out.timing_ms = elapsed_ms(start);
  return out;
}

nlohmann::json report_json(const RunResult& r) {
  auto targets = nlohmann::json::array();
  for (const auto& t : r.targets) {
    auto suites = nlohmann::json::array();
    for (const auto& s : t.suites) {
      auto checks = nlohmann::json::array();
      for (const auto& c : s.checks) checks.push_back(check_json(c));
      suites.push_back({{"id", s.id}, {"status", to_string(s.status())}, {"timing_ms", s.timing_ms}, {"checks", std::move(checks)}});
    }
    targets.push_back({{"name", t.name}, {"n", t.arity}, {"dim", t.dim}, {"suites", std::move(suites)}});
  }
  return {{"schema", report_schema},
          {"tool_version", tool_version()},
          {"command", to_string(r.command)},
          {"config", to_json(r.config)},
          {"status", to_string(r.status())},
          {"timing_ms", r.timing_ms},
          {"targets", std::move(targets)}};
}

nlohmann::json strip_timing(nlohmann::json report) {
  if (report.is_object()) {
    report.erase("timing_ms");
    for (auto& [_, v] : report.items()) v = strip_timing(std::move(v));
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_timing(std::move(v));
  }
  return report;
}

std::string report_text(const RunResult& r) {
  std::ostringstream os;
  os << "nlomni " << tool_version() << "  " << to_string(r.command) << "  mode="
     << (r.config.mode == SuiteConfig::Mode::exhaustive ? "exhaustive" : "random") << " seed=" << r.config.seed
     << " samples=" << r.config.samples << " max_degree=" << r.config.max_degree << "\n";
  for (const auto& t : r.targets) {
    os << "\n[" << t.name << "] n=" << t.arity << " dim=" << t.dim << "\n";
    for (const auto& s : t.suites) {
      os << "  " << to_string(s.status()) << "  " << s.id << "  (" << static_cast<long long>(s.timing_ms) << " ms)\n";
      for (const auto& c : s.checks) {
        os << "    " << to_string(c.status) << "  " << c.id << "  cases=" << c.cases;
        if (!c.note.empty()) os << "  " << c.note;
        os << "\n";
        if (c.failed()) os << "      witness: " << c.witness.dump() << "\n";
      }
    }
  }
  os << "\noverall: " << to_string(r.status()) << "\n";
  return os.str();
}

int exit_code(const RunResult& r) { return r.status() == Status::fail ? 1 : 0; }

}  // namespace nlomni
