// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <path to nlomni>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nlomni/fixtures.hpp"
#include "nlomni/linearize.hpp"
#include "nlomni/omni.hpp"
#include "nlomni/polycalc.hpp"
#include "nlomni/random.hpp"
#include "nlomni/runner.hpp"

using namespace nlomni;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    detail = ok ? what : detail + "; " + what;
    ok = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  double bound_s;  // 0: no runtime bound
  std::function<Outcome()> body;
};

std::string first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.failed()) return c.id + " " + c.witness.dump();
  return "";
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status != Status::pass) return false;
  return !checks.empty();
}

void require_suite(Outcome& out, const std::vector<Check>& checks, const std::string& where) {
  if (all_pass(checks)) return;
  const std::string f = first_failure(checks);
  out.require(false, where + ": " + (f.empty() ? "check skipped" : f));
}

const Check* find(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

Vector coordinates(const WedgeVector& v) {
  Vector out = zero_vector(v.dim());
  for (const auto& [idx, c] : v.terms()) out[static_cast<std::size_t>(idx[0])] = c;
  return out;
}

std::vector<fixtures::Named> full_corpus() {
  auto out = fixtures::corpus();
  out.push_back({"fix_c_corrupted", fixtures::fix_c_corrupted()});
  out.push_back({"two_block", fixtures::two_block()});
  return out;
}

// Skew map with a single random target coordinate per increasing tuple,
// each tuple present with probability 1/2.
SkewMap random_skew(int arity, int dim, SeededRng& rng) {
  SkewMap f(arity, dim);
  for (const auto& args : wedge_basis(dim, arity)) {
    if (!rng.coin()) continue;
    Vector v = zero_vector(dim);
    v[static_cast<std::size_t>(rng.uniform(0, dim - 1))] = rng.coefficient();
    f.set_bracket(args, v);
  }
  return f;
}

Outcome fi_graph_equivalence() {
  Outcome out;
  int agree = 0, fi_pass = 0, fi_fail = 0;
  auto compare = [&](const std::string& name, const SkewMap& f) {
    const bool fi = fi_check(f).ok();
    const bool graph = graph_test(f).passed();
    out.require(fi == graph, "disagreement on " + name);
    agree += fi == graph;
    (fi ? fi_pass : fi_fail) += 1;
  };
  for (const auto& f : full_corpus()) compare(f.name, f.algebra);
  SeededRng rng(42, "acceptance-skew");
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 3);
    const int dim = rng.uniform(n, 4);
    compare("random #" + std::to_string(trial), random_skew(n, dim, rng));
  }
  if (out.ok)
    out.detail = std::to_string(agree) + " maps agree (" + std::to_string(fi_pass) + " n-Lie, " + std::to_string(fi_fail) + " not)";
  return out;
}

Outcome omni_leibniz_compat() {
  Outcome out;
  for (auto [dim, n] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
    const std::string at = "(" + std::to_string(dim) + "," + std::to_string(n) + ")";
    require_suite(out, {omni_leibniz_check(dim, n), omni_compat_check(dim, n)}, at);
  }
  if (out.ok) out.detail = "exhaustive on (2,2), (3,2), (3,3)";
  return out;
}

Outcome nonabelian_structure() {
  Outcome out;
  int count = 0;
  const std::vector<std::string> required{"nonabelian.leibniz",          "nijenhuis.torsion",
                                          "nonabelian.trivial_deformation", "nonabelian.pairing_compat",
                                          "nonabelian.pairing_compat_derivations"};
  for (const auto& f : full_corpus()) {
    if (!fi_check(f.algebra).ok()) continue;
    const NonabelianOmni omni(f.algebra);
    std::vector<Check> checks = nonabelian_compat_check(omni);
    for (auto& c : nijenhuis_suite(omni)) checks.push_back(std::move(c));
    for (auto& c : deformation_identity_check(omni)) checks.push_back(std::move(c));
    for (const auto& id : required) out.require(find(checks, id) != nullptr, f.name + ": missing " + id);
    require_suite(out, checks, f.name);
    ++count;
  }
  if (out.ok) out.detail = std::to_string(count) + " n-Lie fixtures";
  return out;
}

Outcome standard_linearization() {
  Outcome out;
  for (auto [dim, n] : {std::pair{2, 2}, {3, 2}, {4, 2}, {3, 3}, {4, 3}}) {
    const std::string at = "(" + std::to_string(dim) + "," + std::to_string(n) + ")";
    require_suite(out, standard_hat_identities(dim, n), at + " hat");
    require_suite(out, standard_linearization_suite(dim, n), at + " linearization");
  }
  // n = 2: the omni bracket is the omni-Lie bracket [A, B] + A v, and the
  // nonabelian suite over the abelian algebra coincides with the standard one.
  for (int dim : {2, 3}) {
    const OmniCarrier carrier(dim, 2);
    for (const auto& x : carrier.basis())
      for (const auto& y : carrier.basis()) {
        const auto r = omni_bracket(x, y);
        const bool ok = r.endo == x.endo * y.endo - y.endo * x.endo &&
                        r.wedge == WedgeVector::from_vector(x.endo.apply(coordinates(y.wedge)));
        out.require(ok, "omni-Lie bracket mismatch in dim " + std::to_string(dim));
      }
    require_suite(out, nambu_linearization_suite(fixtures::abelian(2, dim)), "abelian n=2 dim " + std::to_string(dim));
  }
  if (out.ok) out.detail = "exhaustive for dim <= 4, n <= 3; n = 2 reduces to the omni-Lie case";
  return out;
}

Outcome nambu_linearization() {
  Outcome out;
  const std::vector<fixtures::Named> algebras{
      {"fix_b", fixtures::fix_b()}, {"euclidean_n2", fixtures::euclidean(2)}, {"euclidean_n3", fixtures::euclidean(3)}};
  for (const auto& f : algebras) {
    const auto np = nambu_poisson_check(linear_np(f.algebra));
    out.require(np.structure.has_value(), f.name + ": linear field is not Nambu-Poisson " + np.check.witness.dump());
    require_suite(out, linear_np_identities(f.algebra), f.name + " linear_np");
    require_suite(out, nambu_linearization_suite(f.algebra), f.name + " nambu_linearization");
  }
  if (out.ok) out.detail = "fix_b, euclidean n = 2, 3 on all basis pairs";
  return out;
}

Outcome twisted_suite() {
  Outcome out;
  SuiteConfig cfg;
  cfg.mode = SuiteConfig::Mode::random;
  cfg.samples = 50;
  cfg.seed = 42;
  const auto np = nambu_poisson_check(linear_np(fixtures::fix_b()));
  if (!np.structure) {
    out.require(false, "linear field of fix_b is not Nambu-Poisson");
    return out;
  }
  auto run_both = [&](const TwistedBrackets& b) {
    auto checks = twisted_courant_suite(*np.structure, cfg, b);
    for (auto& c : hamiltonian_compat_suite(*np.structure, cfg, b)) checks.push_back(std::move(c));
    return checks;
  };
  require_suite(out, run_both({}), "unmutated");
  std::vector<TwistedBrackets> mutants;
  for (unsigned k = 0; k < 8; ++k) mutants.push_back({1u << k, 0, 0});
  for (unsigned k = 0; k < 3; ++k) mutants.push_back({0, 1u << k, 0});
  for (unsigned k = 0; k < 3; ++k) mutants.push_back({0, 0, 1u << k});
  int caught = 0;
  for (const auto& m : mutants) {
    const auto checks = run_both(m);
    const bool failed = !first_failure(checks).empty();
    caught += failed;
    std::ostringstream label;
    label << "mutant {" << m.omit_twisted << "," << m.omit_form_bracket << "," << m.omit_standard << "} survived";
    out.require(failed, label.str());
  }
  if (out.ok) out.detail = "50 samples; " + std::to_string(caught) + "/" + std::to_string(mutants.size()) + " mutants caught";
  return out;
}

Outcome calculus_kernel() {
  Outcome out;
  SuiteConfig cfg;
  cfg.mode = SuiteConfig::Mode::random;
  cfg.samples = 200;
  cfg.seed = 42;
  for (auto [dim, n] : {std::pair{3, 2}, {4, 3}, {5, 4}}) {
    const auto checks = calculus_suite(dim, n, cfg);
    for (const auto& c : checks) out.require(c.cases >= 200, c.id + " ran fewer than 200 cases");
    require_suite(out, checks, "(" + std::to_string(dim) + "," + std::to_string(n) + ")");
  }
  if (out.ok) out.detail = "200 samples on (3,2), (4,3), (5,4)";
  return out;
}

std::string cli_report(const std::string& cli, const std::string& path) {
  const std::string cmd = "\"" + cli + "\" all --seed 42 --report \"" + path + "\" > /dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) return "exit status " + std::to_string(rc);
  std::ifstream in(path);
  return strip_timing(nlohmann::json::parse(in)).dump(2);
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.require(false, "no CLI path given");
    return out;
  }
  const std::string a = cli_report(cli, "acceptance_report_a.json");
  const std::string b = cli_report(cli, "acceptance_report_b.json");
  out.require(a.rfind("{", 0) == 0, "first run: " + a.substr(0, 80));
  out.require(b.rfind("{", 0) == 0, "second run: " + b.substr(0, 80));
  out.require(a == b, "reports differ");
  std::remove("acceptance_report_a.json");
  std::remove("acceptance_report_b.json");
  if (out.ok) out.detail = "two runs of `all --seed 42`, " + std::to_string(a.size()) + " bytes each";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "fi_graph_equivalence", 30, fi_graph_equivalence},
      {2, "omni_leibniz_compat", 60, omni_leibniz_compat},
      {3, "nonabelian_structure", 120, nonabelian_structure},
      {4, "standard_linearization", 120, standard_linearization},
      {5, "nambu_linearization", 180, nambu_linearization},
      {6, "twisted_suite", 300, twisted_suite},
      {7, "calculus_kernel", 60, calculus_kernel},
      {8, "determinism", 0, [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.bound_s > 0) out.require(s < c.bound_s, "exceeded " + std::to_string(static_cast<int>(c.bound_s)) + " s");
    failures += !out.ok;
    std::printf("%s %d %s (%.1f s%s) %s\n", out.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), s,
                c.bound_s > 0 ? (" < " + std::to_string(static_cast<int>(c.bound_s)) + " s").c_str() : "",
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
