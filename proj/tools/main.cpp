#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nlomni/fixtures.hpp"
#include "nlomni/poly.hpp"
#include "nlomni/runner.hpp"

using namespace nlomni;

namespace {

constexpr int exit_usage = 2;

int usage_error(std::string_view code, const std::string& message) {
  std::cerr << code << ": " << message << "\n";
  return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of n-Lie, omni n-Lie and higher Courant identities", "nlomni"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  bool exhaustive = false;
  int random_samples = 0;
  std::uint64_t seed = 42;
  int max_degree = 12;
  std::string report_path;
  std::string format = "text";

  auto* ex = app.add_flag("--exhaustive", exhaustive, "Exhaustive basis enumeration where the suite supports it (default)");
  auto* rnd = app.add_option("--random", random_samples, "Seeded random sampling with N samples per identity")->check(CLI::PositiveNumber);
  ex->excludes(rnd);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for every random generator (env NLOMNI_SEED sets the default)");
  app.add_option("--max-degree", max_degree, "Polynomial degree cap")->check(CLI::Range(0, 255));
  app.add_option("--report", report_path, "Write the JSON report to this path");
  app.add_option("--format", format, "Standard output format")->check(CLI::IsMember({"text", "json"}));

  std::string instance_path;
  const char* help[] = {
      "Fundamental Identity and the induced Leibniz product",
      "Omni n-Lie structure, graph criterion and the nonabelian deformation",
      "Nonabelian omni structure, Nijenhuis operator and trivial deformation",
      "Twisted higher Courant structure of the linear n-vector field",
      "Linearization of the omni structures as higher Courant structures",
      "Exterior calculus kernel in the instance's dimension and arity",
      "Every suite; the shipped corpus when no instance is given",
  };
  const Command commands[] = {Command::nlie,          Command::omni,     Command::nonabelian, Command::nambu,
                              Command::linearization, Command::calculus, Command::all};
  for (std::size_t k = 0; k < std::size(commands); ++k) {
    auto* sub = app.add_subcommand(std::string(to_string(commands[k])), help[k]);
    sub->add_option("instance", instance_path, "Instance JSON file (default: the shipped corpus)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("NLOMNI_SEED")) {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        return usage_error("E_ARGS", std::string("NLOMNI_SEED is not an unsigned integer: ") + env);
      }
    }
  }

  SuiteConfig config;
  config.seed = seed;
  config.max_degree = max_degree;
  if (random_samples > 0) {
    config.mode = SuiteConfig::Mode::random;
    config.samples = random_samples;
  }

  const Command command = *parse_command(app.get_subcommands().front()->get_name());
  std::vector<Instance> targets;
  if (instance_path.empty()) {
    for (auto& f : fixtures::corpus()) targets.push_back({f.name, std::move(f.algebra)});
  } else {
    try {
      targets.push_back(parse_instance_file(instance_path));
    } catch (const InstanceError& e) {
      std::cerr << e.what() << "\n";
      return exit_usage;
    }
  }

  RunResult result;
  try {
    result = run(command, targets, config);
  } catch (const DegreeOverflow& e) {
    return usage_error("E_DEGREE", e.what());
  }

  const auto report = report_json(result);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) return usage_error("E_IO", "cannot write " + report_path);
    out << report.dump(2) << "\n";
  }
  if (format == "json") std::cout << report.dump(2) << "\n";
  else std::cout << report_text(result);
  return exit_code(result);
}
