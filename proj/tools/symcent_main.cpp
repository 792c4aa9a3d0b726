// symcent: centralizer algebras of permutation modules and their symmetry.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcent/analysis.hpp"
#include "symcent/catalog.hpp"
#include "symcent/error.hpp"
#include "symcent/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitVerification = 3;

int print_catalog() {
  const auto rows = symcent::catalog_listing();
  std::size_t w0 = 0, w1 = 0;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.grammar.size());
    w1 = std::max(w1, r.degree.size());
  }
  for (const auto& r : rows) {
    std::cout << r.grammar << std::string(w0 - r.grammar.size() + 2, ' ') << r.degree
              << std::string(w1 - r.degree.size() + 2, ' ') << r.description << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism algebras of permutation modules over finite fields"};
  app.require_subcommand(1);

  std::string group;
  std::string file;
  std::uint32_t characteristic = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool oracle = false;
  bool timings = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze one transitive action over F_p");
  auto* group_opt = analyze->add_option("--group", group, "Group spec, e.g. altpairs:7 (see `catalog`)");
  auto* file_opt = analyze->add_option("--file", file, "Generator file (degree line + cycles)");
  group_opt->excludes(file_opt);
  analyze->add_option("--char", characteristic, "Field characteristic p (prime)")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--seed", seed, "Seed for randomized witness search");
  analyze->add_flag("--oracle", oracle, "Also run brute-force cross-checks where caps allow");
  analyze->add_flag("--timings", timings, "Include per-stage timings in JSON output");

  symcent::SuiteOptions suite_opts;
  int criterion = 0;
  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--seed", suite_opts.seed, "Seed for randomized witness search");
  suite->add_option("--criterion", criterion, "Run only this criterion (1-11)");
  suite->add_flag("--corrupt", suite_opts.corrupt, "Negative control: swap in wrong catalog groups");
  suite->add_flag("--timings", timings, "Print per-criterion wall time");

  auto* catalog = app.add_subcommand("catalog", "List the group-spec grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUser;
  }

  try {
    if (catalog->parsed()) return print_catalog();

    if (suite->parsed()) {
      std::vector<symcent::CriterionResult> results;
      if (criterion != 0) {
        results.push_back(symcent::run_criterion(criterion, suite_opts));
      } else {
        results = symcent::run_suite(suite_opts);
      }
      std::cout << symcent::format_suite(results, timings);
      for (const auto& r : results) {
        if (!r.pass) return kExitVerification;
      }
      return kExitOk;
    }

    if (group.empty() && file.empty()) throw symcent::PreconditionError("one of --group or --file is required");
    const std::string spec = file.empty() ? group : "file:" + file;
    const auto report = symcent::analyze(spec, {characteristic, seed, oracle});
    std::cout << (format == "json" ? symcent::to_json(report, timings) : symcent::to_text(report));
    return kExitOk;
  } catch (const symcent::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const symcent::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
}
