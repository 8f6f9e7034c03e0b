#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "symrig/error.hpp"
#include "symrig/report.hpp"

int main(int argc, char** argv) {
  using namespace symrig;
  CLI::App app{"Run exact verification suites and report each check."};
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string algebra, format = "text", out;
  bool deep = false, timings = false;

  app.add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--samples", samples, "Samples per randomized identity");
  app.add_option("--algebra", algebra, "Restrict to one algebra")->check(CLI::IsMember({"C", "CxC", "HC", "OC"}));
  app.add_flag("--deep", deep, "Use exact elimination for the OC derivation algebra");
  app.add_flag("--timings", timings, "Record per-check durations (makes reports nondeterministic)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  SuiteOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  opts.deep = deep;
  opts.timings = timings;
  if (!algebra.empty()) opts.algebra = parse_tag(algebra);
  if (deep) opts.progress = [](const std::string& line) { std::cerr << line << '\n'; };

  SuiteReport report;
  try {
    report = run_suite(suite, opts);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  const std::string text = format == "json" ? to_json(report) : to_text(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << '\n';
      return 2;
    }
    f << text;
  }
  return report.all_passed() ? 0 : 1;
}
