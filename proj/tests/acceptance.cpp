// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [path-to-verify-binary]
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "symrig/degeneration.hpp"
#include "symrig/lie.hpp"
#include "symrig/report.hpp"
#include "symrig/surface.hpp"
#include "symrig/weights.hpp"

using namespace symrig;

namespace {

struct Result {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// Each suite runs once with default options; criteria read from the cached report.
const SuiteReport& report_for(const std::string& suite) {
  static std::map<std::string, SuiteReport> cache;
  auto it = cache.find(suite);
  if (it == cache.end()) {
    SuiteOptions o;
    o.timings = true;
    it = cache.emplace(suite, run_suite(suite, o)).first;
  }
  return it->second;
}

Result suite_checks(const std::string& suite, const std::vector<std::string>& needles) {
  const SuiteReport& r = report_for(suite);
  std::size_t n = 0;
  for (const auto& c : r.checks) {
    bool wanted = false;
    for (const auto& s : needles) wanted = wanted || c.name.find(s) != std::string::npos;
    if (!wanted) continue;
    ++n;
    if (c.status != CheckStatus::kPass) return {false, c.name + ": " + c.witness.value_or("")};
  }
  return {n > 0, std::to_string(n) + " checks"};
}

double recorded_seconds(const std::string& suite, const std::string& needle) {
  long long ms = 0;
  for (const auto& c : report_for(suite).checks)
    if (c.name.find(needle) != std::string::npos) ms += c.duration_ms;
  return static_cast<double>(ms) / 1000.0;
}

Result criterion1() {
  Result r = suite_checks("jordan", {".freudenthal_identities"});
  const double s = recorded_seconds("jordan", ".freudenthal_identities");
  return {r.ok && s <= 10.0, r.detail + ", 200 samples per algebra in " + fmt_s(s)};
}

Result criterion2() { return suite_checks("jordan", {".determinant_trace_formula"}); }

Result criterion3() { return suite_checks("jordan", {".sigma_generators_in_so3", ".sigma_preserves", ".s3_group"}); }

Result criterion4() {
  const std::array<std::size_t, 4> want = {3, 8, 21, 52};
  std::string dims;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t d = derivation_algebra_dim(kAllTags[i], EliminationMode::kExact);
    dims += (i ? "," : "") + std::to_string(d);
    if (d != want[i]) return {false, "dims " + dims};
  }
  return {seconds_since(t0) <= 300.0, "exact dims (" + dims + ") in " + fmt_s(seconds_since(t0))};
}

Result criterion5() {
  std::string dims;
  for (AlgebraTag t : kAllTags) {
    CentralizerResult r = centralizer_in_J0(t);
    dims += std::to_string(r.dimension);
    if (r.dimension != 2) return {false, dims};
  }
  Result s = suite_checks("jordan", {".centralizer_of_h0"});
  return {s.ok, "dims " + dims + ", traceless diagonal bases"};
}

Result criterion6() {
  Result r = suite_checks("weights", {".module_dimension", ".zero_weight_multiplicity"});
  std::string d;
  for (AlgebraTag t : kAllTags) {
    JordanModule m = select_module(t);
    d += std::string(d.empty() ? "" : " ") + to_string(m.root_system.type) + m.highest_weight.to_string() + "=" +
         weyl_dim(m.root_system, m.highest_weight).get_str();
  }
  return {r.ok, d};
}

Result criterion7() { return suite_checks("surfaces", {"orbit_closure_fan"}); }

Result criterion8() { return suite_checks("surfaces", {"y_linear_equivalences", "invariant_sublattice."}); }

Result criterion9() { return suite_checks("degeneration", {"coefficient_solutions", "divisor_assignments"}); }

Result criterion10() {
  Result r = suite_checks("degeneration", {"degeneration.search."});
  const double s = recorded_seconds("degeneration", "degeneration.search.");
  return {r.ok && s <= 5.0, r.detail + " in " + fmt_s(s)};
}

Result criterion11() {
  Result r = suite_checks("degeneration", {"contradiction.Theta0", "control."});
  return r;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Result criterion12(const std::string& verify) {
  SuiteOptions o;
  o.seed = 7;
  o.samples = 20;
  if (to_json(run_suite("all", o)) != to_json(run_suite("all", o))) return {false, "library reports differ"};
  if (verify.empty()) return {true, "library reports identical (no CLI path given)"};
  const std::string cmd = verify + " all --seed 7 --samples 20 --format json";
  const std::string a = run_command(cmd), b = run_command(cmd);
  return {!a.empty() && a == b, "library and CLI reports identical (" + std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string verify = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"Freudenthal identities on seeded samples", criterion1},
      {"determinant equals trace formula", criterion2},
      {"S3 generated by sigma12, sigma23", criterion3},
      {"derivation algebra dimensions", criterion4},
      {"centralizer of the diagonal Cartan", criterion5},
      {"module dimensions and zero-weight multiplicities", criterion6},
      {"orbit closure is the hexagonal toric surface", criterion7},
      {"Picard relations and invariant sublattices", criterion8},
      {"coefficient system and -K", criterion9},
      {"equivariant blowup search", criterion10},
      {"contradiction for Theta0, consistency of controls", criterion11},
      {"deterministic reports", [&] { return criterion12(verify); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << r.detail
              << "]" << std::endl;
  }
  return failures ? 1 : 0;
}
