// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Usage: goldbase_acceptance <path-to-goldbase-cli> <golden-dir>

#include "goldbase/goldbase.hpp"

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace goldbase;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

std::string cli_path;
std::string golden_dir;

std::string run_cli(const std::string& args) {
  const std::string cmd = "GOLDBASE_RADIX=middot \"" + cli_path + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> fields(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string f;
    while (ls >> f) row.push_back(f);
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

bool all_pass(const ReportEnvelope& env, std::string& note) {
  for (const auto& c : env.details) {
    if (!c.exploratory && !c.pass) {
      note += c.name + " failed " + c.data.dump() + "; ";
    }
  }
  return env.verdict();
}

Outcome reference_tables() {
  Outcome o;
  const std::string phi12 = run_cli("table --from 1 --to 12 --base phi");
  if (phi12 != slurp(golden_dir + "/phi_1_12.txt")) o = {false, "phi 1..12 differs; "};
  const std::string silver18 = run_cli("table --from 1 --to 18 --base silver");
  if (silver18 != slurp(golden_dir + "/silver_1_18.txt")) o = {false, o.note + "silver 1..18 differs; "};
  // 1..24: compare the bergman and type columns field by field
  const auto got = fields(run_cli("table --from 1 --to 24 --base phi"));
  const auto want = fields(slurp(golden_dir + "/phi_1_24_bergman_type.txt"));
  bool ok = got.size() == want.size() + 1 && want.size() == 24;
  for (std::size_t k = 0; ok && k < want.size(); ++k) {
    const auto& g = got[k + 1];
    ok = g.size() == 4 && g[0] == want[k][0] && g[1] == want[k][1] && g[3] == want[k][2];
  }
  if (!ok) o = {false, o.note + "phi 1..24 bergman/type differs; "};
  return o;
}

Outcome mismatch_set() {
  const std::int64_t nmax = 100000;
  const auto t = ExpansionTable::build(Base::phi, nmax);
  std::vector<std::int64_t> observed;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    if (!(t.standard(n) == t.canonical(n))) observed.push_back(n);
  }
  std::vector<std::int64_t> expected;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t v = oracle::floor_by_convergents(n, false) + 2 * n;
    if (v > nmax) break;
    expected.push_back(v);
  }
  const double limit = (5.0 - std::sqrt(5.0)) / 10.0;
  const double fraction = static_cast<double>(observed.size()) / static_cast<double>(nmax);
  std::ostringstream note;
  note << "count " << observed.size() << ", fraction " << fraction << " vs " << limit;
  return {observed == expected && std::abs(fraction - limit) <= 0.001, note.str()};
}

Outcome suite(const std::vector<SuiteEntry>& list, const std::vector<std::pair<std::string, std::int64_t>>& runs) {
  Outcome o;
  for (const auto& [name, max] : runs) {
    const auto env = run_suite(list, name, max, 1);
    if (!all_pass(env, o.note)) o.pass = false;
  }
  return o;
}

Outcome addition_trace() {
  std::vector<RewriteStep> trace;
  const DigitString sum = add_digitwise(canonical_of(4), canonical_of(1));
  const DigitString out = normalize(sum, Scheme::canonical, &trace);
  bool saw_intermediate = false;
  bool invariant = true;
  for (const auto& s : trace) {
    saw_intermediate = saw_intermediate || render(s.state, RadixGlyph::dot) == "102.01";
    invariant = invariant && eval_digits(s.state) == integer(BigInt(5), Base::phi);
  }
  const bool ends = render(out, RadixGlyph::dot) == "1000.1001" && trace.back().state == out;
  const std::string cli = run_cli("add 4 1 --scheme canonical --trace");
  const bool cli_ok = cli.find("102\xC2\xB7" "01") != std::string::npos &&
                      cli.find("1000\xC2\xB7" "1001") != std::string::npos;
  return {saw_intermediate && invariant && ends && cli_ok, std::to_string(trace.size()) + " steps"};
}

Outcome silver_scans() {
  Outcome o;
  const auto env = run_suite(conjecture_targets(), "silver_mismatch", 20000, 1);
  if (!all_pass(env, o.note)) o.pass = false;
  const auto iv = run_suite(conjecture_targets(), "silver_intervals", 20000, 1);
  if (!all_pass(iv, o.note)) o.pass = false;
  const auto runs = run_suite(conjecture_targets(), "silver_runs", 20000, 1);
  if (!all_pass(runs, o.note)) o.pass = false;
  o.note += "consistent-to-20000: " + std::string(o.pass ? "yes" : "no");
  return o;
}

Outcome properties() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.note += what + "; ";
  };
  for (int i = -60; i <= 60; ++i) {
    if (!(phi_pow(i) * phi_pow(-i) == integer(BigInt(1), Base::phi))) fail("phi inverse " + std::to_string(i));
    if (sign(phi_pow(i)) != 1) fail("phi sign " + std::to_string(i));
    if (!(phi_pow(i + 2) - phi_pow(i + 1) - phi_pow(i)).is_zero()) fail("phi recurrence");
    if (!(sigma_pow(i + 1) - sigma_pow(i) * BigInt(2) - sigma_pow(i - 1)).is_zero()) fail("sigma recurrence");
  }
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> e(-20, 20), d(0, 4);
  for (int trial = 0; trial < 5000; ++trial) {
    DigitString x, y;
    for (int k = 0; k < 6; ++k) x.add(e(rng), static_cast<DigitString::Digit>(d(rng)));
    for (int k = 0; k < 6; ++k) y.add(e(rng), static_cast<DigitString::Digit>(d(rng)));
    if (!(eval_digits(add_digitwise(x, y)) == eval_digits(x) + eval_digits(y))) fail("additivity");
  }
  const auto lemma = run_suite(verify_suites(), "lemma31", 100000, 1);
  if (!all_pass(lemma, o.note)) o.pass = false;
  const auto silver = run_suite(verify_suites(), "silver", 50000, 1);
  if (!all_pass(silver, o.note)) o.pass = false;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: goldbase_acceptance <goldbase-cli> <golden-dir>\n";
    return 2;
  }
  cli_path = argv[1];
  golden_dir = argv[2];

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "reference tables reproduced in text mode", 1.0, reference_tables},
      {2, "mismatch set equals floor((phi+2)n) and density within 0.001", 30.0, mismatch_set},
      {3, "brute-force uniqueness N<=500, window [-14,14]", 60.0,
       [] { return suite(verify_suites(), {{"uniqueness", 500}}); }},
      {4, "Lucas closed forms n=1..15, 2L_2n form n=2..10", 0.0,
       [] {
         Outcome o = suite(verify_suites(), {{"lemma41", 15}});
         for (int n = 2; n <= 10; ++n) {
           if (!(double_lucas_gamma(n) == canonical_of(BigInt(2 * lucas(2 * n))))) o = {false, o.note + "double form"};
         }
         return o;
       }},
      {5, "(L,R) laws for N<=100000, both schemes", 0.0,
       [] { return suite(verify_suites(), {{"prop41", 100000}, {"prop42", 100000}}); }},
      {6, "recursive construction equals direct, N<=20000", 0.0,
       [] { return suite(verify_suites(), {{"thm51", 20000}, {"thm52", 20000}}); }},
      {7, "boundary digits n=2..10, shared 1-positions n=1..12", 0.0,
       [] { return suite(verify_suites(), {{"lemma51", 10}, {"lemma61", 12}}); }},
      {8, "vertical Lucas run lengths, columns -14..14, N<=100000", 60.0,
       [] { return suite(verify_suites(), {{"thm61", 100000}}); }},
      {9, "addition trace 4+1 through 102.01 to 1000.1001", 0.0, addition_trace},
      {10, "silver mismatch, interval and block scans to 20000", 0.0, silver_scans},
      {11, "property suite", 0.0, properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.note += " exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s  [%2d] %-62s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
