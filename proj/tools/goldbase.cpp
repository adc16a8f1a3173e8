// goldbase: conversions, addition traces, tables and verification scans.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage error.

#include "goldbase/goldbase.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace goldbase;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt parse_positive(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("not a natural number: " + text);
  }
  BigInt n(text);
  if (n < 1) throw UsageError("N must be >= 1");
  return n;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "bergman" || name == "standard") return Scheme::standard;
  if (name == "canonical") return Scheme::canonical;
  throw UsageError("unknown scheme " + name);
}

Base parse_base(const std::string& name) {
  if (name == "phi") return Base::phi;
  if (name == "silver") return Base::silver;
  throw UsageError("unknown base " + name);
}

// --ascii forces '.', otherwise GOLDBASE_RADIX=dot|middot, otherwise middot.
RadixGlyph pick_glyph(bool ascii) {
  if (ascii) return RadixGlyph::dot;
  if (const char* env = std::getenv("GOLDBASE_RADIX")) {
    const std::string v = env;
    if (v == "dot") return RadixGlyph::dot;
    if (v == "middot") return RadixGlyph::middot;
    throw UsageError("GOLDBASE_RADIX must be dot or middot");
  }
  return RadixGlyph::middot;
}

// Display width, counting the two-byte middle dot as one column.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80 ? 1 : 0;
  return w;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

int cmd_repr(const std::string& n_text, const std::string& scheme_name, const std::string& base_name, bool json,
             RadixGlyph glyph) {
  const BigInt n = parse_positive(n_text);
  const Base base = parse_base(base_name);
  const DigitString rep = expansion_of(n, parse_scheme(scheme_name), base);
  if (json) {
    std::cout << to_json(rep).dump() << '\n';
  } else {
    std::cout << render(rep, glyph) << '\n';
  }
  return kExitPass;
}

int cmd_add(const std::string& n_text, const std::string& m_text, const std::string& scheme_name, bool trace,
            RadixGlyph glyph) {
  const BigInt n = parse_positive(n_text);
  const BigInt m = parse_positive(m_text);
  const Scheme scheme = parse_scheme(scheme_name);
  const DigitString sum = add_digitwise(expansion_of(n, scheme), expansion_of(m, scheme));
  std::vector<RewriteStep> steps;
  const DigitString result = normalize(sum, scheme, trace ? &steps : nullptr);
  if (trace) {
    std::cout << render(expansion_of(n, scheme), glyph) << " + " << render(expansion_of(m, scheme), glyph) << '\n';
    for (const auto& s : steps) std::cout << pad(s.rule, 14) << render(s.state, glyph) << '\n';
    std::cout << "value " << (n + m) << " checked at every step\n";
  } else {
    std::cout << render(result, glyph) << '\n';
  }
  return kExitPass;
}

int cmd_table(std::int64_t from, std::int64_t to, const std::string& base_name, const std::string& format,
              RadixGlyph glyph) {
  if (from < 1 || to < from) throw UsageError("table needs 1 <= from <= to");
  const Base base = parse_base(base_name);
  const ExpansionTable table = ExpansionTable::build(base, to);
  const bool phi = base == Base::phi;

  std::vector<std::vector<std::string>> rows;
  for (std::int64_t n = from; n <= to; ++n) {
    std::vector<std::string> row = {std::to_string(n), render(table.standard(n), glyph),
                                    render(table.canonical(n), glyph)};
    if (phi) row.emplace_back(1, to_char(type_code_of(table.standard(n))));
    rows.push_back(std::move(row));
  }
  const std::vector<std::string> header =
      phi ? std::vector<std::string>{"N", "bergman", "canonical", "type"}
          : std::vector<std::string>{"N", "standard", "canonical"};

  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (std::int64_t n = from; n <= to; ++n) {
      nlohmann::json row = {{"N", n},
                            {header[1], to_json(table.standard(n))},
                            {header[2], to_json(table.canonical(n))},
                            {header[1] + "_text", render(table.standard(n), glyph)},
                            {header[2] + "_text", render(table.canonical(n), glyph)}};
      if (phi) row["type"] = std::string(1, to_char(type_code_of(table.standard(n))));
      out.push_back(row);
    }
    std::cout << out.dump(1) << '\n';
  } else if (format == "csv") {
    auto line = [](const std::vector<std::string>& fields) {
      std::string s;
      for (std::size_t k = 0; k < fields.size(); ++k) s += (k ? "," : "") + csv_field(fields[k]);
      return s;
    };
    std::cout << line(header) << '\n';
    for (const auto& r : rows) std::cout << line(r) << '\n';
  } else if (format == "text") {
    std::vector<std::size_t> widths(header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size(); ++k) widths[k] = std::max(widths[k], display_width(r[k]));
    };
    widen(header);
    for (const auto& r : rows) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string s = std::string(widths[0] - display_width(r[0]), ' ') + r[0];
      for (std::size_t k = 1; k < r.size(); ++k) s += "  " + (k + 1 < r.size() ? pad(r[k], widths[k]) : r[k]);
      return s;
    };
    std::cout << line(header) << '\n';
    for (const auto& r : rows) std::cout << line(r) << '\n';
  } else {
    throw UsageError("unknown format " + format);
  }
  return kExitPass;
}

int cmd_suite(const std::vector<SuiteEntry>& list, const std::string& name, std::optional<std::int64_t> max,
              unsigned jobs, bool pretty) {
  if (name != "all" && !find_suite(list, name)) throw UsageError("unknown suite or target " + name);
  if (max && *max < 1) throw UsageError("--max must be >= 1");
  const ReportEnvelope env = run_suite(list, name, max, jobs);
  std::cout << to_json(env).dump(pretty ? 2 : -1) << '\n';
  return env.verdict() ? kExitPass : kExitFail;
}

std::string suite_help(const std::vector<SuiteEntry>& list) {
  std::ostringstream os;
  for (const auto& s : list) os << "\n  " << s.name << ": " << s.summary << " (default max " << s.default_max << ")";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact base-phi and silver mean expansions of natural numbers"};
  app.require_subcommand(1);
  bool ascii = false;
  app.add_flag("--ascii", ascii, "use '.' as radix point (default U+00B7, or GOLDBASE_RADIX=dot|middot)");

  std::string n_text, m_text, scheme = "canonical", base = "phi", format = "text", suite;
  bool json = false, trace = false, pretty = false;
  std::int64_t from = 1, to = 12;
  std::optional<std::int64_t> max;
  unsigned jobs = 1;

  auto* repr = app.add_subcommand("repr", "print the expansion of N");
  repr->add_option("N", n_text, "natural number")->required();
  repr->add_option("--scheme", scheme, "bergman|standard|canonical")->capture_default_str();
  repr->add_option("--base", base, "phi|silver")->capture_default_str();
  repr->add_flag("--json", json, "print the JSON form");

  auto* add = app.add_subcommand("add", "add two expansions digit-wise and normalize (base phi)");
  add->add_option("N", n_text)->required();
  add->add_option("M", m_text)->required();
  add->add_option("--scheme", scheme, "bergman|canonical")->capture_default_str();
  add->add_flag("--trace", trace, "print every rewrite step");

  auto* table = app.add_subcommand("table", "table of expansions for from..to");
  table->add_option("from_pos", from, "first N (same as --from)");
  table->add_option("to_pos", to, "last N (same as --to)");
  table->add_option("--from", from)->capture_default_str();
  table->add_option("--to", to)->capture_default_str();
  table->add_option("--base", base, "phi|silver")->capture_default_str();
  table->add_option("--format", format, "text|csv|json")->capture_default_str();

  auto add_scan_options = [&](CLI::App* cmd) {
    cmd->add_option("--max", max, "upper bound of the scan");
    cmd->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)")->capture_default_str();
    cmd->add_flag("--pretty", pretty, "indent the JSON report");
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite" + suite_help(verify_suites()));
  verify->add_option("suite", suite, "suite name or all")->required();
  add_scan_options(verify);
  auto* conjecture = app.add_subcommand("conjecture", "run an exploratory scan" + suite_help(conjecture_targets()));
  conjecture->add_option("target", suite, "target name or all")->required();
  add_scan_options(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const RadixGlyph glyph = pick_glyph(ascii);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (*repr) return cmd_repr(n_text, scheme, base, json, glyph);
    if (*add) return cmd_add(n_text, m_text, scheme, trace, glyph);
    if (*table) return cmd_table(from, to, base, format, glyph);
    if (*verify) return cmd_suite(verify_suites(), suite, max, jobs, pretty);
    if (*conjecture) return cmd_suite(conjecture_targets(), suite, max, jobs, pretty);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
