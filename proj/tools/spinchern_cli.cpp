// spinchern command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 all checks passed, 1 a verification mismatch, 2 usage error,
// 3 internal error.

#include <spinchern/spinchern.h>

#include "CLI11.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Range {
  int lo = 0;
  int hi = 0;
};

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "A..B" or a single "N".
std::optional<Range> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Range{*v, *v};
  }
  auto lo = parse_int(std::string_view(text).substr(0, dots));
  auto hi = parse_int(std::string_view(text).substr(dots + 2));
  if (!lo || !hi) return std::nullopt;
  return Range{*lo, *hi};
}

int usage_error(const std::string& what) {
  std::cerr << "spinchern: " << what << "\n";
  return kExitUsage;
}

int library_error(sc_status status) {
  std::cerr << "spinchern: " << sc_status_string(status) << ": " << sc_last_error() << "\n";
  switch (status) {
    case SC_ERR_INVALID_ARGUMENT:
    case SC_ERR_PARSE:
    case SC_ERR_DOMAIN:
    case SC_ERR_VIRTUAL_CHARACTER: return kExitUsage;
    default: return kExitInternal;
  }
}

struct OutputOptions {
  std::string format = "plain";
  std::string out_path;
};

int emit_report(sc_report* report, const OutputOptions& opts) {
  sc_format format = SC_FORMAT_PLAIN;
  if (opts.format == "json") format = SC_FORMAT_JSON;
  if (opts.format == "md") format = SC_FORMAT_MARKDOWN;

  size_t len = 0;
  sc_report_render(report, format, nullptr, 0, &len);
  std::string text(len, '\0');
  if (sc_status s = sc_report_render(report, format, text.data(), len + 1, &len); s != SC_OK) {
    sc_report_free(report);
    return library_error(s);
  }

  int passed = 0;
  sc_report_passed(report, &passed);
  sc_report_free(report);

  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) return usage_error("cannot open output file " + opts.out_path);
    file << text;
  }
  return passed ? 0 : kExitMismatch;
}

sc_convention convention_from(const std::string& text) {
  return text == "vector-rep" ? SC_CONVENTION_VECTOR_REP : SC_CONVENTION_PAPER_LITERAL;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "md", "plain"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the report to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact restriction of spinor characters to a circle and the resulting Chern and "
               "Stiefel-Whitney classes"};
  app.set_version_flag("--version", std::string(sc_version()));
  app.require_subcommand(1);

  OutputOptions output;
  std::string m_range = "3..12";
  std::string n_text;
  std::string group = "all";
  std::string convention = "paper-literal";
  int cutoff = 0;
  std::string expression;

  auto* prop2 = app.add_subcommand("prop2", "Mod-2 total Chern classes of lambda_i and the (half-)spin representations");
  prop2->add_option("--m", m_range, "Range A..B of m = floor(n/2)")->capture_default_str();
  add_output_options(prop2, output);

  auto* theorem1 = app.add_subcommand("theorem1", "Indecomposability witnesses for F4, E6, E7, E8");
  theorem1->add_option("--group", group, "Group to verify")
      ->check(CLI::IsMember({"all", "F4", "E6", "E7", "E8"}))
      ->capture_default_str();
  theorem1->add_option("--convention", convention, "lambda_i convention for odd n")
      ->check(CLI::IsMember({"paper-literal", "vector-rep"}))
      ->capture_default_str();
  theorem1->add_option("--cutoff", cutoff, "Truncation in u-powers (0 = per-case default)")
      ->check(CLI::NonNegativeNumber);
  add_output_options(theorem1, output);

  auto* quillen = app.add_subcommand("quillen", "Spinor type, Quillen exponent h and J ideal generators");
  quillen->add_option("--n", n_text, "n or range A..B")->required();
  add_output_options(quillen, output);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a virtual representation of Spin(n) to the circle");
  restrict_cmd->add_option("--n", n_text, "n of Spin(n)")->required();
  restrict_cmd->add_option("expression", expression, "e.g. \"2*lambda1 + delta-\"")->required();
  restrict_cmd->add_option("--convention", convention, "lambda_i convention for odd n")
      ->check(CLI::IsMember({"paper-literal", "vector-rep"}))
      ->capture_default_str();
  restrict_cmd->add_option("--cutoff", cutoff, "Truncation in u-powers (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  add_output_options(restrict_cmd, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  sc_report* report = nullptr;
  sc_status status = SC_OK;

  if (*prop2) {
    auto r = parse_range(m_range);
    if (!r) return usage_error("--m expects A..B, got '" + m_range + "'");
    status = sc_run_prop2(r->lo, r->hi, &report);
  } else if (*theorem1) {
    sc_group g = SC_GROUP_ALL;
    if (group == "F4") g = SC_GROUP_F4;
    if (group == "E6") g = SC_GROUP_E6;
    if (group == "E7") g = SC_GROUP_E7;
    if (group == "E8") g = SC_GROUP_E8;
    status = sc_run_theorem1(g, convention_from(convention), cutoff, &report);
  } else if (*quillen) {
    auto r = parse_range(n_text);
    if (!r) return usage_error("--n expects N or A..B, got '" + n_text + "'");
    status = sc_run_quillen(r->lo, r->hi, &report);
  } else if (*restrict_cmd) {
    auto n = parse_int(n_text);
    if (!n) return usage_error("--n expects an integer, got '" + n_text + "'");
    status = sc_run_restrict(*n, expression.c_str(), convention_from(convention), cutoff, &report);
  }

  if (status != SC_OK) return library_error(status);
  return emit_report(report, output);
}
