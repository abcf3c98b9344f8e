#pragma once

#include <spinchern/exceptional.hpp>
#include <spinchern/spin_reps.hpp>
#include <spinchern/truncated_poly.hpp>

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace spinchern {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ReportFormat { Json, Markdown, Plain };
ReportFormat parse_format(std::string_view text);  // json | md | plain

/// One command's output. `body` follows the JSON report schema and is the
/// single source every renderer reads from.
struct Report {
  std::string command;
  nlohmann::json body;
  bool passed = false;
};

/// Valid range of the prop2 sweep.
inline constexpr int kProp2MinM = 3;
inline constexpr int kProp2MaxM = 16;
/// Largest n for which the quillen command computes the J generators.
inline constexpr int kMaxPresentationN = 18;
/// Largest n accepted by restrict (m <= 16).
inline constexpr int kMaxRestrictN = 33;
/// Default cutoff cap for restrict when none is given.
inline constexpr int kRestrictCutoffCap = 4096;

/// Mod-2 total Chern classes of lambda_i, delta+-, delta for m in [m_lo, m_hi],
/// both parities n = 2m, 2m+1.
Report run_prop2(int m_lo, int m_hi);

/// Verification pipeline for one exceptional group or all four. cutoff = 0
/// selects each case's default; a positive cutoff below what a case reads is
/// an InvalidArgument error.
Report run_theorem1(std::optional<ExceptionalGroup> group, LambdaConvention convention, int cutoff);

/// Spinor type, Quillen exponent and J generators for n in [n_lo, n_hi].
Report run_quillen(int n_lo, int n_hi);

/// Restriction of an expression to the circle and its characteristic classes.
Report run_restrict(int n, std::string_view expression, LambdaConvention convention, int cutoff);

nlohmann::json series_json(const TruncatedPoly& p);

std::string render(const Report& report, ReportFormat format);

}  // namespace spinchern
