#pragma once

#include <spinchern/char_classes.hpp>
#include <spinchern/spin_reps.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinchern {

enum class ExceptionalGroup { F4, E6, E7, E8 };
enum class ClassKind { StiefelWhitney, Chern };

std::string_view group_name(ExceptionalGroup g);
ExceptionalGroup parse_group(std::string_view text);

/// Restriction of an exceptional-group representation to Spin(n), together
/// with the characteristic class whose indecomposability is being witnessed.
struct ExceptionalCase {
  ExceptionalGroup group;
  int n;                         // Spin(n) subgroup
  VirtualRepExpr restriction;    // g^*(rho) in R(Spin(n))
  RepSymbol spinor;              // the spinor summand carrying the top class
  std::uint64_t spinor_dimension;
  std::string ambient;           // SO(26), SU(27), Sp(28) -> SU(56), SO(248)
  int ambient_dimension;
  ClassKind kind;
  int class_index;               // 16 for w_16 / c_16, 32 for c_32, 128 for w_128
  int expected_top_degree;       // cohomological degree of that class

  /// u-power of the class being tested (deg u = 2).
  int expected_u_power() const { return kind == ClassKind::Chern ? class_index : class_index / 2; }
  std::string class_label() const;  // "w16", "c32", ...
};

/// F4, E6, E7, E8 in that order.
std::vector<ExceptionalCase> builtin_cases();
const ExceptionalCase& builtin_case(ExceptionalGroup g);

/// Im Bf_1^* = Z/2[v] with v = u^{2^(h-1)}.
struct ImageSubring {
  int h;
  std::uint64_t generator_power;

  static ImageSubring from_h(int h);
};

enum class ImageVerdict { NotInImage, Indecomposable, Decomposable };
std::string_view verdict_name(ImageVerdict v);  // not_in_image | indecomposable | decomposable

/// Classifies the monomial u^k inside Z/2[v]: v itself is the only
/// indecomposable monomial, v^q (q >= 2) is decomposable.
ImageVerdict indecomposable_in_image(std::int64_t u_power, const ImageSubring& sub);

struct DimensionAudit {
  int ambient_dimension = 0;
  BigInt computed;                 // under the requested convention
  BigInt literal;                  // paper-literal lambda convention
  BigInt vector_rep;               // vector-rep lambda convention
  bool passed = false;             // vector_rep == ambient
  std::vector<std::string> notes;
};

DimensionAudit dimension_audit(const ExceptionalCase& c, LambdaConvention convention = LambdaConvention::Literal);

struct VerifyOptions {
  LambdaConvention convention = LambdaConvention::Literal;
  int cutoff = 0;  // 0 selects default_cutoff(case)
};

/// Twice the largest u-power read by verify_case.
int default_cutoff(const ExceptionalCase& c);
/// Smallest cutoff that still contains every class verify_case reads.
int required_cutoff(const ExceptionalCase& c);

struct TopClass {
  std::string label;             // "w16"
  int u_power = 0;
  SWSeries total{CoeffRing::Mod2, 0};
  bool top_is_u_power = false;   // coefficient at u_power is 1
  bool only_one_and_top = false; // no other nonzero coefficient up to cutoff
  ImageVerdict verdict = ImageVerdict::NotInImage;
};

/// Outcome of the full pipeline for one group. Failures are recorded here
/// with the computed witnesses rather than thrown.
struct CaseReport {
  ExceptionalGroup group;
  int n = 0;
  int h = 0;
  std::uint64_t deg_z = 0;
  ClassKind kind = ClassKind::Chern;
  LambdaConvention convention = LambdaConvention::Literal;
  int cutoff = 0;
  UniLaurent character{1};
  ImageSubring image{0, 0};

  TopClass primary;                       // the class named in the theorem
  std::optional<TopClass> complexified;   // SW cases: Chern class of the complexification
  std::optional<bool> square_relation;    // SW cases: w^2 == c mod 2
  bool expected_matches_h = false;        // expected u-power == 2^(h-1)
  bool remark_generation = false;
  DimensionAudit dimension;
  bool convention_invariant = false;      // both lambda conventions give the same mod-2 class
  std::vector<std::string> notes;

  bool passed() const;
};

CaseReport verify_case(const ExceptionalCase& c, const VerifyOptions& opts = {});

/// The extracted top class generates the modeled image subring.
bool verify_remark_generation(const CaseReport& r);

}  // namespace spinchern
