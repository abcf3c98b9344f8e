#pragma once

#include <spinchern/bigint.hpp>
#include <spinchern/laurent.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace spinchern {

/// Spin(n) for n >= 6, with rank m = floor(n / 2).
class SpinGroup {
 public:
  explicit SpinGroup(int n);

  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ / 2; }
  bool is_even() const noexcept { return n_ % 2 == 0; }

 private:
  int n_;
};

enum class SymbolKind { Trivial, Lambda, DeltaPlus, DeltaMinus, Delta };

/// A generator of the representation ring, or the trivial line.
struct RepSymbol {
  SymbolKind kind = SymbolKind::Trivial;
  int index = 0;  // only meaningful for Lambda

  static RepSymbol trivial() { return {SymbolKind::Trivial, 0}; }
  static RepSymbol lambda(int i) { return {SymbolKind::Lambda, i}; }
  static RepSymbol delta_plus() { return {SymbolKind::DeltaPlus, 0}; }
  static RepSymbol delta_minus() { return {SymbolKind::DeltaMinus, 0}; }
  static RepSymbol delta() { return {SymbolKind::Delta, 0}; }

  /// CLI spelling: `lambda2`, `delta+`, `delta-`, `delta`, `triv`.
  std::string name() const;

  friend auto operator<=>(const RepSymbol&, const RepSymbol&) = default;
};

/// How lambda_i is read for odd n. `Literal` takes e_i of the m torus
/// coordinates z_j^2 + z_j^-2 only; `VectorRep` appends the zero weight of the
/// (2m+1)-dimensional vector representation. Even n is unaffected.
enum class LambdaConvention { Literal, VectorRep };

std::string_view convention_name(LambdaConvention c);  // "paper-literal" | "vector-rep"
LambdaConvention parse_convention(std::string_view text);

struct SymbolOptions {
  LambdaConvention convention = LambdaConvention::Literal;
  /// Accept lambda_i for any i up to the number of e_i arguments, beyond the
  /// generators of the ring presentation.
  bool allow_extended_lambda = false;
};

/// Formal integer combination of representation symbols.
class VirtualRepExpr {
 public:
  using TermMap = std::map<RepSymbol, std::int64_t>;

  VirtualRepExpr() = default;
  VirtualRepExpr(std::initializer_list<std::pair<const RepSymbol, std::int64_t>> terms);

  /// Parses `8 + lambda2 + delta+`, `2*lambda1 + delta-`, `triv:3 - lambda1`.
  /// A `+`/`-` written directly after `delta` is part of the symbol.
  static VirtualRepExpr parse(std::string_view text);

  VirtualRepExpr& add(const RepSymbol& s, std::int64_t multiplicity);
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  friend VirtualRepExpr operator+(VirtualRepExpr a, const VirtualRepExpr& b);
  friend bool operator==(const VirtualRepExpr&, const VirtualRepExpr&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Throws Domain if `s` is not a symbol of R(Spin(n)) under `opts`.
void validate_symbol(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts = {});

/// Character restricted to the maximal torus T^m, in m variables.
MultiLaurent character_on_torus(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts = {});
MultiLaurent character_on_torus(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts = {});

/// Character restricted to the first circle factor T^1. Equal to
/// substitute_ones(character_on_torus(g, e), 0), computed without building the
/// m-variable character.
UniLaurent character_on_circle(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts = {});
UniLaurent character_on_circle(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts = {});

/// f_1^*(lambda_i) = alpha + beta (z^2 + z^-2).
struct LambdaClosedForm {
  BigInt alpha;
  BigInt beta;
};

/// Literal convention: alpha_i = 2^i C(m-1, i), beta_i = 2^(i-1) C(m-1, i-1).
/// Under VectorRep with odd n the extra zero weight adds the (i-1) values.
/// i = 0 gives (1, 0); other i must be in the generator range.
LambdaClosedForm closed_form_f1_lambda(const SpinGroup& g, int i,
                                       LambdaConvention convention = LambdaConvention::Literal);

enum class SpinorType { Real, Complex, Quaternionic };

std::string_view spinor_type_name(SpinorType t);  // "R" | "C" | "H"

/// Type of the (half-)spinor representation, periodic in n mod 8.
SpinorType spinor_type(int n);

struct SpinorTypeInfo {
  int n = 0;
  int m = 0;
  SpinorType type = SpinorType::Real;
  int h = 0;                  // deg z = 2^h
  std::uint64_t deg_z = 0;
  int tabulated_h = 0;        // value listed in the classical n mod 8 table
  std::optional<std::string> discrepancy;  // set when tabulated_h != h
};

/// Largest n accepted by quillen_h (keeps 2^h in 64 bits).
inline constexpr int kMaxQuillenN = 120;

/// Degree exponent h of the polynomial generator z of H*(BSpin(n); Z/2), from
/// the Radon-Hurwitz rule h(8k + l) = 4k-1, 4k, 4k+1, 4k+2, 4k+2, 4k+3, 4k+3, 4k+3.
SpinorTypeInfo quillen_h(int n);

BigInt dimension(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts = {});

}  // namespace spinchern
