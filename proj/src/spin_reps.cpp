#include <spinchern/error.hpp>
#include <spinchern/spin_reps.hpp>

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

namespace spinchern {

SpinGroup::SpinGroup(int n) : n_(n) {
  if (n < 6) fail(ErrorCode::Domain, "Spin(n) requires n >= 6, got n = " + std::to_string(n));
}

std::string RepSymbol::name() const {
  switch (kind) {
    case SymbolKind::Trivial: return "triv";
    case SymbolKind::Lambda: return "lambda" + std::to_string(index);
    case SymbolKind::DeltaPlus: return "delta+";
    case SymbolKind::DeltaMinus: return "delta-";
    case SymbolKind::Delta: return "delta";
  }
  return "?";
}

std::string_view convention_name(LambdaConvention c) {
  return c == LambdaConvention::Literal ? "paper-literal" : "vector-rep";
}

LambdaConvention parse_convention(std::string_view text) {
  if (text == "paper-literal") return LambdaConvention::Literal;
  if (text == "vector-rep") return LambdaConvention::VectorRep;
  fail(ErrorCode::InvalidArgument, "unknown convention '" + std::string(text) +
                                       "' (expected paper-literal or vector-rep)");
}

// ---------------------------------------------------------------------------
// Expressions

VirtualRepExpr::VirtualRepExpr(std::initializer_list<std::pair<const RepSymbol, std::int64_t>> terms) {
  for (const auto& [s, k] : terms) add(s, k);
}

VirtualRepExpr& VirtualRepExpr::add(const RepSymbol& s, std::int64_t multiplicity) {
  if (multiplicity == 0) return *this;
  auto& slot = terms_[s];
  slot += multiplicity;
  if (slot == 0) terms_.erase(s);
  return *this;
}

VirtualRepExpr operator+(VirtualRepExpr a, const VirtualRepExpr& b) {
  for (const auto& [s, k] : b.terms_) a.add(s, k);
  return a;
}

std::string VirtualRepExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, k] : terms_) {
    const bool negative = k < 0;
    const std::uint64_t mag = negative ? std::uint64_t(0) - static_cast<std::uint64_t>(k) : k;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (s.kind == SymbolKind::Trivial)
      out << mag;
    else if (mag == 1)
      out << s.name();
    else
      out << mag << '*' << s.name();
  }
  return out.str();
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  VirtualRepExpr parse() {
    VirtualRepExpr result;
    skip_space();
    if (at_end()) error("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      auto [symbol, count] = term();
      result.add(symbol, checked_mul(sign, count));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') error("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return result;
  }

 private:
  std::pair<RepSymbol, std::int64_t> term() {
    skip_space();
    if (at_end()) error("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::int64_t k = integer();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        auto [s, inner] = atom();
        return {s, checked_mul(k, inner)};
      }
      return {RepSymbol::trivial(), k};
    }
    return atom();
  }

  // Returns the symbol and the multiplicity it carries by itself (triv:k).
  std::pair<RepSymbol, std::int64_t> atom() {
    if (consume("lambda")) {
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error("lambda needs an index");
      const std::int64_t i = integer();
      if (i > std::numeric_limits<int>::max()) error("lambda index too large");
      return {RepSymbol::lambda(static_cast<int>(i)), 1};
    }
    if (consume("delta")) {
      if (!at_end() && peek() == '+') {
        ++pos_;
        return {RepSymbol::delta_plus(), 1};
      }
      if (!at_end() && peek() == '-') {
        ++pos_;
        return {RepSymbol::delta_minus(), 1};
      }
      return {RepSymbol::delta(), 1};
    }
    if (consume("triv")) {
      if (at_end() || peek() != ':') return {RepSymbol::trivial(), 1};
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error("triv: needs a count");
      return {RepSymbol::trivial(), integer()};
    }
    error("unknown symbol");
  }

  std::int64_t integer() {
    std::int64_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) error("bad integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) error("multiplicity overflow");
    return r;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "cannot parse '" + std::string(text_) + "' at offset " +
                               std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Number of arguments fed to e_i for lambda_i.
int lambda_argument_count(const SpinGroup& g, LambdaConvention c) {
  return g.m() + ((!g.is_even() && c == LambdaConvention::VectorRep) ? 1 : 0);
}

}  // namespace

VirtualRepExpr VirtualRepExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Characters

void validate_symbol(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts) {
  const std::string where = " for Spin(" + std::to_string(g.n()) + ")";
  switch (s.kind) {
    case SymbolKind::Trivial: return;
    case SymbolKind::DeltaPlus:
    case SymbolKind::DeltaMinus:
      if (!g.is_even()) fail(ErrorCode::Domain, s.name() + " is only defined for even n" + where);
      return;
    case SymbolKind::Delta:
      if (g.is_even()) fail(ErrorCode::Domain, "delta is only defined for odd n" + where);
      return;
    case SymbolKind::Lambda: {
      const int top = opts.allow_extended_lambda ? lambda_argument_count(g, opts.convention)
                                                 : (g.is_even() ? g.m() - 2 : g.m() - 1);
      if (s.index < 1 || s.index > top)
        fail(ErrorCode::Domain, s.name() + " outside the generator range 1.." + std::to_string(top) + where);
      return;
    }
  }
}

MultiLaurent character_on_torus(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts) {
  validate_symbol(g, s, opts);
  const int m = g.m();
  switch (s.kind) {
    case SymbolKind::Trivial: return MultiLaurent::constant(m, 1);
    case SymbolKind::Lambda: {
      std::vector<MultiLaurent> args;
      for (int j = 0; j < m; ++j)
        args.push_back(MultiLaurent::variable(m, j, 2) + MultiLaurent::variable(m, j, -2));
      if (lambda_argument_count(g, opts.convention) > m) args.push_back(MultiLaurent::constant(m, 1));
      return elementary_symmetric(args, s.index, m);
    }
    case SymbolKind::DeltaPlus:
    case SymbolKind::DeltaMinus:
    case SymbolKind::Delta: {
      MultiLaurent sum(m);
      ExponentVector e(m);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        int negatives = 0;
        for (int j = 0; j < m; ++j) {
          const bool neg = (mask >> j) & 1U;
          e[j] = neg ? -1 : 1;
          negatives += neg;
        }
        const bool product_positive = negatives % 2 == 0;
        if (s.kind == SymbolKind::DeltaPlus && !product_positive) continue;
        if (s.kind == SymbolKind::DeltaMinus && product_positive) continue;
        sum += MultiLaurent::monomial(e);
      }
      return sum;
    }
  }
  return MultiLaurent(m);
}

MultiLaurent character_on_torus(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts) {
  MultiLaurent sum(g.m());
  for (const auto& [s, k] : e.terms()) sum += character_on_torus(g, s, opts) * BigInt(static_cast<long>(k));
  return sum;
}

UniLaurent character_on_circle(const SpinGroup& g, const RepSymbol& s, const SymbolOptions& opts) {
  validate_symbol(g, s, opts);
  const int m = g.m();
  switch (s.kind) {
    case SymbolKind::Trivial: return UniLaurent::constant(1, 1);
    case SymbolKind::Lambda: {
      // z_1^2 + z_1^-2 stays, every other torus coordinate maps to 2.
      std::vector<UniLaurent> args;
      args.push_back(UniLaurent::monomial({2}) + UniLaurent::monomial({-2}));
      for (int j = 1; j < m; ++j) args.push_back(UniLaurent::constant(1, 2));
      if (lambda_argument_count(g, opts.convention) > m) args.push_back(UniLaurent::constant(1, 1));
      return elementary_symmetric(args, s.index, 1);
    }
    case SymbolKind::DeltaPlus:
    case SymbolKind::DeltaMinus:
    case SymbolKind::Delta: {
      // Count sign vectors by the sign of the first coordinate.
      BigInt plus = 0, minus = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const bool product_positive = std::popcount(mask) % 2 == 0;
        if (s.kind == SymbolKind::DeltaPlus && !product_positive) continue;
        if (s.kind == SymbolKind::DeltaMinus && product_positive) continue;
        if (mask & 1U)
          ++minus;
        else
          ++plus;
      }
      return UniLaurent::monomial({1}, plus) + UniLaurent::monomial({-1}, minus);
    }
  }
  return UniLaurent(1);
}

UniLaurent character_on_circle(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts) {
  UniLaurent sum(1);
  for (const auto& [s, k] : e.terms()) sum += character_on_circle(g, s, opts) * BigInt(static_cast<long>(k));
  return sum;
}

LambdaClosedForm closed_form_f1_lambda(const SpinGroup& g, int i, LambdaConvention convention) {
  if (i < 0) fail(ErrorCode::Domain, "lambda index must be nonnegative");
  const auto literal = [&](int k) -> LambdaClosedForm {
    const unsigned long m1 = static_cast<unsigned long>(g.m() - 1);
    if (k < 0) return {0, 0};
    if (k == 0) return {1, 0};
    return {pow2(k) * binomial(m1, k), pow2(k - 1) * binomial(m1, k - 1)};
  };
  if (i > 0) validate_symbol(g, RepSymbol::lambda(i), {convention});
  LambdaClosedForm r = literal(i);
  if (lambda_argument_count(g, convention) > g.m()) {
    const LambdaClosedForm lower = literal(i - 1);
    r.alpha += lower.alpha;
    r.beta += lower.beta;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Spinor type and the Quillen exponent

std::string_view spinor_type_name(SpinorType t) {
  switch (t) {
    case SpinorType::Real: return "R";
    case SpinorType::Complex: return "C";
    case SpinorType::Quaternionic: return "H";
  }
  return "?";
}

SpinorType spinor_type(int n) {
  if (n < 6) fail(ErrorCode::Domain, "spinor type requires n >= 6, got n = " + std::to_string(n));
  static constexpr std::array<SpinorType, 8> kByResidue = {
      SpinorType::Real,         SpinorType::Real,         SpinorType::Complex, SpinorType::Quaternionic,
      SpinorType::Quaternionic, SpinorType::Quaternionic, SpinorType::Complex, SpinorType::Real};
  return kByResidue[n % 8];
}

SpinorTypeInfo quillen_h(int n) {
  if (n < 6) fail(ErrorCode::Domain, "quillen_h requires n >= 6, got n = " + std::to_string(n));
  if (n > kMaxQuillenN)
    fail(ErrorCode::Domain, "quillen_h supports n <= " + std::to_string(kMaxQuillenN));
  static constexpr std::array<int, 8> kRadonHurwitz = {-1, 0, 1, 2, 2, 3, 3, 3};
  // Offsets as printed in the classical n mod 8 table.
  static constexpr std::array<int, 8> kTabulated = {-1, -1, 1, 1, 2, 2, 3, 2};
  const int k = n / 8;
  const int l = n % 8;
  SpinorTypeInfo info;
  info.n = n;
  info.m = n / 2;
  info.type = spinor_type(n);
  info.h = 4 * k + kRadonHurwitz[l];
  info.deg_z = std::uint64_t{1} << info.h;
  info.tabulated_h = 4 * k + kTabulated[l];
  if (info.tabulated_h != info.h) {
    std::ostringstream note;
    note << "n = 8k+" << l << " (k = " << k << "): tabulated h = " << info.tabulated_h
         << " disagrees with Radon-Hurwitz h = " << info.h << " (deg z = " << info.deg_z
         << "); using h = " << info.h;
    info.discrepancy = note.str();
  }
  return info;
}

BigInt dimension(const SpinGroup& g, const VirtualRepExpr& e, const SymbolOptions& opts) {
  return evaluate_at_one(character_on_circle(g, e, opts));
}

}  // namespace spinchern
