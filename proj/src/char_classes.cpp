#include <spinchern/char_classes.hpp>
#include <spinchern/error.hpp>

#include <algorithm>
#include <sstream>

namespace spinchern {

WeightMultiset::WeightMultiset(std::initializer_list<std::pair<const int, std::uint64_t>> weights) {
  for (const auto& [k, a] : weights) add(k, a);
}

WeightMultiset& WeightMultiset::add(int weight, std::uint64_t multiplicity) {
  if (multiplicity > 0) weights_[weight] += multiplicity;
  return *this;
}

std::uint64_t WeightMultiset::multiplicity(int weight) const {
  auto it = weights_.find(weight);
  return it == weights_.end() ? 0 : it->second;
}

std::uint64_t WeightMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, a] : weights_) t += a;
  return t;
}

WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) {
  for (const auto& [k, m] : b.weights_) a.add(k, m);
  return a;
}

std::string WeightMultiset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, a] : weights_) {
    out << (first ? "" : ", ") << k << ": " << a;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

void require_circle(const UniLaurent& ch) {
  if (ch.variable_count() != 1)
    fail(ErrorCode::Mismatch, "expected a circle character (one variable), got " +
                                  std::to_string(ch.variable_count()) + " variables");
}

std::uint64_t to_multiplicity(const BigInt& c) {
  if (!mpz_fits_ulong_p(c.get_mpz_t())) fail(ErrorCode::InvalidArgument, "weight multiplicity too large");
  return c.get_ui();
}

// (1 + k u)^a, truncated.
TruncatedPoly linear_power(long k, std::uint64_t a, int cutoff) {
  const std::uint64_t top = std::min<std::uint64_t>(a, static_cast<std::uint64_t>(cutoff));
  std::vector<BigInt> c(top + 1);
  BigInt binom = 1;
  BigInt kp = 1;
  c[0] = 1;
  for (std::uint64_t j = 1; j <= top; ++j) {
    binom *= static_cast<unsigned long>(a - j + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
    kp *= k;
    c[j] = binom * kp;
  }
  return TruncatedPoly::from_coefficients(CoeffRing::Integers, cutoff, std::move(c));
}

// (1 - k^2 u^2)^a = ((1 + k u)(1 - k u))^a, truncated.
TruncatedPoly conjugate_pair_power(long k, std::uint64_t a, int cutoff) {
  const std::uint64_t top = std::min<std::uint64_t>(a, static_cast<std::uint64_t>(cutoff / 2));
  std::vector<BigInt> c(2 * top + 1);
  BigInt binom = 1;
  BigInt kp = 1;
  const BigInt minus_k2 = -BigInt(k) * k;
  c[0] = 1;
  for (std::uint64_t j = 1; j <= top; ++j) {
    binom *= static_cast<unsigned long>(a - j + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
    kp *= minus_k2;
    c[2 * j] = binom * kp;
  }
  return TruncatedPoly::from_coefficients(CoeffRing::Integers, cutoff, std::move(c));
}

}  // namespace

WeightMultiset weights_from_character(const UniLaurent& ch) {
  require_circle(ch);
  WeightMultiset w;
  for (const auto& [e, c] : ch.terms()) {
    if (c < 0)
      fail(ErrorCode::VirtualCharacter, "character has negative coefficient " + c.get_str() + " at z^" +
                                            std::to_string(e[0]) + "; use total_chern_virtual");
    w.add(e[0], to_multiplicity(c));
  }
  return w;
}

VirtualWeights split_virtual_character(const UniLaurent& ch) {
  require_circle(ch);
  VirtualWeights v;
  for (const auto& [e, c] : ch.terms()) {
    if (c > 0)
      v.positive.add(e[0], to_multiplicity(c));
    else
      v.negative.add(e[0], to_multiplicity(-c));
  }
  return v;
}

ChernSeries total_chern(const WeightMultiset& w, int cutoff, CoeffRing ring) {
  if (ring == CoeffRing::Mod2) {
    // 1 + k u reduces to 1 (k even) or 1 + u (k odd).
    std::uint64_t odd = 0;
    for (const auto& [k, a] : w.weights())
      if (k % 2 != 0) odd += a;
    const SWSeries one_plus_u = TruncatedPoly::one(CoeffRing::Mod2, cutoff) +
                                TruncatedPoly::monomial(CoeffRing::Mod2, cutoff, 1);
    return trunc_pow(one_plus_u, odd);
  }
  ChernSeries total = TruncatedPoly::one(CoeffRing::Integers, cutoff);
  for (const auto& [k, a] : w.weights()) {
    if (k == 0) continue;
    const std::uint64_t partner = w.multiplicity(-k);
    if (k > 0) {
      const std::uint64_t paired = std::min(a, partner);
      if (paired > 0) total = total * conjugate_pair_power(k, paired, cutoff);
      if (a > paired) total = total * linear_power(k, a - paired, cutoff);
    } else if (a > partner) {
      total = total * linear_power(k, a - partner, cutoff);
    }
  }
  return total;
}

ChernSeries total_chern_virtual(const WeightMultiset& pos, const WeightMultiset& neg, int cutoff) {
  if (neg.empty()) return total_chern(pos, cutoff);
  return total_chern(pos, cutoff) * trunc_inverse(total_chern(neg, cutoff));
}

SWSeries mod2(const ChernSeries& c) {
  std::vector<BigInt> coeffs;
  for (int k = 0; k <= c.degree(); ++k) coeffs.push_back(c.coefficient(k));
  return TruncatedPoly::from_coefficients(CoeffRing::Mod2, c.cutoff(), std::move(coeffs));
}

SWSeries total_sw_real(const UniLaurent& ch, int cutoff) {
  require_circle(ch);
  if (!is_palindromic(ch))
    fail(ErrorCode::InvalidArgument, "Stiefel-Whitney classes need a self-conjugate (palindromic) character");
  const WeightMultiset w = weights_from_character(ch);
  SWSeries total = TruncatedPoly::one(CoeffRing::Mod2, cutoff);
  const SWSeries one_plus_u = total + TruncatedPoly::monomial(CoeffRing::Mod2, cutoff, 1);
  for (const auto& [k, a] : w.weights()) {
    // Weight 0 is a trivial real line; even k gives 1 + k u = 1 mod 2.
    if (k <= 0 || k % 2 == 0) continue;
    total = total * trunc_pow(one_plus_u, a);
  }
  return total;
}

bool complexification_check(const UniLaurent& ch, int cutoff) {
  const SWSeries w = total_sw_real(ch, cutoff);
  const SWSeries c = mod2(total_chern(weights_from_character(ch), cutoff));
  return c == w * w;
}

bool vanishing_on_bso_check(const SpinGroup& g, int cutoff) {
  const UniLaurent vector_rep = character_on_circle(g, RepSymbol::lambda(1));
  return total_sw_real(vector_rep, cutoff).is_one() &&
         mod2(total_chern(weights_from_character(vector_rep), cutoff)).is_one();
}

}  // namespace spinchern
