#pragma once

#include <spinchern/bigint.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace spinchern {

enum class CoeffRing { Integers, Mod2 };

/// Polynomial c_0 + c_1 u + ... + c_N u^N in the degree-2 class u, with every
/// power above the cutoff N discarded. Over Mod2 each coefficient is 0 or 1.
class TruncatedPoly {
 public:
  TruncatedPoly(CoeffRing ring, int cutoff);

  static TruncatedPoly one(CoeffRing ring, int cutoff);
  static TruncatedPoly monomial(CoeffRing ring, int cutoff, int power, const BigInt& c = 1);
  static TruncatedPoly from_coefficients(CoeffRing ring, int cutoff, std::vector<BigInt> coeffs);

  CoeffRing ring() const noexcept { return ring_; }
  int cutoff() const noexcept { return cutoff_; }
  /// Highest power with a nonzero coefficient, -1 for the zero series.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coefficient(int k) const;
  /// Powers with nonzero coefficients, ascending.
  std::vector<int> support() const;
  bool is_one() const;

  /// Drops powers above `new_cutoff` (which must not exceed the current cutoff).
  TruncatedPoly truncated(int new_cutoff) const;

  friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b);
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.ring_ == b.ring_ && a.cutoff_ == b.cutoff_ && a.coeffs_ == b.coeffs_;
  }

  /// Ascending powers: `1 - 8*u^2 + 28*u^4`.
  std::string to_string(std::string_view var = "u") const;

 private:
  void normalize();

  CoeffRing ring_;
  int cutoff_;
  std::vector<BigInt> coeffs_;  // trailing zeros trimmed
};

TruncatedPoly trunc_mul(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly trunc_pow(const TruncatedPoly& a, unsigned long k);
/// Multiplicative inverse up to the cutoff; the constant term must be a unit.
TruncatedPoly trunc_inverse(const TruncatedPoly& a);

}  // namespace spinchern
