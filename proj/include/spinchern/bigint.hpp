#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spinchern {

using BigInt = mpz_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Binomial with arbitrary-precision top argument.
inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace spinchern
