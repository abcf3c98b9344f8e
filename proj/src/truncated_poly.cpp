#include <spinchern/error.hpp>
#include <spinchern/truncated_poly.hpp>

#include <sstream>

namespace spinchern {

namespace {

const BigInt kZero = 0;

void require_compatible(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.ring() != b.ring()) fail(ErrorCode::Mismatch, "truncated polynomials over different rings");
  if (a.cutoff() != b.cutoff())
    fail(ErrorCode::Mismatch, "truncated polynomials with different cutoffs (" +
                                  std::to_string(a.cutoff()) + " vs " + std::to_string(b.cutoff()) + ")");
}

// In characteristic 2, p(u)^2 = p(u^2).
TruncatedPoly frobenius_square(const TruncatedPoly& a) {
  std::vector<BigInt> out;
  for (int k : a.support()) {
    const long twice = 2L * k;
    if (twice > a.cutoff()) break;
    if (out.size() <= static_cast<std::size_t>(twice)) out.resize(twice + 1);
    out[twice] = 1;
  }
  return TruncatedPoly::from_coefficients(CoeffRing::Mod2, a.cutoff(), std::move(out));
}

}  // namespace

TruncatedPoly::TruncatedPoly(CoeffRing ring, int cutoff) : ring_(ring), cutoff_(cutoff) {
  if (cutoff < 0) fail(ErrorCode::InvalidArgument, "cutoff must be nonnegative");
}

TruncatedPoly TruncatedPoly::one(CoeffRing ring, int cutoff) { return monomial(ring, cutoff, 0, 1); }

TruncatedPoly TruncatedPoly::monomial(CoeffRing ring, int cutoff, int power, const BigInt& c) {
  if (power < 0) fail(ErrorCode::InvalidArgument, "negative power in truncated polynomial");
  TruncatedPoly p(ring, cutoff);
  if (power <= cutoff) {
    p.coeffs_.assign(power + 1, 0);
    p.coeffs_[power] = c;
    p.normalize();
  }
  return p;
}

TruncatedPoly TruncatedPoly::from_coefficients(CoeffRing ring, int cutoff, std::vector<BigInt> coeffs) {
  TruncatedPoly p(ring, cutoff);
  if (coeffs.size() > static_cast<std::size_t>(cutoff) + 1) coeffs.resize(cutoff + 1);
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void TruncatedPoly::normalize() {
  if (ring_ == CoeffRing::Mod2)
    for (auto& c : coeffs_) c = is_odd(c) ? 1 : 0;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& TruncatedPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

std::vector<int> TruncatedPoly::support() const {
  std::vector<int> s;
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k)
    if (coeffs_[k] != 0) s.push_back(k);
  return s;
}

bool TruncatedPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

TruncatedPoly TruncatedPoly::truncated(int new_cutoff) const {
  if (new_cutoff > cutoff_)
    fail(ErrorCode::InvalidArgument, "cannot raise the cutoff of a truncated polynomial");
  return from_coefficients(ring_, new_cutoff, coeffs_);
}

TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_compatible(a, b);
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return TruncatedPoly::from_coefficients(a.ring_, a.cutoff_, std::move(out));
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_compatible(a, b);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return TruncatedPoly(a.ring_, a.cutoff_);
  const int top = std::min<long>(a.cutoff_, static_cast<long>(a.degree()) + b.degree());
  std::vector<BigInt> out(top + 1);
  const auto sa = a.support();
  const auto sb = b.support();
  for (int i : sa) {
    for (int j : sb) {
      if (i + j > top) break;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return TruncatedPoly::from_coefficients(a.ring_, a.cutoff_, std::move(out));
}

std::string TruncatedPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k : support()) {
    const BigInt& c = coeffs_[k];
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

TruncatedPoly trunc_mul(const TruncatedPoly& a, const TruncatedPoly& b) { return a * b; }

TruncatedPoly trunc_pow(const TruncatedPoly& a, unsigned long k) {
  TruncatedPoly result = TruncatedPoly::one(a.ring(), a.cutoff());
  TruncatedPoly base = a;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1U;
    if (k > 0) base = a.ring() == CoeffRing::Mod2 ? frobenius_square(base) : base * base;
  }
  return result;
}

TruncatedPoly trunc_inverse(const TruncatedPoly& a) {
  const BigInt& c0 = a.coefficient(0);
  if (c0 != 1 && !(a.ring() == CoeffRing::Integers && c0 == -1))
    fail(ErrorCode::NotUnit, "constant term " + c0.get_str() + " is not a unit");
  // c0 is its own inverse in both rings.
  const int n = a.cutoff();
  const auto sa = a.support();
  std::vector<BigInt> b(n + 1);
  b[0] = c0;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int j : sa) {
      if (j == 0) continue;
      if (j > k) break;
      mpz_addmul(acc.get_mpz_t(), a.coefficient(j).get_mpz_t(), b[k - j].get_mpz_t());
    }
    b[k] = -c0 * acc;
    if (a.ring() == CoeffRing::Mod2) b[k] = is_odd(b[k]) ? 1 : 0;
  }
  return TruncatedPoly::from_coefficients(a.ring(), n, std::move(b));
}

}  // namespace spinchern
