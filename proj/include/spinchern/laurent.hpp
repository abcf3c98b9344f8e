#pragma once

#include <spinchern/bigint.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace spinchern {

/// Exponents of z_1, ..., z_m. Negative entries are allowed.
using ExponentVector = std::vector<int>;

/// Multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Terms are kept in a lexicographically ordered map with zero coefficients
/// pruned, so two polynomials are equal iff their term maps are equal. Values
/// are immutable once built; all arithmetic returns fresh objects.
class MultiLaurent {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  explicit MultiLaurent(int variable_count = 1);

  static MultiLaurent constant(int variable_count, const BigInt& c);
  static MultiLaurent monomial(ExponentVector exponents, const BigInt& c = 1);
  /// c * z_{index}^{power}, index is 0-based.
  static MultiLaurent variable(int variable_count, int index, int power = 1, const BigInt& c = 1);

  int variable_count() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  BigInt coefficient(const ExponentVector& e) const;

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& rhs);
  MultiLaurent& operator-=(const MultiLaurent& rhs);
  MultiLaurent& operator*=(const BigInt& scalar);

  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend MultiLaurent operator*(MultiLaurent a, const BigInt& s) { return a *= s; }
  friend MultiLaurent operator*(const BigInt& s, MultiLaurent a) { return a *= s; }
  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Deterministic text form: descending lexicographic term order, explicit
  /// signs, `z1^-2` style exponents (plain `z` when there is one variable).
  std::string to_string() const;

 private:
  void add_term(const ExponentVector& e, const BigInt& c);

  int vars_;
  TermMap terms_;
};

/// A Laurent polynomial in the single variable z. Functions taking a
/// UniLaurent check variable_count() == 1.
using UniLaurent = MultiLaurent;

MultiLaurent add(const MultiLaurent& a, const MultiLaurent& b);
MultiLaurent mul(const MultiLaurent& a, const MultiLaurent& b);
MultiLaurent pow(const MultiLaurent& a, unsigned k);

/// Sets every variable except `keep_index` to 1 and collects the result in one
/// variable. This realizes restriction of characters to the circle factor.
UniLaurent substitute_ones(const MultiLaurent& p, int keep_index);

/// i-th elementary symmetric function of `values`. e_0 = 1 and e_i = 0 for
/// i > values.size(). `variable_count` is only consulted when values is empty.
MultiLaurent elementary_symmetric(std::span<const MultiLaurent> values, int i, int variable_count = 1);

/// Sum of coefficients (the virtual dimension of a character).
BigInt evaluate_at_one(const MultiLaurent& p);

/// True iff the coefficient of z^k equals that of z^-k for every k.
bool is_palindromic(const UniLaurent& p);

}  // namespace spinchern
