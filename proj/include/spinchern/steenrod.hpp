#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace spinchern {

/// Product w_{i_1} ... w_{i_k} of universal Stiefel-Whitney classes, stored as
/// the sorted multiset of indices. The empty monomial is 1.
class SWMonomial {
 public:
  SWMonomial() = default;
  explicit SWMonomial(std::vector<int> indices);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int degree() const noexcept { return degree_; }
  bool contains(int index) const;
  int max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  friend SWMonomial operator*(const SWMonomial& a, const SWMonomial& b);
  friend auto operator<=>(const SWMonomial& a, const SWMonomial& b) { return a.indices_ <=> b.indices_; }
  friend bool operator==(const SWMonomial& a, const SWMonomial& b) { return a.indices_ == b.indices_; }

  /// `w2*w3^2`, or `1` for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<int> indices_;
  int degree_ = 0;
};

/// Element of Z/2[w_1, ..., w_n]. With `oriented` set this is H*(BSO(n); Z/2)
/// and w_1 = 0. Generators above n vanish.
class GradedPolyF2 {
 public:
  GradedPolyF2(int n, bool oriented = true);

  static GradedPolyF2 one(int n, bool oriented = true);
  static GradedPolyF2 generator(int j, int n, bool oriented = true);
  static GradedPolyF2 from_monomial(const SWMonomial& mono, int n, bool oriented = true);

  int n() const noexcept { return n_; }
  bool oriented() const noexcept { return oriented_; }
  const std::set<SWMonomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree of a homogeneous element; -1 for zero. Throws if not homogeneous.
  int degree() const;
  bool is_homogeneous() const;

  /// Adds a monomial mod 2 (toggling it). Monomials that vanish in this ring are ignored.
  void toggle(const SWMonomial& mono);

  GradedPolyF2& operator+=(const GradedPolyF2& rhs);
  friend GradedPolyF2 operator+(GradedPolyF2 a, const GradedPolyF2& b) { return a += b; }
  friend GradedPolyF2 operator*(const GradedPolyF2& a, const GradedPolyF2& b);
  friend bool operator==(const GradedPolyF2& a, const GradedPolyF2& b) {
    return a.n_ == b.n_ && a.oriented_ == b.oriented_ && a.terms_ == b.terms_;
  }

  /// Image in the ring with generator bound `new_n` (w_k -> 0 for k > new_n)
  /// and/or with w_1 killed.
  GradedPolyF2 reduced(int new_n, bool oriented) const;

  /// Monomials joined by ` + ` in ascending order, `0` for zero.
  std::string to_string() const;

 private:
  bool vanishes(const SWMonomial& mono) const;

  int n_;
  bool oriented_;
  std::set<SWMonomial> terms_;
};

/// C(a, b) mod 2 for a >= 0 by Lucas' theorem; C(-1, 0) = 1.
bool binomial_mod2(long a, long b);

/// Wu formula: Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}.
GradedPolyF2 sq_on_generator(int i, int j, int n, bool oriented = true);

/// Sq^i extended to the whole ring by additivity and the Cartan formula.
GradedPolyF2 sq(int i, const GradedPolyF2& p);

/// Generators of the ideal J in H*(BSpin(n)) = H*(BSO(n))/J (x) Z/2[z]:
/// theta_1 = w_2 and theta_{r+1} = Sq^{2^(r-1)} theta_r for r < h.
struct SpinPresentation {
  int n = 0;
  int h = 0;
  std::uint64_t deg_z = 0;
  std::vector<GradedPolyF2> j_generators;
  std::vector<int> degrees;
};

SpinPresentation j_ideal_generators(int n);

}  // namespace spinchern
