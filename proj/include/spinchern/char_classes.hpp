#pragma once

#include <spinchern/laurent.hpp>
#include <spinchern/spin_reps.hpp>
#include <spinchern/truncated_poly.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace spinchern {

/// Total Chern class over Z, as a series in u (deg u = 2); c_k is the u^k coefficient.
using ChernSeries = TruncatedPoly;
/// Total Stiefel-Whitney class over Z/2 in the same u; w_{2k} is the u^k coefficient.
using SWSeries = TruncatedPoly;

/// Line-bundle weights of a circle character: weight k with multiplicity a_k > 0.
class WeightMultiset {
 public:
  using Map = std::map<int, std::uint64_t>;

  WeightMultiset() = default;
  WeightMultiset(std::initializer_list<std::pair<const int, std::uint64_t>> weights);

  WeightMultiset& add(int weight, std::uint64_t multiplicity);
  const Map& weights() const noexcept { return weights_; }
  std::uint64_t multiplicity(int weight) const;
  std::uint64_t total() const;
  bool empty() const noexcept { return weights_.empty(); }

  /// Multiset union (direct sum of the line-bundle decompositions).
  friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b);
  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

  std::string to_string() const;  // `{-1: 8, 1: 8}`

 private:
  Map weights_;
};

/// Reads weights off a genuine character. Throws VirtualCharacter on a
/// negative coefficient.
WeightMultiset weights_from_character(const UniLaurent& ch);

/// Splits a virtual character into positive and negative parts, ch = pos - neg.
struct VirtualWeights {
  WeightMultiset positive;
  WeightMultiset negative;
};
VirtualWeights split_virtual_character(const UniLaurent& ch);

/// prod_k (1 + k u)^{a_k} over Z, truncated at `cutoff`. With ring = Mod2
/// the same product is formed directly over Z/2, which equals
/// mod2(total_chern(w, cutoff)) without the integral intermediate.
ChernSeries total_chern(const WeightMultiset& w, int cutoff, CoeffRing ring = CoeffRing::Integers);

/// total_chern(pos) * total_chern(neg)^{-1}.
ChernSeries total_chern_virtual(const WeightMultiset& pos, const WeightMultiset& neg, int cutoff);

/// Coefficientwise reduction mod 2.
SWSeries mod2(const ChernSeries& c);

/// Stiefel-Whitney class of the real representation whose complexification is
/// the palindromic character `ch`: each pair z^k + z^-k (k > 0) is one real
/// 2-plane bundle with w = 1 + k u mod 2.
SWSeries total_sw_real(const UniLaurent& ch, int cutoff);

/// mod2(total_chern(weights(ch))) == total_sw_real(ch)^2.
bool complexification_check(const UniLaurent& ch, int cutoff);

/// Every positive-degree class pulled back from BSO(n) vanishes on the circle:
/// the total SW class of f_1^*(lambda_1) is 1.
bool vanishing_on_bso_check(const SpinGroup& g, int cutoff);

}  // namespace spinchern
