#include <spinchern/error.hpp>
#include <spinchern/spin_reps.hpp>
#include <spinchern/steenrod.hpp>

#include <algorithm>
#include <sstream>

namespace spinchern {

SWMonomial::SWMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  for (int i : indices_) {
    if (i < 1) fail(ErrorCode::InvalidArgument, "Stiefel-Whitney index must be at least 1");
    degree_ += i;
  }
}

bool SWMonomial::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SWMonomial operator*(const SWMonomial& a, const SWMonomial& b) {
  SWMonomial r;
  r.indices_.reserve(a.indices_.size() + b.indices_.size());
  std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
             std::back_inserter(r.indices_));
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::string SWMonomial::to_string() const {
  if (indices_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t p = 0; p < indices_.size();) {
    std::size_t q = p;
    while (q < indices_.size() && indices_[q] == indices_[p]) ++q;
    if (p > 0) out << '*';
    out << 'w' << indices_[p];
    if (q - p > 1) out << '^' << (q - p);
    p = q;
  }
  return out.str();
}

GradedPolyF2::GradedPolyF2(int n, bool oriented) : n_(n), oriented_(oriented) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "generator bound n must be at least 1");
}

GradedPolyF2 GradedPolyF2::one(int n, bool oriented) {
  GradedPolyF2 p(n, oriented);
  p.toggle(SWMonomial());
  return p;
}

GradedPolyF2 GradedPolyF2::generator(int j, int n, bool oriented) {
  GradedPolyF2 p(n, oriented);
  if (j == 0)
    p.toggle(SWMonomial());
  else if (j > 0)
    p.toggle(SWMonomial({j}));
  return p;
}

GradedPolyF2 GradedPolyF2::from_monomial(const SWMonomial& mono, int n, bool oriented) {
  GradedPolyF2 p(n, oriented);
  p.toggle(mono);
  return p;
}

bool GradedPolyF2::vanishes(const SWMonomial& mono) const {
  return mono.max_index() > n_ || (oriented_ && mono.contains(1));
}

void GradedPolyF2::toggle(const SWMonomial& mono) {
  if (vanishes(mono)) return;
  auto [it, inserted] = terms_.insert(mono);
  if (!inserted) terms_.erase(it);
}

bool GradedPolyF2::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const SWMonomial& m) { return m.degree() == d; });
}

int GradedPolyF2::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) fail(ErrorCode::InvalidArgument, "degree of a non-homogeneous element");
  return terms_.begin()->degree();
}

GradedPolyF2& GradedPolyF2::operator+=(const GradedPolyF2& rhs) {
  if (n_ != rhs.n_ || oriented_ != rhs.oriented_)
    fail(ErrorCode::Mismatch, "Stiefel-Whitney polynomials from different rings");
  for (const auto& m : rhs.terms_) toggle(m);
  return *this;
}

GradedPolyF2 operator*(const GradedPolyF2& a, const GradedPolyF2& b) {
  if (a.n_ != b.n_ || a.oriented_ != b.oriented_)
    fail(ErrorCode::Mismatch, "Stiefel-Whitney polynomials from different rings");
  GradedPolyF2 r(a.n_, a.oriented_);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.toggle(x * y);
  return r;
}

GradedPolyF2 GradedPolyF2::reduced(int new_n, bool oriented) const {
  GradedPolyF2 r(new_n, oriented);
  for (const auto& m : terms_) r.toggle(m);
  return r;
}

std::string GradedPolyF2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

bool binomial_mod2(long a, long b) {
  if (b < 0) return false;
  if (a == -1) return true;  // C(-1, b) = (-1)^b
  if (a < 0) fail(ErrorCode::InvalidArgument, "binomial_mod2 called with negative top argument");
  if (b > a) return false;
  return (a & b) == b;
}

GradedPolyF2 sq_on_generator(int i, int j, int n, bool oriented) {
  if (j < 1 || j > n) fail(ErrorCode::InvalidArgument, "generator w" + std::to_string(j) + " outside 1.." + std::to_string(n));
  if (i < 0) fail(ErrorCode::InvalidArgument, "negative Steenrod square index");
  GradedPolyF2 r(n, oriented);
  if (i > j) return r;
  // Work unoriented so the Wu sum is taken before w_1 is killed.
  GradedPolyF2 full(n, false);
  for (int t = 0; t <= i; ++t) {
    if (!binomial_mod2(static_cast<long>(j) - i + t - 1, t)) continue;
    const int lo = i - t;
    const int hi = j + t;
    if (hi > n) continue;
    std::vector<int> idx;
    if (lo > 0) idx.push_back(lo);
    idx.push_back(hi);
    full.toggle(SWMonomial(std::move(idx)));
  }
  for (const auto& m : full.terms()) r.toggle(m);
  return r;
}

GradedPolyF2 sq(int i, const GradedPolyF2& p) {
  if (i < 0) fail(ErrorCode::InvalidArgument, "negative Steenrod square index");
  const int n = p.n();
  const bool oriented = p.oriented();
  GradedPolyF2 result(n, oriented);
  if (i == 0) return p;

  // gen[j][t] = Sq^t(w_j)
  std::vector<std::vector<GradedPolyF2>> gen(n + 1);

  for (const auto& mono : p.terms()) {
    if (i > mono.degree()) continue;
    // partial[e]: product of Sq^{t_r} over the factors seen so far with sum t_r = e.
    std::vector<GradedPolyF2> partial(i + 1, GradedPolyF2(n, oriented));
    partial[0] = GradedPolyF2::one(n, oriented);
    int remaining = mono.degree();
    for (int j : mono.indices()) {
      if (gen[j].empty())
        for (int t = 0; t <= j; ++t) gen[j].push_back(sq_on_generator(t, j, n, oriented));
      remaining -= j;
      std::vector<GradedPolyF2> next(i + 1, GradedPolyF2(n, oriented));
      for (int e = 0; e <= i; ++e) {
        if (partial[e].is_zero()) continue;
        for (int t = 0; t <= j && e + t <= i; ++t) {
          if (e + t + remaining < i) continue;  // cannot reach excess i any more
          if (gen[j][t].is_zero()) continue;
          next[e + t] += partial[e] * gen[j][t];
        }
      }
      partial = std::move(next);
    }
    result += partial[i];
  }
  return result;
}

SpinPresentation j_ideal_generators(int n) {
  const SpinorTypeInfo info = quillen_h(n);
  SpinPresentation pres;
  pres.n = n;
  pres.h = info.h;
  pres.deg_z = info.deg_z;
  GradedPolyF2 theta = GradedPolyF2::generator(2, n, true);
  for (int r = 1; r <= info.h; ++r) {
    if (r > 1) theta = sq(1 << (r - 2), theta);
    pres.j_generators.push_back(theta);
    pres.degrees.push_back(theta.is_zero() ? (1 << (r - 1)) + 1 : theta.degree());
  }
  return pres;
}

}  // namespace spinchern
