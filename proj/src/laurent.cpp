#include <spinchern/error.hpp>
#include <spinchern/laurent.hpp>

#include <sstream>

namespace spinchern {

namespace {

void require_same_ring(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.variable_count() != b.variable_count())
    fail(ErrorCode::Mismatch, "Laurent polynomials have different variable counts (" +
                                  std::to_string(a.variable_count()) + " vs " +
                                  std::to_string(b.variable_count()) + ")");
}

}  // namespace

MultiLaurent::MultiLaurent(int variable_count) : vars_(variable_count) {
  if (variable_count < 1) fail(ErrorCode::InvalidArgument, "variable count must be at least 1");
}

MultiLaurent MultiLaurent::constant(int variable_count, const BigInt& c) {
  MultiLaurent p(variable_count);
  p.add_term(ExponentVector(variable_count, 0), c);
  return p;
}

MultiLaurent MultiLaurent::monomial(ExponentVector exponents, const BigInt& c) {
  MultiLaurent p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

MultiLaurent MultiLaurent::variable(int variable_count, int index, int power, const BigInt& c) {
  if (index < 0 || index >= variable_count)
    fail(ErrorCode::InvalidArgument, "variable index " + std::to_string(index) + " out of range");
  ExponentVector e(variable_count, 0);
  e[index] = power;
  return monomial(std::move(e), c);
}

BigInt MultiLaurent::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiLaurent::add_term(const ExponentVector& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiLaurent& MultiLaurent::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  require_same_ring(a, b);
  MultiLaurent r(a.vars_);
  ExponentVector e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::string MultiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    std::ostringstream mono;
    for (int k = 0; k < vars_; ++k) {
      if (e[k] == 0) continue;
      if (mono.tellp() > 0) mono << '*';
      mono << 'z';
      if (vars_ > 1) mono << (k + 1);
      if (e[k] != 1) mono << '^' << e[k];
    }
    const std::string m = mono.str();
    if (m.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << m;
    else
      out << mag.get_str() << '*' << m;
  }
  return out.str();
}

MultiLaurent add(const MultiLaurent& a, const MultiLaurent& b) { return a + b; }
MultiLaurent mul(const MultiLaurent& a, const MultiLaurent& b) { return a * b; }

MultiLaurent pow(const MultiLaurent& a, unsigned k) {
  MultiLaurent result = MultiLaurent::constant(a.variable_count(), 1);
  MultiLaurent base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UniLaurent substitute_ones(const MultiLaurent& p, int keep_index) {
  if (keep_index < 0 || keep_index >= p.variable_count())
    fail(ErrorCode::InvalidArgument, "keep_index " + std::to_string(keep_index) +
                                         " out of range for " + std::to_string(p.variable_count()) +
                                         " variables");
  UniLaurent r(1);
  for (const auto& [e, c] : p.terms()) r += UniLaurent::monomial({e[keep_index]}, c);
  return r;
}

MultiLaurent elementary_symmetric(std::span<const MultiLaurent> values, int i, int variable_count) {
  if (i < 0) fail(ErrorCode::InvalidArgument, "elementary symmetric index must be nonnegative");
  const int vars = values.empty() ? variable_count : values.front().variable_count();
  if (static_cast<std::size_t>(i) > values.size()) return MultiLaurent(vars);

  // e_k(x_1..x_j) = e_k(x_1..x_{j-1}) + x_j * e_{k-1}(x_1..x_{j-1}), kept for k <= i.
  std::vector<MultiLaurent> e(i + 1, MultiLaurent(vars));
  e[0] = MultiLaurent::constant(vars, 1);
  int filled = 0;
  for (const auto& v : values) {
    filled = std::min(filled + 1, i);
    for (int k = filled; k >= 1; --k) e[k] += v * e[k - 1];
  }
  return e[i];
}

BigInt evaluate_at_one(const MultiLaurent& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

bool is_palindromic(const UniLaurent& p) {
  if (p.variable_count() != 1)
    fail(ErrorCode::Mismatch, "is_palindromic expects a one-variable Laurent polynomial");
  for (const auto& [e, c] : p.terms()) {
    if (e[0] <= 0) continue;
    if (p.coefficient({-e[0]}) != c) return false;
  }
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0 && p.coefficient({-e[0]}) != c) return false;
  }
  return true;
}

}  // namespace spinchern
