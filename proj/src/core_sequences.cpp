#include "kzeck/core_sequences.hpp"

#include <algorithm>
#include <sstream>

#include "kzeck/errors.hpp"

namespace kzeck {

VecZ::VecZ(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

bool VecZ::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& e) { return sgn(e) == 0; });
}

VecZ& VecZ::operator+=(const VecZ& rhs) {
  if (rhs.dim() != dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

VecZ& VecZ::operator-=(const VecZ& rhs) {
  if (rhs.dim() != dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

std::string VecZ::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

VectorNorms vector_norms(const VecZ& v) {
  VectorNorms out{0, 0, 0};
  for (const BigInt& e : v.entries()) {
    BigInt a = abs(e);
    out.l1 += a;
    if (a > out.linf) out.linf = a;
    out.l2_squared += e * e;
  }
  return out;
}

BigInt l2_squared(const VecZ& v) {
  BigInt s = 0;
  for (const BigInt& e : v.entries()) s += e * e;
  return s;
}

KBonacciContext::KBonacciContext(int k) : k_(k) {
  if (k < 2) throw ValidationError("k-bonacci order must be at least 2");
  for (int i = 0; i < k - 2; ++i) scalars_.emplace_back(0);  // x_{-(k-2)} .. x_{-1}
  scalars_.emplace_back(0);                                  // x_0
  scalars_.emplace_back(1);                                  // x_1
  if (k >= 3) {
    vectors_.emplace_back(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      VecZ e(dim());
      e[i] = 1;
      vectors_.push_back(std::move(e));
    }
  }
}

void KBonacciContext::check_dim(const VecZ& v) const {
  if (v.dim() != dim()) {
    throw DimensionMismatch("expected a vector of dimension " + std::to_string(dim()) + ", got " +
                            std::to_string(v.dim()));
  }
}

void KBonacciContext::extend_scalars_to(long n) const {
  const long offset = k_ - 2;
  while (static_cast<long>(scalars_.size()) <= n + offset) {
    const std::size_t m = scalars_.size();
    BigInt next = 0;
    for (int j = 1; j <= k_; ++j) next += scalars_[m - j];
    count_ops(static_cast<std::uint64_t>(k_ - 1));
    scalars_.push_back(std::move(next));
  }
}

const BigInt& KBonacciContext::number(long n) const {
  if (n < -(k_ - 2)) {
    throw IndexOutOfDomain("scalar index " + std::to_string(n) + " is below -(k-2)");
  }
  extend_scalars_to(n);
  return scalars_[static_cast<std::size_t>(n + k_ - 2)];
}

void KBonacciContext::extend_vectors_to(long depth) const {
  while (static_cast<long>(vectors_.size()) <= depth) {
    const long m = static_cast<long>(vectors_.size());
    VecZ next = vectors_[static_cast<std::size_t>(m - k_)];
    for (int j = 1; j <= k_ - 1; ++j) next -= vectors_[static_cast<std::size_t>(m - j)];
    count_ops(static_cast<std::uint64_t>((k_ - 1) * (k_ - 1)));
    vectors_.push_back(std::move(next));
  }
}

const VecZ& KBonacciContext::vector(long depth) const {
  if (k_ < 3) throw ValidationError("k-bonacci vectors require k >= 3");
  if (depth < 0) throw IndexOutOfDomain("vector depth must be nonnegative");
  extend_vectors_to(depth);
  return vectors_[static_cast<std::size_t>(depth)];
}

long KBonacciContext::max_index_at_most(const BigInt& r) const {
  if (r < 1) throw ValidationError("max_index_at_most requires r >= 1");
  // Grow until the last cached term exceeds r.
  long hi = std::max(2L, static_cast<long>(scalars_.size()) - (k_ - 2) - 1);
  while (number(hi) <= r) {
    count_ops();
    ++hi;
  }
  long lo = 2;  // x_2 = 1 <= r
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    count_ops();
    if (number(mid) <= r) lo = mid; else hi = mid;
  }
  return lo;
}

const BigInt& kbonacci_number(const KBonacciContext& ctx, long n) { return ctx.number(n); }

const VecZ& kbonacci_vector(const KBonacciContext& ctx, long depth) { return ctx.vector(depth); }

}  // namespace kzeck
