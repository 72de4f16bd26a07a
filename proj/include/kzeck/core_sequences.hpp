#pragma once

// k-bonacci scalars x_n and k-bonacci vectors X_{-i}, exact and memoized.
//
// Scalars: x_n = 0 for -(k-2) <= n <= 0, x_1 = 1, x_n = x_{n-1} + ... + x_{n-k}.
// Vectors live in Z^{k-1} and are addressed by depth i >= 0 meaning X_{-i}:
// X_0 = 0, X_{-i} = e_i for 1 <= i <= k-1, and deeper terms come from the
// recurrence solved for its oldest term,
//   X_{-m} = X_{-(m-k)} - X_{-(m-1)} - ... - X_{-(m-k+1)}.

#include <atomic>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kzeck {

using BigInt = mpz_class;

/// Integer vector in Z^{k-1}.
class VecZ {
 public:
  VecZ() = default;
  explicit VecZ(std::size_t dim) : entries_(dim) {}
  explicit VecZ(std::vector<BigInt> entries) : entries_(std::move(entries)) {}
  VecZ(std::initializer_list<long> entries);

  std::size_t dim() const { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  BigInt& operator[](std::size_t i) { return entries_[i]; }
  std::span<const BigInt> entries() const { return entries_; }

  bool is_zero() const;

  VecZ& operator+=(const VecZ& rhs);
  VecZ& operator-=(const VecZ& rhs);
  friend VecZ operator+(VecZ lhs, const VecZ& rhs) { return lhs += rhs; }
  friend VecZ operator-(VecZ lhs, const VecZ& rhs) { return lhs -= rhs; }
  friend bool operator==(const VecZ& a, const VecZ& b) { return a.entries_ == b.entries_; }

  /// "(a,b,...)"
  std::string to_string() const;

 private:
  std::vector<BigInt> entries_;
};

struct VectorNorms {
  BigInt l1;
  BigInt linf;
  BigInt l2_squared;
};

VectorNorms vector_norms(const VecZ& v);
BigInt l2_squared(const VecZ& v);

/// Per-k cache of scalar and vector terms.
///
/// Caches grow on demand and are never evicted. Reads of already-cached terms
/// are safe from several threads; growing the cache is not, so either warm it
/// up first or give each thread its own context.
///
/// The context also carries an operation counter that instrumented routines
/// bump once per arbitrary-precision add, subtract, compare or modular
/// reduction. Cache growth is counted too, so a fresh context measures the
/// full cost of a computation.
class KBonacciContext {
 public:
  explicit KBonacciContext(int k);
  KBonacciContext(const KBonacciContext&) = delete;
  KBonacciContext& operator=(const KBonacciContext&) = delete;

  int k() const { return k_; }
  std::size_t dim() const { return static_cast<std::size_t>(k_ - 1); }

  /// x_n, n >= -(k-2). Throws IndexOutOfDomain below that.
  const BigInt& number(long n) const;

  /// X_{-depth}. Requires k >= 3 and depth >= 0.
  const VecZ& vector(long depth) const;

  /// Largest index n >= 2 with x_n <= r, for r >= 1. Binary search over the
  /// cached prefix after extending it past r.
  long max_index_at_most(const BigInt& r) const;

  void count_ops(std::uint64_t n = 1) const { ops_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t op_count() const { return ops_.load(std::memory_order_relaxed); }
  void reset_op_count() const { ops_.store(0, std::memory_order_relaxed); }

  /// Throws unless v has dimension k-1.
  void check_dim(const VecZ& v) const;

 private:
  void extend_scalars_to(long n) const;
  void extend_vectors_to(long depth) const;

  int k_;
  // scalars_[n + k - 2] holds x_n.
  mutable std::deque<BigInt> scalars_;
  mutable std::deque<VecZ> vectors_;
  mutable std::atomic<std::uint64_t> ops_{0};
};

const BigInt& kbonacci_number(const KBonacciContext& ctx, long n);
const VecZ& kbonacci_vector(const KBonacciContext& ctx, long depth);

}  // namespace kzeck
