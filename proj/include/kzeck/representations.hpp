#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzeck/core_sequences.hpp"

namespace kzeck {

/// Sorted set of positive depths i, read as the sum of the X_{-i}.
///
/// Construction sorts and rejects duplicates or indices below 1; whether the
/// set is a satisfying representation (no k consecutive depths) is a separate
/// question answered by is_satisfying().
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<long> indices);
  IndexSet(std::initializer_list<long> indices) : IndexSet(std::vector<long>(indices)) {}

  const std::vector<long>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(long i) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

  /// "{1,3,4,7}"
  std::string to_string() const;

 private:
  std::vector<long> indices_;
};

/// Scalar k-Zeckendorf summand indices, ascending, each >= 2.
struct ScalarIndexSet {
  std::vector<long> indices;
  friend bool operator==(const ScalarIndexSet&, const ScalarIndexSet&) = default;
};

/// Nonnegative coefficients c_i over depths i >= 1, finite support.
/// Zero entries are not stored.
class CoefficientVector {
 public:
  CoefficientVector() = default;
  CoefficientVector(std::initializer_list<std::pair<const long, long>> init);
  explicit CoefficientVector(const IndexSet& s);

  long get(long i) const;
  void add(long i, long delta);
  const std::map<long, long>& coeffs() const { return coeffs_; }
  long total() const;
  bool empty() const { return coeffs_.empty(); }

  /// Defined only when every coefficient is 1.
  IndexSet to_index_set() const;

 private:
  std::map<long, long> coeffs_;
};

/// Distinct, >= 1, and no run of k consecutive integers.
bool is_satisfying(std::span<const long> indices, int k);
bool is_satisfying(const IndexSet& s, int k);

/// Nearly satisfying: coefficients in {0,1,2}, no k consecutive nonzero, and at
/// most one maximal run of nonzero coefficients contains a 2.
bool is_nsr(const CoefficientVector& c, int k);

VecZ evaluate_vector(const KBonacciContext& ctx, const IndexSet& s);
VecZ evaluate_coefficients(const KBonacciContext& ctx, const CoefficientVector& c);

/// J: largest index, 0 for the empty set.
long max_index_J(const IndexSet& s);

/// S_n(v) = v . (x_{n-1}, ..., x_{n-(k-1)}) mod x_n, canonical residue in [0, x_n).
/// Requires n >= k-2; when x_n == 1 the result is 0.
BigInt project_Sn(const KBonacciContext& ctx, const VecZ& v, long n);

/// f(s) = sum of x_{i+1} over i in s. Throws NotSatisfying.
BigInt sr_to_integer_f(const KBonacciContext& ctx, const IndexSet& s);

/// Inverse of f: scalar greedy on m, every index shifted down by one.
IndexSet integer_to_sr_f_inverse(const KBonacciContext& ctx, const BigInt& m);

void to_json(nlohmann::json& j, const IndexSet& s);
void from_json(const nlohmann::json& j, IndexSet& s);

}  // namespace kzeck
