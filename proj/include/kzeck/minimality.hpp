#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "kzeck/core_sequences.hpp"
#include "kzeck/representations.hpp"

namespace kzeck {

/// Meet-in-the-middle table of every multiset of depths in [1, max_index]
/// with at most `half` elements, keyed by its vector sum (smallest multiset kept).
class MultisetSumTable {
 public:
  MultisetSumTable(const KBonacciContext& ctx, long max_index, int half);

  /// Smallest multiset of size <= budget summing to v, if any. budget <= 2 * half.
  std::optional<std::vector<long>> smallest(const VecZ& v, int budget) const;

 private:
  using Key = std::vector<long long>;
  struct Entry {
    int size;
    std::vector<long> depths;
  };
  void build(std::size_t depth, std::vector<long>& chosen, Key& sum);

  std::vector<Key> vectors_;  // vectors_[i] = X_{-i}
  long max_index_;
  int half_;
  std::map<Key, Entry> table_;
};

/// Fewest k-bonacci vectors (repetition allowed, depths in [1, max_index]) that
/// sum to v, searching sizes up to budget. nullopt means inconclusive within
/// the bounds.
std::optional<int> vector_min_summands_bounded(const KBonacciContext& ctx, const VecZ& v, long max_index, int budget);

struct MinimalityCounterexample {
  IndexSet sr;
  std::vector<long> cheaper;  // multiset of depths with fewer terms
};

struct MinimalityReport {
  int k;
  int layer;
  long max_index;
  long vectors_checked;
  std::vector<MinimalityCounterexample> counterexamples;
};

/// For every v in D_n (every SR with depths <= n), searches for a representation
/// with fewer than |SR(v)| terms using depths <= max_index.
MinimalityReport verify_layer_minimality(const KBonacciContext& ctx, int n, long max_index);

void to_json(nlohmann::json& j, const MinimalityReport& r);

}  // namespace kzeck
