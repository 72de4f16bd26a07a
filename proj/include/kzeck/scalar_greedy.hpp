#pragma once

#include <optional>

#include "kzeck/core_sequences.hpp"
#include "kzeck/representations.hpp"

namespace kzeck {

/// k-Zeckendorf representation of m >= 0 by the greedy rule: repeatedly take
/// the largest x_l <= R with l >= 2. Indices are returned ascending.
ScalarIndexSet greedy_decompose(const KBonacciContext& ctx, const BigInt& m);

/// Fewest terms x_l (repetition allowed, 2 <= l <= max_index) summing to m,
/// searching multisets of size at most budget. nullopt when nothing within the
/// bounds sums to m; that is inconclusive, not a counterexample.
std::optional<int> scalar_min_summands_bruteforce(const KBonacciContext& ctx, const BigInt& m,
                                                  long max_index, int budget);

}  // namespace kzeck
