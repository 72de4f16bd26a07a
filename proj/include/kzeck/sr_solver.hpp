#pragma once

// Finding satisfying representations (SRs) of integer vectors.
//
// Two fast strategies share the vector greedy: bound the maximal index J(v)
// by some j, project with S_{j+1}, run the scalar greedy, and map scalar index
// l back to depth j+1-l. They differ only in how the bound is obtained:
//
//   small steps  write v with X_{-k} = (-1,...,-1) and the basis vectors;
//   large steps  repeatedly subtract the nearest X_{-n} while the Euclidean
//                norm strictly drops, then finish with small steps.
//
// Any decomposition v = X_{-n_1} + ... + X_{-n_N} gives J(v) <= k(N-1) + max n_i.
//
// The reference strategy walks v to 0 one unit at a time and rebuilds the SR
// by carrying; brute_force_sr enumerates every SR below a depth bound.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "kzeck/core_sequences.hpp"
#include "kzeck/representations.hpp"

namespace kzeck {

enum class Strategy { small_steps, large_steps, reference, brute_force };

std::string_view to_string(Strategy s);
/// Accepts "small", "large", "reference", "brute" and the long enum names.
std::optional<Strategy> parse_strategy(std::string_view name);

/// Multiset of depths with multiplicities, read as sum of X_{-i}.
struct Decomposition {
  std::map<long, long> counts;
  Strategy provenance = Strategy::small_steps;

  long term_count() const;
  long max_index() const;
  VecZ evaluate(const KBonacciContext& ctx) const;
};

struct JBound {
  long value = 0;
  Strategy strategy = Strategy::small_steps;
};

Decomposition small_steps_decomposition(const KBonacciContext& ctx, const VecZ& v);

/// Closed form of k(N-1) + max n_i for the small-steps decomposition:
///   |v_m| k + k * sum(v_i - v_m)  when some entry is negative (v_m the most negative),
///   k * sum(v_i) - 1              otherwise.
JBound small_steps_bound(const KBonacciContext& ctx, const VecZ& v);

struct LargeStepsResult {
  Decomposition decomposition;
  JBound bound;
  /// Depths chosen by nearest-vector descent, in order (before the small-steps tail).
  std::vector<long> descent;
  /// Squared norms ||v_1||^2, ||v_2||^2, ... along the committed descent.
  std::vector<BigInt> norms_squared;
};

LargeStepsResult large_steps_decomposition(const KBonacciContext& ctx, const VecZ& v);

/// Depth n >= 1 minimizing ||v - X_{-n}||^2 among ||X_{-n}||^2 <= 4||v||^2,
/// ties to the smaller depth, together with that squared distance.
/// nullopt when v = 0.
struct NearestVector {
  long depth;
  BigInt distance_squared;
};
std::optional<NearestVector> nearest_kbonacci_vector(const KBonacciContext& ctx, const VecZ& v);

/// Vector Zeckendorf greedy with S_{j+1}. Scalar index l maps to depth j+1-l,
/// so the result only reaches depths up to j-1; the output is re-evaluated and
/// JBoundTooSmall is thrown when it does not sum to v (exactly when j <= J(v)).
IndexSet vector_greedy(const KBonacciContext& ctx, const VecZ& v, long j);

/// The unique SR of v. For the greedy strategies the bound is raised by one
/// before calling vector_greedy (see vector_greedy).
IndexSet find_sr(const KBonacciContext& ctx, const VecZ& v, Strategy strategy);

struct NormalizeOptions {
  long max_rewrites = 1'000'000;
  /// Re-evaluate after every rewrite and throw InvariantError if the value moved.
  bool check_value = false;
};

/// Rewrites nonnegative coefficients into the SR of the same vector using
///   merge   c_i..c_{i+k-1} >= 1, i >= 2:  subtract one from each, add one at i-1
///   vanish  c_1..c_k >= 1:                subtract one from each (X_{-1}+...+X_{-k} = 0)
///   split   c_i >= 2:                     c_i -= 1, add one at each of i+1..i+k
/// always fixing the shallowest violation first; a 2 is split and the window
/// it leaves behind is merged at once, i.e. 2X_{-i} = X_{-(i-1)} + X_{-(i+k)}.
IndexSet normalize(const KBonacciContext& ctx, CoefficientVector c, const NormalizeOptions& opts = {});

/// Recursive reference algorithm. While v has a positive entry, peel off the
/// lowest-index one (v - e_i); otherwise add (1,...,1), i.e. peel off X_{-k}.
/// The SR is rebuilt from 0 by adding the peeled terms back and normalizing
/// after each one.
IndexSet reference_recursive_sr(const KBonacciContext& ctx, const VecZ& v);

/// Exhaustive search over all SRs with depths <= max_index.
/// Throws NotFound or MultipleFound.
IndexSet brute_force_sr(const KBonacciContext& ctx, const VecZ& v, long max_index);

}  // namespace kzeck
