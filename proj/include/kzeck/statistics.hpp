#pragma once

// Layer statistics over D_n \ D_{n-1}, the vectors whose SR has maximal depth
// exactly n. Each such SR is a binary word of length n starting with 1 and
// avoiding k consecutive 1s: word position p carries depth n + 1 - p. The
// summand count and the gaps are read off the word, so no vector arithmetic
// is needed unless IndexSets are requested.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "kzeck/core_sequences.hpp"
#include "kzeck/errors.hpp"
#include "kzeck/genfunc.hpp"
#include "kzeck/representations.hpp"
#include "kzeck/spectral.hpp"

namespace kzeck {

inline constexpr int kMaxLayer = 30;

namespace detail {

template <typename Visit>
void layer_words(int k, int depth, int run, std::uint32_t mask, Visit& visit) {
  if (depth == 0) {
    visit(mask);
    return;
  }
  layer_words(k, depth - 1, 0, mask, visit);
  if (run + 1 < k) layer_words(k, depth - 1, run + 1, mask | (1U << (depth - 1)), visit);
}

}  // namespace detail

/// Visits every word of layer n as a bitmask (bit i-1 set iff depth i is
/// present), in lexicographic word order.
template <typename Visit>
void for_each_layer_word(int k, int n, Visit&& visit) {
  if (k < 2) throw ValidationError("k must be at least 2");
  if (n < 1 || n > kMaxLayer) throw IndexOutOfDomain("layer index outside [1, 30]");
  detail::layer_words(k, n - 1, 1, 1U << (n - 1), visit);
}

IndexSet mask_to_index_set(std::uint32_t mask);

/// Every SR with maximal depth exactly n, once each, in lexicographic word order.
void enumerate_layer(const KBonacciContext& ctx, int n, const std::function<void(const IndexSet&)>& visit);
std::vector<IndexSet> layer_sets(const KBonacciContext& ctx, int n);

struct LayerStats {
  int n;
  int k;
  std::uint64_t count;
  std::map<int, std::uint64_t> kappa_histogram;
  Rational mean;
  Rational variance;
  double skewness;
  double excess_kurtosis;
};

LayerStats layer_stats(const KBonacciContext& ctx, int n);

struct GapHistogram {
  int n;
  int k;
  /// counts[l] for gap length l in [0, n-1].
  std::vector<std::uint64_t> counts;
  std::uint64_t n_gaps;

  /// P_n(l); zero when there are no gaps or l is out of range.
  double probability(int l) const;
};

GapHistogram gap_histogram(const KBonacciContext& ctx, int n);

/// Limiting gap law with P(0) = 0,
///   P(1) = (lambda_1 (1 - 2 a_1) + a_1) / (lambda_1 C_Lek),
///   P(l) = (lambda_1 - 1)^2 (a_1 / C_Lek) lambda_1^{-l}  for l >= 2.
double limiting_gap_law(const SpectralData& spectral, int l);

struct GaussianDiagnostics {
  std::vector<int> n;
  std::vector<double> skewness;
  std::vector<double> excess_kurtosis;
  /// |skewness| and |excess kurtosis| at the last n are below their values at the first n.
  bool skew_trend;
  bool kurtosis_trend;
};

/// Input must be ordered by increasing n.
GaussianDiagnostics gaussian_diagnostics(std::span<const LayerStats> stats);

}  // namespace kzeck
