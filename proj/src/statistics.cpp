#include "kzeck/statistics.hpp"

#include <bit>
#include <cmath>

#include "kzeck/errors.hpp"

namespace kzeck {

namespace {

// The word statistics make sense for k = 2 as well; only the IndexSet
// enumeration is tied to vectors.
void check_layer(const KBonacciContext& ctx, int n, int min_k = 3) {
  if (ctx.k() < min_k) throw ValidationError(min_k == 3 ? "layers of vector SRs require k >= 3" : "k must be at least 2");
  if (n < 1 || n > kMaxLayer) throw IndexOutOfDomain("layer index must lie in [1, 30]");
}

}  // namespace

IndexSet mask_to_index_set(std::uint32_t mask) {
  std::vector<long> indices;
  while (mask) {
    indices.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return IndexSet(std::move(indices));
}

void enumerate_layer(const KBonacciContext& ctx, int n, const std::function<void(const IndexSet&)>& visit) {
  check_layer(ctx, n);
  for_each_layer_word(ctx.k(), n, [&](std::uint32_t mask) { visit(mask_to_index_set(mask)); });
}

std::vector<IndexSet> layer_sets(const KBonacciContext& ctx, int n) {
  std::vector<IndexSet> out;
  enumerate_layer(ctx, n, [&](const IndexSet& s) { out.push_back(s); });
  return out;
}

LayerStats layer_stats(const KBonacciContext& ctx, int n) {
  check_layer(ctx, n, 2);
  LayerStats out{n, ctx.k(), 0, {}, 0, 0, 0.0, 0.0};
  for_each_layer_word(ctx.k(), n, [&](std::uint32_t mask) {
    ++out.kappa_histogram[std::popcount(mask)];
    ++out.count;
  });

  // Exact raw power sums, then central moments.
  mpz_class s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (const auto& [kappa, freq] : out.kappa_histogram) {
    const mpz_class f(static_cast<unsigned long>(freq)), x(kappa);
    s1 += f * x;
    s2 += f * x * x;
    s3 += f * x * x * x;
    s4 += f * x * x * x * x;
  }
  const Rational count(mpz_class(static_cast<unsigned long>(out.count)));
  const Rational e1 = Rational(s1) / count, e2 = Rational(s2) / count, e3 = Rational(s3) / count,
                 e4 = Rational(s4) / count;
  const Rational m2 = e2 - e1 * e1;
  const Rational m3 = e3 - 3 * e1 * e2 + 2 * e1 * e1 * e1;
  const Rational m4 = e4 - 4 * e1 * e3 + 6 * e1 * e1 * e2 - 3 * e1 * e1 * e1 * e1;
  out.mean = e1;
  out.variance = m2;
  if (sgn(m2) > 0) {
    const double var = m2.get_d();
    out.skewness = m3.get_d() / std::pow(var, 1.5);
    out.excess_kurtosis = Rational(m4 / (m2 * m2)).get_d() - 3.0;
  }
  return out;
}

double GapHistogram::probability(int l) const {
  if (n_gaps == 0 || l < 0 || static_cast<std::size_t>(l) >= counts.size()) return 0.0;
  return static_cast<double>(counts[static_cast<std::size_t>(l)]) / static_cast<double>(n_gaps);
}

GapHistogram gap_histogram(const KBonacciContext& ctx, int n) {
  check_layer(ctx, n, 2);
  GapHistogram out{n, ctx.k(), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0), 0};
  for_each_layer_word(ctx.k(), n, [&](std::uint32_t mask) {
    int prev = std::countr_zero(mask);
    mask &= mask - 1;
    while (mask) {
      const int bit = std::countr_zero(mask);
      ++out.counts[static_cast<std::size_t>(bit - prev)];
      ++out.n_gaps;
      prev = bit;
      mask &= mask - 1;
    }
  });
  return out;
}

double limiting_gap_law(const SpectralData& spectral, int l) {
  const double lambda = spectral.lambda1, a1 = spectral.a1, c = spectral.c_lek;
  if (l <= 0) return 0.0;
  if (l == 1) return (lambda * (1.0 - 2.0 * a1) + a1) / (lambda * c);
  return (lambda - 1.0) * (lambda - 1.0) * (a1 / c) * std::pow(lambda, -l);
}

GaussianDiagnostics gaussian_diagnostics(std::span<const LayerStats> stats) {
  GaussianDiagnostics out{{}, {}, {}, false, false};
  for (const LayerStats& s : stats) {
    if (!out.n.empty() && s.n <= out.n.back()) throw ValidationError("layer stats must be ordered by increasing n");
    out.n.push_back(s.n);
    out.skewness.push_back(s.skewness);
    out.excess_kurtosis.push_back(s.excess_kurtosis);
  }
  if (out.n.size() >= 2) {
    out.skew_trend = std::fabs(out.skewness.back()) < std::fabs(out.skewness.front());
    out.kurtosis_trend = std::fabs(out.excess_kurtosis.back()) < std::fabs(out.excess_kurtosis.front());
  }
  return out;
}

}  // namespace kzeck
