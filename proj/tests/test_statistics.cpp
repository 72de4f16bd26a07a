#include <doctest.h>

#include <cmath>
#include <numeric>

#include "kzeck/errors.hpp"
#include "kzeck/statistics.hpp"
#include "kzeck/sr_solver.hpp"
#include "oracles.hpp"

using namespace kzeck;

TEST_CASE("enumerate_layer examples") {
  KBonacciContext ctx(3);
  CHECK(layer_sets(ctx, 1) == std::vector<IndexSet>{IndexSet{1}});
  CHECK(layer_sets(ctx, 2) == std::vector<IndexSet>{IndexSet{2}, IndexSet{1, 2}});
  CHECK(layer_sets(ctx, 5).size() == 11);
  CHECK_THROWS_AS(layer_sets(ctx, 0), IndexOutOfDomain);
  KBonacciContext two(2);
  CHECK_THROWS_AS(layer_sets(two, 3), ValidationError);
}

TEST_CASE("layer members are SRs with J = n") {
  for (int k = 3; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (int n = 1; n <= 10; ++n) {
      enumerate_layer(ctx, n, [&](const IndexSet& s) {
        CHECK(is_satisfying(s, k));
        CHECK(max_index_J(s) == n);
        CHECK(find_sr(ctx, evaluate_vector(ctx, s), Strategy::reference) == s);
      });
    }
  }
}

TEST_CASE("layer_stats examples") {
  KBonacciContext ctx(3);
  auto s = layer_stats(ctx, 3);
  CHECK(s.kappa_histogram == std::map<int, std::uint64_t>{{1, 1}, {2, 2}});
  CHECK(s.mean == Rational(5, 3));
  s = layer_stats(ctx, 1);
  CHECK(s.kappa_histogram == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(s.variance == 0);
}

TEST_CASE("summand histogram from vectors matches the word count") {
  for (int k = 3; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (int n = 1; n <= 12; ++n) {
      std::map<int, std::uint64_t> from_vectors, from_words;
      enumerate_layer(ctx, n, [&](const IndexSet& s) {
        ++from_vectors[static_cast<int>(find_sr(ctx, evaluate_vector(ctx, s), Strategy::large_steps).size())];
      });
      for (const auto& w : oracle::words(k, n)) ++from_words[oracle::ones(w)];
      CHECK(from_vectors == from_words);
      CHECK(layer_stats(ctx, n).kappa_histogram == from_words);
    }
  }
}

TEST_CASE("layer means match generating functions") {
  for (int k = 2; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (int n = 1; n <= 16; ++n) {
      const auto s = layer_stats(ctx, n);
      CHECK(s.mean == exact_mean(k, n));
      CHECK(s.variance == exact_variance(k, n));
    }
  }
}

TEST_CASE("gap histogram examples") {
  KBonacciContext ctx(3);
  auto h = gap_histogram(ctx, 3);
  CHECK(h.counts == std::vector<std::uint64_t>{0, 1, 1});
  CHECK(h.n_gaps == 2);
  h = gap_histogram(ctx, 2);
  CHECK(h.counts == std::vector<std::uint64_t>{0, 1});
  CHECK(h.n_gaps == 1);
  CHECK(gap_histogram(ctx, 1).n_gaps == 0);
  CHECK(gap_histogram(ctx, 1).probability(0) == 0.0);
}

TEST_CASE("gap histogram matches word enumeration") {
  for (int k = 2; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (int n = 1; n <= 14; ++n) {
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
      for (const auto& w : oracle::words(k, n)) {
        long prev = -1;
        for (long p = 0; p < n; ++p) {
          if (w[static_cast<std::size_t>(p)] != '1') continue;
          if (prev >= 0) ++counts[static_cast<std::size_t>(p - prev)];
          prev = p;
        }
      }
      const auto h = gap_histogram(ctx, n);
      CHECK(h.counts == counts);
      CHECK(h.counts[0] == 0);
      if (h.n_gaps > 0) {
        double total = 0;
        for (int l = 0; l < n; ++l) total += h.probability(l);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("limiting gap law") {
  const auto sd = spectral_data(3);
  CHECK(limiting_gap_law(sd, 0) == 0.0);
  for (int l = 2; l < 10; ++l) {
    CHECK(limiting_gap_law(sd, l + 1) / limiting_gap_law(sd, l) == doctest::Approx(1.0 / sd.lambda1));
  }
  // Fibonacci: gap 1 is impossible and P(l) = phi^{-l} for l >= 2.
  const auto fib = spectral_data(2);
  CHECK(std::fabs(limiting_gap_law(fib, 1)) < 1e-12);
  double total = 0;
  for (int l = 2; l < 200; ++l) {
    CHECK(limiting_gap_law(fib, l) == doctest::Approx(std::pow(fib.lambda1, -l)).epsilon(1e-8));
    total += limiting_gap_law(fib, l);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("empirical gap ratios approach 1/lambda") {
  // At finite n the ratio sits below 1/lambda by roughly 1/(lambda (n - l)).
  KBonacciContext ctx(3);
  const double lambda = spectral_data(3).lambda1;
  std::vector<double> previous;
  for (int n : {16, 20, 24, 28}) {
    const auto h = gap_histogram(ctx, n);
    std::vector<double> dev;
    for (int l = 3; l <= 8; ++l) {
      dev.push_back(1.0 / lambda - h.probability(l + 1) / h.probability(l));
      CHECK(dev.back() > 0);
      CHECK(dev.back() < 1.0 / (lambda * (n - l - 2)));
    }
    if (!previous.empty()) {
      for (std::size_t i = 0; i < dev.size(); ++i) CHECK(dev[i] < previous[i]);
    }
    previous = dev;
  }
}

TEST_CASE("gaussian diagnostics") {
  KBonacciContext ctx(3);
  std::vector<LayerStats> stats;
  for (int n = 8; n <= 24; ++n) stats.push_back(layer_stats(ctx, n));
  const auto g = gaussian_diagnostics(stats);
  CHECK(g.skew_trend);
  CHECK(std::fabs(g.skewness.back()) < std::fabs(g.skewness.front()));
  for (std::size_t i = 1; i < stats.size(); ++i) CHECK(stats[i].variance > stats[i - 1].variance);
  const double step = Rational(stats.back().mean - stats[stats.size() - 2].mean).get_d();
  CHECK(std::fabs(step - spectral_data(3).c_lek) < 0.01);
  std::vector<LayerStats> reversed(stats.rbegin(), stats.rend());
  CHECK_THROWS_AS(gaussian_diagnostics(reversed), ValidationError);
}
