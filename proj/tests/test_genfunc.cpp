#include <doctest.h>

#include "kzeck/core_sequences.hpp"
#include "kzeck/errors.hpp"
#include "kzeck/genfunc.hpp"
#include "oracles.hpp"

using namespace kzeck;

namespace {

std::vector<Rational> coeffs(const RationalPowerSeries& s) { return s.coefficients(); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

struct WordMoments {
  Rational count, s1, s2;
};

WordMoments word_moments(int k, int n) {
  WordMoments m{0, 0, 0};
  for (const auto& w : oracle::words(k, n)) {
    const int c = oracle::ones(w);
    m.count += 1;
    m.s1 += c;
    m.s2 += c * c;
  }
  return m;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const std::size_t N = 5;
  RationalPowerSeries den(ints({1, -2, 0, 0, 1, 0}), N);
  const auto q = series_div(RationalPowerSeries::constant(1, N), den, N);
  CHECK(coeffs(q) == ints({1, 2, 4, 8, 15, 28}));
  CHECK(series_mul(q, den, N) == RationalPowerSeries::constant(1, N));
  CHECK(series_mul(q, RationalPowerSeries::constant(1, N), N) == q);
  CHECK(series_sub(series_add(q, den, N), den, N) == q);
  CHECK_THROWS_AS(series_div(q, RationalPowerSeries::monomial(1, 1, N), N), DivisionByNonUnit);
}

TEST_CASE("(1 - x) delta_k = 1 - 2x + x^{k+1}") {
  for (int k = 2; k <= 6; ++k) {
    const std::size_t N = 12;
    RationalPowerSeries one_minus_x(ints({1, -1}), N);
    const auto lhs = series_mul(one_minus_x, series_delta(k, N), N);
    RationalPowerSeries rhs(N);
    rhs[0] = 1;
    rhs[1] = -2;
    rhs[static_cast<std::size_t>(k + 1)] += 1;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("A_k examples") {
  CHECK(coeffs(series_A(3, 5)) == ints({0, 1, 2, 3, 6, 11}));
  CHECK(coeffs(series_A(2, 3)) == ints({0, 1, 1, 2}));
  const auto b = series_B(3, 3);
  CHECK(b[1] == 1);
  CHECK(b[3] == 5);
}

TEST_CASE("[x^3] C_3 is the sum of squared ones over W_{3,3}") {
  // Words 100, 101, 110 carry 1, 2, 2 ones: 1 + 4 + 4 = 9.
  CHECK(series_C(3, 3)[3] == 9);
  CHECK(series_C(3, 3)[3] == word_moments(3, 3).s2);
}

TEST_CASE("A_k counts layers") {
  for (int k = 2; k <= 5; ++k) {
    KBonacciContext ctx(k);
    const auto a = series_A(k, 40);
    for (long n = 1; n <= 40; ++n) CHECK(a[static_cast<std::size_t>(n)] == Rational(ctx.number(n + 2) - ctx.number(n + 1)));
  }
}

TEST_CASE("A, B, C agree with word enumeration") {
  for (int k = 2; k <= 4; ++k) {
    const auto a = series_A(k, 16), b = series_B(k, 16), c = series_C(k, 16);
    for (int n = 1; n <= 16; ++n) {
      const auto m = word_moments(k, n);
      const auto i = static_cast<std::size_t>(n);
      CHECK(a[i] == m.count);
      CHECK(b[i] == m.s1);
      CHECK(c[i] == m.s2);
      CHECK(exact_mean(k, n) == m.s1 / m.count);
      CHECK(exact_variance(k, n) == m.s2 / m.count - (m.s1 / m.count) * (m.s1 / m.count));
    }
  }
}

TEST_CASE("exact moments examples") {
  CHECK(exact_mean(3, 3) == Rational(5, 3));
  CHECK(exact_mean(3, 1) == 1);
  CHECK(exact_variance(3, 1) == 0);
  CHECK(exact_variance(3, 3) == Rational(2, 9));
}

TEST_CASE("coefficients are nonnegative integers") {
  for (int k = 2; k <= 5; ++k) {
    const auto a = series_A(k, 30), b = series_B(k, 30), c = series_C(k, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(a[n].get_den() == 1);
      CHECK(b[n].get_den() == 1);
      CHECK(sgn(a[n]) >= 0);
      CHECK(sgn(b[n]) >= 0);
      CHECK(sgn(c[n]) >= 0);
    }
  }
}

TEST_CASE("mean differences settle") {
  const auto table = moment_table(3, 60);
  const Rational d60 = table.mean(60) - table.mean(59), d50 = table.mean(50) - table.mean(49);
  CHECK(std::abs(Rational(d60 - d50).get_d()) < 1e-6);
}

TEST_CASE("bivariate check") {
  CHECK(f_fix_bivariate_check(3, 10, 10));
  CHECK(f_fix_bivariate_check(2, 8, 8));
  CHECK(oracle::words(3, 3).size() == 3);  // 111 is excluded
}
