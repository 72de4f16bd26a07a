#pragma once

// Exact generating functions for binary words that start with 1 and avoid
// k consecutive 1s (the word model of a layer of SRs), and the summand-count
// moments extracted from them.
//
//   A_k(x) = F_fix(x, 1)                      counts words of length n
//   B_k(x) = d/dy F_fix(x, y) at y = 1        total number of 1s
//   C_k(x) = (d2/dy2 + d/dy) F_fix at y = 1   sum of (number of 1s)^2
//
// with F_fix = (x y - (x y)^k) / ((1 - x y) Delta_k(x, y)),
// Delta_k(x, y) = 1 - x - x^2 y - ... - x^k y^{k-1}.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace kzeck {

using Rational = mpq_class;

/// Truncated power series with exact rational coefficients [x^0] .. [x^order].
class RationalPowerSeries {
 public:
  explicit RationalPowerSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Truncates (or zero-pads) the given coefficients to the order.
  RationalPowerSeries(std::vector<Rational> coeffs, std::size_t order);

  static RationalPowerSeries monomial(const Rational& c, std::size_t power, std::size_t order);
  static RationalPowerSeries constant(const Rational& c, std::size_t order) { return monomial(c, 0, order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  RationalPowerSeries truncated(std::size_t order) const;

  friend bool operator==(const RationalPowerSeries&, const RationalPowerSeries&) = default;

  // Binary operators work at the smaller of the two orders.
  friend RationalPowerSeries operator+(const RationalPowerSeries& a, const RationalPowerSeries& b);
  friend RationalPowerSeries operator-(const RationalPowerSeries& a, const RationalPowerSeries& b);
  friend RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b);
  /// Throws DivisionByNonUnit when b has a zero constant term.
  friend RationalPowerSeries operator/(const RationalPowerSeries& a, const RationalPowerSeries& b);
  friend RationalPowerSeries operator*(const Rational& c, RationalPowerSeries a);

 private:
  std::vector<Rational> coeffs_;
};

RationalPowerSeries series_add(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order);
RationalPowerSeries series_sub(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order);
RationalPowerSeries series_mul(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order);
RationalPowerSeries series_div(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order);

/// Delta_k(x) = 1 - x - x^2 - ... - x^k.
RationalPowerSeries series_delta(int k, std::size_t order);
RationalPowerSeries series_A(int k, std::size_t order);
RationalPowerSeries series_B(int k, std::size_t order);
RationalPowerSeries series_C(int k, std::size_t order);

Rational exact_mean(int k, long n);
Rational exact_variance(int k, long n);

/// Means and variances for every n in 1..max_n from one set of expansions.
struct MomentTable {
  int k;
  RationalPowerSeries a, b, c;
  Rational mean(long n) const;
  Rational variance(long n) const;
  /// means()[n] for 0 <= n <= max_n; entry 0 is left at zero.
  std::vector<Rational> means() const;
};
MomentTable moment_table(int k, std::size_t max_n);

/// Compares the bivariate coefficients b_{n,m} (words in the layer model of
/// length n with m ones) of both closed forms of F_fix,
///   (1 - x) F_k(x, y) - 1 with F_k = (1 - (xy)^k) / (1 - x - xy + x^{k+1} y^k)
///   (x y - (x y)^k) / ((1 - x y) Delta_k(x, y)),
/// against a direct word count for n <= n_max, m <= m_max.
bool f_fix_bivariate_check(int k, int n_max, int m_max);

}  // namespace kzeck
