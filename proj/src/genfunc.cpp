#include "kzeck/genfunc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "kzeck/errors.hpp"

namespace kzeck {

RationalPowerSeries::RationalPowerSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RationalPowerSeries RationalPowerSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
  RationalPowerSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

RationalPowerSeries RationalPowerSeries::truncated(std::size_t order) const {
  return RationalPowerSeries(coeffs_, order);
}

RationalPowerSeries series_add(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order) {
  RationalPowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n <= a.order()) out[n] += a[n];
    if (n <= b.order()) out[n] += b[n];
  }
  return out;
}

RationalPowerSeries series_sub(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order) {
  RationalPowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n <= a.order()) out[n] += a[n];
    if (n <= b.order()) out[n] -= b[n];
  }
  return out;
}

RationalPowerSeries series_mul(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order) {
  RationalPowerSeries out(order);
  for (std::size_t i = 0; i <= std::min(order, a.order()); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= std::min(order - i, b.order()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalPowerSeries series_div(const RationalPowerSeries& a, const RationalPowerSeries& b, std::size_t order) {
  if (b[0] == 0) throw DivisionByNonUnit();
  RationalPowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = n <= a.order() ? a[n] : Rational(0);
    for (std::size_t i = 1; i <= std::min(n, b.order()); ++i) acc -= b[i] * out[n - i];
    out[n] = acc / b[0];
  }
  return out;
}

RationalPowerSeries operator+(const RationalPowerSeries& a, const RationalPowerSeries& b) {
  return series_add(a, b, std::min(a.order(), b.order()));
}
RationalPowerSeries operator-(const RationalPowerSeries& a, const RationalPowerSeries& b) {
  return series_sub(a, b, std::min(a.order(), b.order()));
}
RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b) {
  return series_mul(a, b, std::min(a.order(), b.order()));
}
RationalPowerSeries operator/(const RationalPowerSeries& a, const RationalPowerSeries& b) {
  return series_div(a, b, std::min(a.order(), b.order()));
}
RationalPowerSeries operator*(const Rational& c, RationalPowerSeries a) {
  for (std::size_t n = 0; n <= a.order(); ++n) a[n] *= c;
  return a;
}

namespace {

using Series = RationalPowerSeries;

void check_k(int k) {
  if (k < 2) throw ValidationError("generating functions require k >= 2");
}

// Pieces of F_fix = N / V and their y-derivatives at y = 1.
struct Pieces {
  Series n, ny, nyy, v, vy, vyy;
};

Pieces pieces(int k, std::size_t order) {
  const auto kk = static_cast<std::size_t>(k);
  const Series one = Series::constant(1, order);
  const Series x = Series::monomial(1, 1, order);
  const Series delta = series_delta(k, order);
  const Series one_minus_x = one - x;

  Series weighted(order);  // sum_{r=1}^{k-1} r x^{r+1}
  Series weighted2(order);  // sum_{r=2}^{k-1} r(r-1) x^{r+1}
  for (std::size_t r = 1; r + 1 <= kk; ++r) {
    if (r + 1 <= order) weighted[r + 1] += Rational(static_cast<long>(r));
    if (r >= 2 && r + 1 <= order) weighted2[r + 1] += Rational(static_cast<long>(r * (r - 1)));
  }

  Pieces p{x - Series::monomial(1, kk, order),
           x - Series::monomial(k, kk, order),
           Series::monomial(-static_cast<long>(k) * (k - 1), kk, order),
           one_minus_x * delta,
           Rational(-1) * (x * delta) - one_minus_x * weighted,
           Rational(-1) * (one_minus_x * weighted2) + Rational(2) * (x * weighted)};
  return p;
}

}  // namespace

Series series_delta(int k, std::size_t order) {
  check_k(k);
  Series d = Series::constant(1, order);
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k) && j <= order; ++j) d[j] -= 1;
  return d;
}

Series series_A(int k, std::size_t order) {
  check_k(k);
  const Pieces p = pieces(k, order);
  return p.n / p.v;
}

Series series_B(int k, std::size_t order) {
  check_k(k);
  const Pieces p = pieces(k, order);
  return (p.ny * p.v - p.n * p.vy) / (p.v * p.v);
}

Series series_C(int k, std::size_t order) {
  check_k(k);
  const Pieces p = pieces(k, order);
  const Series v2 = p.v * p.v;
  const Series numerator = p.nyy * v2 - p.n * p.vyy * p.v - Rational(2) * (p.ny * p.v * p.vy) +
                           Rational(2) * (p.n * p.vy * p.vy);
  return numerator / (v2 * p.v) + series_B(k, order);
}

Rational MomentTable::mean(long n) const {
  if (n < 1 || static_cast<std::size_t>(n) > a.order()) throw ValidationError("n outside moment table");
  const auto i = static_cast<std::size_t>(n);
  return b[i] / a[i];
}

Rational MomentTable::variance(long n) const {
  const Rational m = mean(n);
  const auto i = static_cast<std::size_t>(n);
  return c[i] / a[i] - m * m;
}

std::vector<Rational> MomentTable::means() const {
  std::vector<Rational> out(a.order() + 1);
  for (std::size_t n = 1; n <= a.order(); ++n) out[n] = mean(static_cast<long>(n));
  return out;
}

MomentTable moment_table(int k, std::size_t max_n) {
  return MomentTable{k, series_A(k, max_n), series_B(k, max_n), series_C(k, max_n)};
}

Rational exact_mean(int k, long n) {
  if (n < 1) throw ValidationError("exact_mean requires n >= 1");
  return moment_table(k, static_cast<std::size_t>(n)).mean(n);
}

Rational exact_variance(int k, long n) {
  if (n < 1) throw ValidationError("exact_variance requires n >= 1");
  return moment_table(k, static_cast<std::size_t>(n)).variance(n);
}

namespace {

// Truncated series in x whose coefficients are polynomials in y; both
// variables only appear with nonnegative powers, so truncating y is exact.
class Bivariate {
 public:
  Bivariate(int nx, int ny) : nx_(nx), ny_(ny), c_((nx + 1) * (ny + 1)) {}

  mpz_class& at(int n, int m) { return c_[static_cast<std::size_t>(n * (ny_ + 1) + m)]; }
  const mpz_class& at(int n, int m) const { return c_[static_cast<std::size_t>(n * (ny_ + 1) + m)]; }

  void add_term(long coeff, int n, int m) {
    if (n <= nx_ && m <= ny_) at(n, m) += coeff;
  }

  Bivariate operator*(const Bivariate& o) const {
    Bivariate out(nx_, ny_);
    for (int n1 = 0; n1 <= nx_; ++n1)
      for (int m1 = 0; m1 <= ny_; ++m1) {
        if (at(n1, m1) == 0) continue;
        for (int n2 = 0; n1 + n2 <= nx_; ++n2)
          for (int m2 = 0; m1 + m2 <= ny_; ++m2) out.at(n1 + n2, m1 + m2) += at(n1, m1) * o.at(n2, m2);
      }
    return out;
  }

  Bivariate operator-(const Bivariate& o) const {
    Bivariate out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
  }

  // Requires the x^0 coefficient of the divisor to be the constant 1.
  Bivariate divided_by(const Bivariate& d) const {
    if (d.at(0, 0) != 1) throw DivisionByNonUnit();
    for (int m = 1; m <= ny_; ++m)
      if (d.at(0, m) != 0) throw DivisionByNonUnit();
    Bivariate q(nx_, ny_);
    for (int n = 0; n <= nx_; ++n)
      for (int m = 0; m <= ny_; ++m) {
        mpz_class acc = at(n, m);
        for (int i = 1; i <= n; ++i)
          for (int j = 0; j <= m; ++j) acc -= d.at(i, j) * q.at(n - i, m - j);
        q.at(n, m) = acc;
      }
    return q;
  }

 private:
  int nx_, ny_;
  std::vector<mpz_class> c_;
};

}  // namespace

bool f_fix_bivariate_check(int k, int n_max, int m_max) {
  check_k(k);
  if (n_max < 1 || n_max > 20 || m_max < 0) throw ValidationError("bivariate check bounds out of range");

  // Closed form 1: (1 - x) F_k - 1.
  Bivariate num(n_max, m_max), den(n_max, m_max);
  num.add_term(1, 0, 0);
  num.add_term(-1, k, k);
  den.add_term(1, 0, 0);
  den.add_term(-1, 1, 0);
  den.add_term(-1, 1, 1);
  den.add_term(1, k + 1, k);
  Bivariate one_minus_x(n_max, m_max);
  one_minus_x.add_term(1, 0, 0);
  one_minus_x.add_term(-1, 1, 0);
  Bivariate unit(n_max, m_max);
  unit.add_term(1, 0, 0);
  const Bivariate form1 = one_minus_x * num.divided_by(den) - unit;

  // Closed form 2: (xy - (xy)^k) / ((1 - xy) Delta_k(x, y)).
  Bivariate num2(n_max, m_max), one_minus_xy(n_max, m_max), delta(n_max, m_max);
  num2.add_term(1, 1, 1);
  num2.add_term(-1, k, k);
  one_minus_xy.add_term(1, 0, 0);
  one_minus_xy.add_term(-1, 1, 1);
  delta.add_term(1, 0, 0);
  for (int j = 1; j <= k; ++j) delta.add_term(-1, j, j - 1);
  const Bivariate form2 = num2.divided_by(one_minus_xy * delta);

  // Direct count over words w_1..w_n with w_1 = 1 and no run of k ones.
  Bivariate counted(n_max, m_max);
  for (int n = 1; n <= n_max; ++n) {
    const std::uint32_t lo = 1U << (n - 1), hi = 1U << n;
    for (std::uint32_t w = lo; w < hi; ++w) {
      int run = 0, longest = 0;
      for (int b = 0; b < n; ++b) {
        run = (w >> b) & 1U ? run + 1 : 0;
        longest = std::max(longest, run);
      }
      if (longest >= k) continue;
      const int ones = std::popcount(w);
      if (ones <= m_max) counted.at(n, ones) += 1;
    }
  }

  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= m_max; ++m)
      if (form1.at(n, m) != counted.at(n, m) || form2.at(n, m) != counted.at(n, m)) return false;
  return true;
}

}  // namespace kzeck
