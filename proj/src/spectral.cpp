#include "kzeck/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "kzeck/errors.hpp"

namespace kzeck {

namespace {

using LongComplex = std::complex<long double>;

LongComplex horner(std::span<const double> coeffs, LongComplex z, LongComplex* derivative) {
  LongComplex p = 0, dp = 0;
  for (double c : coeffs) {
    dp = dp * z + p;
    p = p * z + static_cast<long double>(c);
  }
  if (derivative) *derivative = dp;
  return p;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.size() < 2 || coeffs.front() == 0.0) {
    throw ValidationError("polynomial needs degree >= 1 and a nonzero leading coefficient");
  }
  const auto degree = static_cast<Eigen::Index>(coeffs.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (Eigen::Index j = 0; j < degree; ++j) companion(0, j) = -coeffs[static_cast<std::size_t>(j) + 1] / coeffs[0];
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("companion eigenvalue solver failed");

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  for (Eigen::Index i = 0; i < degree; ++i) {
    LongComplex z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int iter = 0; iter < 8; ++iter) {
      LongComplex dp;
      const LongComplex p = horner(coeffs, z, &dp);
      if (std::abs(dp) == 0.0L) break;
      z -= p / dp;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Complex& a, const Complex& b) { return std::abs(a) > std::abs(b); });
  return roots;
}

std::vector<Complex> char_poly_roots(int k) {
  if (k < 2 || k > 12) throw ValidationError("char_poly_roots supports 2 <= k <= 12");
  std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, -1.0);
  coeffs[0] = 1.0;
  std::vector<Complex> roots = polynomial_roots(coeffs);
  for (const Complex& z : roots) {
    const double residual = static_cast<double>(std::abs(horner(coeffs, LongComplex(z.real(), z.imag()), nullptr)));
    if (residual > 1e-10) {
      throw ConvergenceFailure("characteristic root residual " + std::to_string(residual) + " exceeds 1e-10");
    }
  }
  Complex& lambda1 = roots.front();
  if (std::abs(lambda1.imag()) > 1e-9 || lambda1.real() <= 1.0 || lambda1.real() >= 2.0) {
    throw ConvergenceFailure("dominant characteristic root is not a real root in (1, 2)");
  }
  lambda1 = Complex(lambda1.real(), 0.0);
  return roots;
}

double binet_a1(const KBonacciContext& ctx, double lambda1) {
  auto estimate = [&](long n) {
    return static_cast<long double>(ctx.number(n + 1).get_d()) / std::pow(static_cast<long double>(lambda1), n);
  };
  const long double a60 = estimate(60);
  const long double a50 = estimate(50);
  const long double drift = std::fabs(a60 - a50) / a60;
  if (drift >= 1e-9L) {
    throw ConvergenceFailure("Binet coefficient drift " + std::to_string(static_cast<double>(drift)));
  }
  return static_cast<double>(a60);
}

Complex BackwardConstants::evaluate(long n) const {
  const Complex rotation = std::polar(std::pow(r, static_cast<double>(n)), theta * static_cast<double>(n));
  return A * rotation + B * std::conj(rotation) + C * std::pow(epsilon, static_cast<double>(n));
}

BackwardConstants backward_constants_k3(const KBonacciContext& ctx) {
  if (ctx.k() != 3) throw ValidationError("backward constants are defined for k = 3");
  const double coeffs[] = {1.0, 1.0, 1.0, -1.0};
  const std::vector<Complex> roots = polynomial_roots(coeffs);

  Complex upper{};
  double eps = 0.0;
  for (const Complex& z : roots) {
    if (std::abs(z.imag()) < 1e-12) eps = z.real();
    else if (z.imag() > 0) upper = z;
  }
  if (eps <= 0.0 || upper == Complex{}) throw ConvergenceFailure("unexpected root structure for mu^3 + mu^2 + mu - 1");

  // Z_0 = 0, Z_{-1} = 1, Z_{-2} = i.
  Eigen::Matrix3cd m;
  const Complex lower = std::conj(upper);
  m << 1.0, 1.0, 1.0, upper, lower, eps, upper * upper, lower * lower, eps * eps;
  Eigen::Vector3cd rhs(0.0, 1.0, Complex(0.0, 1.0));
  const Eigen::Vector3cd abc = m.fullPivLu().solve(rhs);

  BackwardConstants out{std::abs(upper), std::arg(upper), eps, abc[0], abc[1], abc[2],
                        std::asin(std::abs(abc[1]) / std::abs(abc[0]))};

  for (long n = 1; n <= 20; ++n) {
    const Complex z = out.evaluate(n);
    const VecZ& x = ctx.vector(n);
    if (std::lround(z.real()) != x[0].get_si() || std::lround(z.imag()) != x[1].get_si()) {
      throw ReconstructionMismatch("closed form disagrees with X_{-" + std::to_string(n) + "}");
    }
  }
  return out;
}

double lekkerkerker_slope(std::span<const Rational> means, long n_lo, long n_hi) {
  if (n_lo < 1 || n_hi - n_lo < 20) throw ConvergenceFailure("Lekkerkerker window must span at least 20 layers");
  if (static_cast<std::size_t>(n_hi) >= means.size()) throw ValidationError("means do not reach n_hi");
  const auto lo = static_cast<std::size_t>(n_lo), hi = static_cast<std::size_t>(n_hi);
  const Rational slope = (means[hi] - means[lo]) / Rational(n_hi - n_lo);
  const Rational last_step = means[hi] - means[hi - 1];
  const double drift = std::fabs(Rational(last_step - slope).get_d());
  if (drift >= 1e-6) throw ConvergenceFailure("Lekkerkerker slope drift " + std::to_string(drift));
  return slope.get_d();
}

SpectralData spectral_data(int k) {
  KBonacciContext ctx(k);
  SpectralData out;
  out.k = k;
  out.roots = char_poly_roots(k);
  out.lambda1 = out.roots.front().real();
  out.a1 = binet_a1(ctx, out.lambda1);
  const MomentTable table = moment_table(k, 60);
  out.c_lek = lekkerkerker_slope(table.means(), 40, 60);
  if (k == 3) out.backward = backward_constants_k3(ctx);
  return out;
}

void to_json(nlohmann::json& j, const SpectralData& s) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Complex& z : s.roots) roots.push_back({z.real(), z.imag()});
  j = {{"k", s.k}, {"lambda1", s.lambda1}, {"roots", roots}, {"a1", s.a1}, {"c_lek", s.c_lek}};
  if (s.backward) {
    const BackwardConstants& b = *s.backward;
    j["backward"] = {{"r", b.r},
                     {"theta", b.theta},
                     {"epsilon", b.epsilon},
                     {"A", {b.A.real(), b.A.imag()}},
                     {"B", {b.B.real(), b.B.imag()}},
                     {"C", {b.C.real(), b.C.imag()}},
                     {"arcsin_ratio", b.arcsin_ratio}};
  }
}

}  // namespace kzeck
