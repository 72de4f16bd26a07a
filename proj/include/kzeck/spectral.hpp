#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "kzeck/core_sequences.hpp"
#include "kzeck/genfunc.hpp"

namespace kzeck {

using Complex = std::complex<double>;

/// Closed form of the k = 3 vectors read as complex numbers Z_{-n} = v_1 + i v_2:
///   Z_{-n} = A r^n e^{i n theta} + B r^n e^{-i n theta} + C epsilon^n,
/// where epsilon and r e^{+-i theta} are the roots of mu^3 + mu^2 + mu - 1.
struct BackwardConstants {
  double r;
  double theta;
  double epsilon;
  Complex A;
  Complex B;
  Complex C;
  /// arcsin(|B| / |A|), the limiting angular deviation of Z_{-n} from A e^{i n theta}.
  double arcsin_ratio;

  Complex evaluate(long n) const;
};

struct SpectralData {
  int k;
  double lambda1;
  /// Roots of x^k - x^{k-1} - ... - 1, descending modulus.
  std::vector<Complex> roots;
  double a1;
  double c_lek;
  std::optional<BackwardConstants> backward;  // k = 3 only
};

/// All complex roots of a real polynomial, coefficients from the leading term
/// down. Companion-matrix eigenvalues, then Newton polishing. Sorted by
/// descending modulus.
std::vector<Complex> polynomial_roots(std::span<const double> coeffs);

/// Roots of p(x) = x^k - x^{k-1} - ... - x - 1 for 2 <= k <= 12; roots[0] is
/// the real root lambda_1 in (1, 2). Throws ConvergenceFailure when a residual
/// exceeds 1e-10.
std::vector<Complex> char_poly_roots(int k);

/// a_1 in x_{n+1} ~ a_1 lambda_1^n, taken at n = 60 and checked against n = 50.
double binet_a1(const KBonacciContext& ctx, double lambda1);

/// Requires k = 3. Also verifies the closed form against X_{-n} for n <= 20.
BackwardConstants backward_constants_k3(const KBonacciContext& ctx);

/// (mu_hi - mu_lo) / (hi - lo) from exact layer means (means[n] = mu_n).
/// Throws ConvergenceFailure when the window is narrower than 20 or the last
/// successive difference mu_hi - mu_{hi-1} drifts from the slope by 1e-6 or more.
double lekkerkerker_slope(std::span<const Rational> means, long n_lo, long n_hi);

/// Everything above for one k; C_Lek uses the window [40, 60].
SpectralData spectral_data(int k);

void to_json(nlohmann::json& j, const SpectralData& s);

}  // namespace kzeck
