#include "morsespec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "morsespec/error.hpp"

namespace morsespec::bounds {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Domain, what);
}

void check_delta(double delta) {
  require(std::isfinite(delta) && delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
}

void check_nonnegative(double x, const char* name) {
  require(std::isfinite(x) && x >= 0.0, std::string(name) + " must be finite and >= 0");
}

// (a^n - 1)/(a - 1) for a > 0. Near a == 1 the expm1 form avoids
// cancellation; elsewhere pow keeps integer cases exact.
double geometric_sum(double alpha, long long n) {
  if (alpha == 1.0) return static_cast<double>(n);
  const double h = alpha - 1.0;
  if (std::fabs(h) >= 0.25) return (std::pow(alpha, static_cast<double>(n)) - 1.0) / h;
  return std::expm1(static_cast<double>(n) * std::log1p(h)) / h;
}

// (1 + a)^n and ((1 + a)^n - 1)/a for a >= 0.
double power_1p(double a, long long n) { return std::exp(static_cast<double>(n) * std::log1p(a)); }

double geometric_sum_1p(double a, long long n) {
  if (a == 0.0) return static_cast<double>(n);
  return std::expm1(static_cast<double>(n) * std::log1p(a)) / a;
}

// (64 - 28 delta) / (delta (2 - delta))
double coupling(double delta) { return (64.0 - 28.0 * delta) / (delta * (2.0 - delta)); }

}  // namespace

void validate(const BoundParams& p) {
  check_delta(p.delta);
  check_nonnegative(p.delta0, "delta0");
  check_nonnegative(p.delta1, "delta1");
  check_nonnegative(p.delta2, "delta2");
  require(std::isfinite(p.sigma_minus), "sigma_minus must be finite");
}

double iteration_bound(double x0, double alpha, double beta, long long n) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(beta > 0.0 && std::isfinite(beta), "beta must be positive");
  require(n >= 0, "n must be nonnegative");
  require(std::isfinite(x0), "x0 must be finite");
  const double an = std::pow(alpha, static_cast<double>(n));
  return an * std::max(x0, beta) + beta * geometric_sum(alpha, n);
}

double iteration_oracle(double x0, double alpha, double beta, long long n) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(beta > 0.0 && std::isfinite(beta), "beta must be positive");
  require(n >= 0, "n must be nonnegative");
  require(std::isfinite(x0), "x0 must be finite");
  double x = x0;
  for (long long i = 0; i < n; ++i) x = std::max(alpha * x, 0.0) + beta;
  return x;
}

double eta_bound(double action_abs, double delta, double kappa) {
  check_delta(delta);
  check_nonnegative(action_abs, "action_abs");
  check_nonnegative(kappa, "kappa");
  return 2.0 / (2.0 - delta) * (action_abs + delta / 4.0 + kappa);
}

double step_threshold(double delta) {
  check_delta(delta);
  return delta * (2.0 - delta) / (128.0 - 56.0 * delta);
}

double per_step_bound(const BoundParams& p) {
  validate(p);
  const double threshold = step_threshold(p.delta);
  if (p.delta1 > threshold)
    throw PreconditionError("delta1 exceeds the one-step threshold " + std::to_string(threshold),
                            threshold);
  const double d = p.delta;
  return std::max((1.0 + 8.0 * p.delta1 / (2.0 - d)) * p.sigma_minus, 0.0) + p.delta0 +
         2.0 * p.delta1 * (coupling(d) * p.delta0 + (d + 4.0 * p.delta2) / (2.0 - d));
}

long long min_steps(const BoundParams& p) {
  validate(p);
  const double d = p.delta;
  const double required = (256.0 - 112.0 * d) / (d * (2.0 - d)) * p.delta1;
  return std::max(1LL, static_cast<long long>(std::ceil(required)));
}

double chained_bound(const BoundParams& p, long long n) {
  const long long required = min_steps(p);
  if (n < required)
    throw StepCountError("need at least " + std::to_string(required) + " steps", required);
  const double d = p.delta;
  const double steps = static_cast<double>(n);
  // Per-step increments after splitting: delta1 -> 2 delta1 / n, delta0 -> 2 delta0 / n.
  const double growth = 16.0 * p.delta1 / ((2.0 - d) * steps);
  const double beta = 2.0 / steps * p.delta0 +
                      4.0 / steps * p.delta1 *
                          (coupling(d) * (2.0 / steps) * p.delta0 + (d + 4.0 * p.delta2) / (2.0 - d));
  return power_1p(growth, n) * std::max(p.sigma_minus, beta) + beta * geometric_sum_1p(growth, n);
}

double adiabatic_limit_bound(const BoundParams& p, LimitForm form) {
  validate(p);
  const double d = p.delta;
  const double x = 16.0 * p.delta1 / (2.0 - d);
  // ((2-d) delta0 / delta1) (e^x - 1) -> 16 delta0 as delta1 -> 0.
  const double delta0_term = p.delta1 == 0.0 ? 16.0 * p.delta0
                                              : (2.0 - d) * p.delta0 / p.delta1 * std::expm1(x);
  const double delta2_term = 2.0 * (d + 4.0 * p.delta2) * std::expm1(x);
  const double prefactor = form == LimitForm::Proof ? 0.125 : 1.0;
  return std::exp(x) * std::max(p.sigma_minus, 0.0) + prefactor * (delta0_term + delta2_term);
}

double moser_norm(const MoserNorm& n) {
  check_nonnegative(n.f_c0, "f_c0");
  check_nonnegative(n.h_integral, "h_integral");
  check_nonnegative(n.kappa, "kappa");
  return n.f_c0 + n.h_integral + n.kappa;
}

double corollary_bound(double sigma_minus, double norm_plus, double norm_minus,
                       double norm_diff, double delta) {
  check_delta(delta);
  check_nonnegative(norm_plus, "norm_plus");
  check_nonnegative(norm_minus, "norm_minus");
  check_nonnegative(norm_diff, "norm_diff");
  require(std::isfinite(sigma_minus), "sigma_minus must be finite");
  const double x = 16.0 * norm_diff / (2.0 - delta);
  return std::exp(x) * std::max(sigma_minus, 0.0) +
         0.125 * (2.0 + delta + 8.0 * std::max(norm_plus, norm_minus)) * std::expm1(x);
}

}  // namespace morsespec::bounds
