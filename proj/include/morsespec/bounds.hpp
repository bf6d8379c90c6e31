#pragma once

namespace morsespec::bounds {

/// Scalar inputs of the continuation estimates.
struct BoundParams {
  double delta = 0.5;        // fixed cut-off width, strictly inside (0, 1)
  double delta0 = 0.0;       // integrated C0 distance of the Hamiltonians
  double delta1 = 0.0;       // C0 distance of the graph functions
  double delta2 = 0.0;       // larger of the two kappa semi-norms
  double sigma_minus = 0.0;  // spectral value at the source
};

/// Throws Error(Domain) unless delta is in (0,1) and the deltas are finite
/// and nonnegative.
void validate(const BoundParams& p);

/// Closed form a^n max{x0, b} + b (a^n - 1)/(a - 1); the geometric factor
/// becomes n when a == 1.
double iteration_bound(double x0, double alpha, double beta, long long n);

/// n-fold application of x -> max{alpha x, 0} + beta.
double iteration_oracle(double x0, double alpha, double beta, long long n);

/// Lagrange multiplier bound (2/(2-delta)) (|A| + delta/4 + kappa).
double eta_bound(double action_abs, double delta, double kappa);

/// Largest delta1 admitted by a single continuation step.
double step_threshold(double delta);

/// One continuation step. Throws PreconditionError (carrying the threshold)
/// when delta1 exceeds step_threshold(delta).
double per_step_bound(const BoundParams& p);

/// Smallest admissible number of steps for splitting a homotopy.
long long min_steps(const BoundParams& p);

/// Bound after splitting the homotopy into n steps and chaining the one-step
/// estimate. Throws StepCountError when n < min_steps(p).
double chained_bound(const BoundParams& p, long long n);

enum class LimitForm {
  Proof,      // with the 1/8 prefactor on the second term
  Statement,  // without it
};

/// n -> infinity limit of chained_bound. Continuous at delta1 == 0.
double adiabatic_limit_bound(const BoundParams& p, LimitForm form = LimitForm::Proof);

struct MoserNorm {
  double f_c0 = 0.0;
  double h_integral = 0.0;
  double kappa = 0.0;
};

double moser_norm(const MoserNorm& n);

/// Bound expressed through Moser-pair norms only.
double corollary_bound(double sigma_minus, double norm_plus, double norm_minus,
                       double norm_diff, double delta);

}  // namespace morsespec::bounds
