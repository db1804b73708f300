#pragma once

namespace entrocon {

/// Central record of the numeric tolerances used by constructors, validators
/// and property checks. One instance (`Tolerances{}`) is the single source of
/// defaults for the whole library; tests that probe an invariant should read
/// the same field the constructor enforces.
struct Tolerances {
  double dist_sum = 1e-12;          // |sum(pi) - 1|
  double dist_nonneg = 0.0;         // weights must be >= -dist_nonneg
  double kernel_row_sum = 1e-12;    // per-row |sum - 1|
  double stationarity = 1e-10;      // per-entry |pi P - pi|
  double detailed_balance = 1e-10;  // |pi(x)P(x,y) - pi(y)P(y,x)|
  double density_mean = 1e-12;      // |pi[f] - 1| for normalized densities
  double semigroup_row = 1e-10;     // row-stochasticity of e^{t(P-I)}
  double semigroup_truncation = 1e-12;  // series tail mass
  double psd_eigenvalue = -1e-10;   // min eigenvalue threshold for PSD test
  double metric_triangle = 1e-12;   // triangle inequality slack
  double coupling_marginal = 1e-12; // coupling marginal residual
  double lp_coupling = 1e-9;        // LP transport cost / marginal accuracy
  double reducibility = 1e-12;      // eigenvalue-1 multiplicity detection
  double grid_value_slack = 1e-9;   // directed slack on grid certificates
  double modulus_inflation = 0.01;  // relative inflation of modulus bounds
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace entrocon
