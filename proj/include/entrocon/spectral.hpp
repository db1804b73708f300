#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrocon/chain.hpp"

namespace entrocon {

enum class ConstantName { rho, rho0, alpha, delta, lambda, eta_tv, eta_chi2, eta_kl };
enum class BoundKind { closed_form, eigen_exact, optimizer_upper, certified_lower, oracle_grid };

const char* name_of(ConstantName c);
const char* name_of(BoundKind k);

/// One bound on one contraction constant, with an optional extremizer
/// witness (a distribution for the eta family, a density for rho / rho0,
/// an eigenfunction for lambda).
struct ConstantEstimate {
  ConstantName name;
  double value = 0;
  BoundKind kind = BoundKind::closed_form;
  std::optional<Vec> witness;
  double tolerance = 0;
  std::string provenance;
};

/// Spectral gap lambda = 1 - (second largest eigenvalue), computed on the
/// symmetrization D^{1/2} P D^{-1/2} after removing zero-mass states.
/// Reducible chains yield lambda = 0 plus a component labeling.
struct PoincareResult {
  ConstantEstimate estimate;
  bool irreducible = true;
  std::vector<int> component;  // per-state component id (support states only meaningful)
};

PoincareResult poincare(const ReversiblePair& pair);

/// chi^2 contraction coefficient via 1 - eta_chi2(pi,K) = lambda(pi, K K*).
ConstantEstimate eta_chi2(const Distribution& pi, const Kernel& K);

/// Dobrushin coefficient: max over row pairs of TV(K(x,.), K(x',.)).
ConstantEstimate eta_tv(const Distribution& pi, const Kernel& K);

}  // namespace entrocon
