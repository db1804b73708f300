#pragma once

#include <limits>

#include "entrocon/chain.hpp"
#include "entrocon/scalar_functions.hpp"

namespace entrocon {

/// Divergences use natural log throughout; an incompatible support yields an
/// explicit +inf marker, never an overflow.
constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();
inline bool is_infinite(double d) { return d == kInfiniteDivergence; }

double kl(const Distribution& nu, const Distribution& mu);
double chi2_div(const Distribution& nu, const Distribution& mu);
double tv(const Distribution& nu, const Distribution& mu);

/// Ent_pi(f) = pi[f log(f / pi[f])]. Requires f >= 0, not identically zero.
double entropy_functional(const Distribution& pi, const DensityFunction& f);

/// Var_pi(f) = pi[f^2] - pi[f]^2.
double variance_functional(const Distribution& pi, const Vec& f);

/// Dirichlet form E_{pi,P}(f,g) = -pi[f (Lg)] with generator L = P - I.
double dirichlet_form(const ReversiblePair& pair, const Vec& f, const Vec& g);

/// E(f, f) via the two-sided sum (1/2) sum pi(x)P(x,y) (f(x)-f(y))^2;
/// algebraically equal to dirichlet_form(pair, f, f) for reversible pairs but
/// free of cancellation near constant f.
double dirichlet_energy(const ReversiblePair& pair, const Vec& f);

/// E(f, log f) via the two-sided sum; +inf when some edge of P joins a zero
/// of f to a positive value.
double dirichlet_entropy_form(const ReversiblePair& pair, const Vec& f);

/// d/dt Ent_pi(f_t) = -E(f_t, log f_t) along the semigroup started at nu.
/// At t = 0 with a boundary-supported nu the analytic form is -inf; the
/// stated contract falls back to a one-sided difference there.
double entropy_decay_derivative(const ReversiblePair& pair, const Distribution& nu, double t);

/// d/dt Var_pi(f_t) = -2 E(f_t, f_t).
double variance_decay_derivative(const ReversiblePair& pair, const Distribution& nu, double t);

}  // namespace entrocon
