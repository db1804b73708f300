#include "entrocon/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace entrocon {

double kl(const Distribution& nu, const Distribution& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("kl: dimension mismatch");
  double s = 0;
  for (Index i = 0; i < nu.size(); ++i) {
    if (nu[i] > 0) {
      if (mu[i] <= 0) return kInfiniteDivergence;
      s += nu[i] * std::log(nu[i] / mu[i]);
    }
  }
  return s < 0 ? 0.0 : s;  // clip round-off; KL is nonnegative
}

double chi2_div(const Distribution& nu, const Distribution& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("chi2_div: dimension mismatch");
  double s = 0;
  for (Index i = 0; i < nu.size(); ++i) {
    const double d = nu[i] - mu[i];
    if (mu[i] <= 0) {
      if (nu[i] > 0) return kInfiniteDivergence;
      continue;
    }
    s += d * d / mu[i];
  }
  return s;
}

double tv(const Distribution& nu, const Distribution& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("tv: dimension mismatch");
  return 0.5 * (nu.weights() - mu.weights()).lpNorm<1>();
}

double entropy_functional(const Distribution& pi, const DensityFunction& f) {
  if (pi.size() != f.size()) throw std::invalid_argument("entropy_functional: dimension mismatch");
  const double mean = pi.weights().dot(f.values());
  if (mean <= 0) throw std::invalid_argument("entropy_functional: f identically zero on supp(pi)");
  double s = 0;
  for (Index i = 0; i < pi.size(); ++i)
    if (pi[i] > 0 && f[i] > 0) s += pi[i] * f[i] * std::log(f[i] / mean);
  return s < 0 ? 0.0 : s;
}

double variance_functional(const Distribution& pi, const Vec& f) {
  if (pi.size() != f.size()) throw std::invalid_argument("variance_functional: dimension mismatch");
  const double mean = pi.weights().dot(f);
  double s = 0;
  for (Index i = 0; i < pi.size(); ++i) {
    const double d = f[i] - mean;
    s += pi[i] * d * d;
  }
  return s;
}

double dirichlet_form(const ReversiblePair& pair, const Vec& f, const Vec& g) {
  if (f.size() != pair.size() || g.size() != pair.size())
    throw std::invalid_argument("dirichlet_form: dimension mismatch");
  const Vec Lg = pair.P().matrix() * g - g;
  return -pair.pi().weights().dot(f.cwiseProduct(Lg));
}

double dirichlet_energy(const ReversiblePair& pair, const Vec& f) {
  const Mat& P = pair.P().matrix();
  const Vec& pi = pair.pi().weights();
  double s = 0;
  for (Index x = 0; x < P.rows(); ++x) {
    if (pi[x] == 0) continue;
    for (Index y = x + 1; y < P.cols(); ++y) {
      if (P(x, y) == 0) continue;
      const double d = f[x] - f[y];
      s += pi[x] * P(x, y) * d * d;
    }
  }
  return s;  // both (x,y) orders contribute equally under detailed balance
}

double dirichlet_entropy_form(const ReversiblePair& pair, const Vec& f) {
  const Mat& P = pair.P().matrix();
  const Vec& pi = pair.pi().weights();
  double s = 0;
  for (Index x = 0; x < P.rows(); ++x) {
    if (pi[x] == 0) continue;
    for (Index y = x + 1; y < P.cols(); ++y) {
      if (P(x, y) == 0) continue;
      if (f[x] <= 0 || f[y] <= 0) {
        if (f[x] != f[y]) return kInfiniteDivergence;
        continue;
      }
      s += pi[x] * P(x, y) * (f[x] - f[y]) * std::log(f[x] / f[y]);
    }
  }
  return s;
}

namespace {

DensityFunction density_at_time(const ReversiblePair& pair, const Distribution& nu, double t) {
  const Distribution nut = t == 0 ? nu : push_forward(nu, semigroup(pair.P(), t));
  return density(nut, pair.pi());
}

double entropy_at_time(const ReversiblePair& pair, const Distribution& nu, double t) {
  return entropy_functional(pair.pi(), density_at_time(pair, nu, t));
}

}  // namespace

double entropy_decay_derivative(const ReversiblePair& pair, const Distribution& nu, double t) {
  if (t < 0) throw std::invalid_argument("entropy_decay_derivative: t >= 0");
  DensityFunction f = density_at_time(pair, nu, t);
  const double e = dirichlet_entropy_form(pair, f.values());
  if (!is_infinite(e)) return -e;
  // boundary support at t = 0: one-sided difference
  const double h = 1e-4;
  return (entropy_at_time(pair, nu, t + h) - entropy_at_time(pair, nu, t)) / h;
}

double variance_decay_derivative(const ReversiblePair& pair, const Distribution& nu, double t) {
  if (t < 0) throw std::invalid_argument("variance_decay_derivative: t >= 0");
  DensityFunction f = density_at_time(pair, nu, t);
  return -2.0 * dirichlet_energy(pair, f.values());
}

}  // namespace entrocon
