#include "entrocon/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace entrocon {

Distribution::Distribution(Vec w, const Tolerances& tol) : w_(std::move(w)) {
  if (w_.size() == 0) throw std::invalid_argument("Distribution: empty weight vector");
  if (w_.minCoeff() < -tol.dist_nonneg)
    throw std::invalid_argument("Distribution: negative weight");
  if (std::fabs(w_.sum() - 1.0) > tol.dist_sum)
    throw std::invalid_argument("Distribution: weights do not sum to 1");
}

std::vector<Index> Distribution::support() const {
  std::vector<Index> s;
  for (Index i = 0; i < w_.size(); ++i)
    if (w_[i] > 0) s.push_back(i);
  return s;
}

double Distribution::min_positive() const {
  double m = 1.0;
  for (Index i = 0; i < w_.size(); ++i)
    if (w_[i] > 0 && w_[i] < m) m = w_[i];
  return m;
}

bool Distribution::full_support() const { return w_.minCoeff() > 0; }

Distribution Distribution::uniform(Index n) {
  return Distribution(Vec::Constant(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(Index n, Index x) {
  Vec w = Vec::Zero(n);
  w[x] = 1.0;
  return Distribution(std::move(w));
}

Kernel::Kernel(Mat rows, const Tolerances& tol) : m_(std::move(rows)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw std::invalid_argument("Kernel: empty matrix");
  if (m_.minCoeff() < -tol.dist_nonneg) throw std::invalid_argument("Kernel: negative entry");
  for (Index i = 0; i < m_.rows(); ++i)
    if (std::fabs(m_.row(i).sum() - 1.0) > tol.kernel_row_sum)
      throw std::invalid_argument("Kernel: row " + std::to_string(i) + " does not sum to 1");
}

double Kernel::min_positive() const {
  double p = 1.0;
  for (Index i = 0; i < m_.rows(); ++i)
    for (Index j = 0; j < m_.cols(); ++j)
      if (m_(i, j) > 0 && m_(i, j) < p) p = m_(i, j);
  return p;
}

bool Kernel::lazy(double threshold) const {
  if (!square()) return false;
  for (Index i = 0; i < m_.rows(); ++i)
    if (m_(i, i) < threshold) return false;
  return true;
}

bool Kernel::strictly_positive() const { return m_.minCoeff() > 0; }

Kernel Kernel::identity(Index n) { return Kernel(Mat::Identity(n, n)); }

Kernel Kernel::constant_row(Index n_from, const Distribution& target) {
  Mat m(n_from, target.size());
  for (Index i = 0; i < n_from; ++i) m.row(i) = target.weights().transpose();
  return Kernel(std::move(m));
}

Distribution push_forward(const Distribution& nu, const Kernel& K) {
  if (nu.size() != K.from_size()) throw std::invalid_argument("push_forward: dimension mismatch");
  Vec out = (nu.weights().transpose() * K.matrix()).transpose();
  out /= out.sum();
  return Distribution(std::move(out));
}

Kernel reverse_kernel(const Distribution& pi, const Kernel& K) {
  if (pi.size() != K.from_size())
    throw std::invalid_argument("reverse_kernel: dimension mismatch");
  const Vec piK = (pi.weights().transpose() * K.matrix()).transpose();
  Mat R(K.to_size(), K.from_size());
  for (Index y = 0; y < K.to_size(); ++y) {
    if (piK[y] > 0) {
      for (Index x = 0; x < K.from_size(); ++x)
        R(y, x) = pi[x] * K(x, y) / piK[y];
    } else {
      R.row(y) = pi.weights().transpose();
    }
  }
  // clean round-off so each row passes the stochasticity contract exactly
  for (Index y = 0; y < R.rows(); ++y) R.row(y) /= R.row(y).sum();
  return Kernel(std::move(R));
}

Kernel compose(const Kernel& K, const Kernel& L) {
  if (K.to_size() != L.from_size()) throw std::invalid_argument("compose: dimension mismatch");
  return Kernel(K.matrix() * L.matrix());
}

Kernel power(const Kernel& P, int m) {
  if (!P.square()) throw std::invalid_argument("power: kernel must be square");
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  Mat acc = Mat::Identity(P.from_size(), P.from_size());
  Mat base = P.matrix();
  while (m > 0) {
    if (m & 1) acc = acc * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return Kernel(std::move(acc));
}

Kernel semigroup(const Kernel& P, double t, const Tolerances& tol) {
  if (!P.square()) throw std::invalid_argument("semigroup: kernel must be square");
  if (t < 0) throw std::invalid_argument("semigroup: t must be nonnegative");
  if (t > 500) throw std::invalid_argument("semigroup: t beyond desk scale (uniformization weights underflow)");
  const Index n = P.from_size();
  if (t == 0) return Kernel::identity(n);

  double w = std::exp(-t);
  double cum = w;
  Mat term = Mat::Identity(n, n);
  Mat acc = w * term;
  const double target = 1.0 - 0.01 * tol.semigroup_truncation;
  for (int k = 1; k < 100000 && cum < target; ++k) {
    term = term * P.matrix();
    w *= t / k;
    acc += w * term;
    cum += w;
  }
  // distribute the truncated tail uniformly over each row's own mass so rows
  // sum to 1 exactly up to round-off; the perturbation is below the tail mass
  acc /= cum;
  Tolerances relaxed = tol;
  relaxed.kernel_row_sum = tol.semigroup_row;
  return Kernel(std::move(acc), relaxed);
}

DensityFunction::DensityFunction(Vec values) : v_(std::move(values)) {
  if (v_.size() == 0) throw std::invalid_argument("DensityFunction: empty");
  if (v_.minCoeff() < 0) throw std::invalid_argument("DensityFunction: negative value");
}

DensityFunction density(const Distribution& nu, const Distribution& pi) {
  if (nu.size() != pi.size()) throw std::invalid_argument("density: dimension mismatch");
  Vec f = Vec::Zero(nu.size());
  for (Index i = 0; i < nu.size(); ++i) {
    if (pi[i] > 0) {
      f[i] = nu[i] / pi[i];
    } else if (nu[i] > 0) {
      throw std::invalid_argument("density: nu not absolutely continuous w.r.t. pi");
    }
  }
  return DensityFunction(std::move(f));
}

ReversiblePair::ReversiblePair(Distribution pi, Kernel P, const Tolerances& tol)
    : pi_(std::move(pi)), P_(std::move(P)) {
  if (!P_.square() || pi_.size() != P_.from_size())
    throw std::invalid_argument("ReversiblePair: dimension mismatch");
  PairDiagnostics d = validate(pi_, P_);
  if (d.stationarity_residual > tol.stationarity)
    throw std::invalid_argument("ReversiblePair: pi is not stationary for P");
  if (d.detailed_balance_residual > tol.detailed_balance)
    throw std::invalid_argument("ReversiblePair: detailed balance violated");
}

PairDiagnostics validate(const Distribution& pi, const Kernel& P) {
  PairDiagnostics d;
  const Mat& m = P.matrix();
  for (Index i = 0; i < m.rows(); ++i) {
    d.max_row_sum_residual = std::max(d.max_row_sum_residual, std::fabs(m.row(i).sum() - 1.0));
  }
  d.min_entry = m.minCoeff();
  d.pi_sum_residual = std::fabs(pi.weights().sum() - 1.0);
  d.min_pi_entry = pi.weights().minCoeff();
  const Vec piP = (pi.weights().transpose() * m).transpose();
  d.stationarity_residual = (piP - pi.weights()).cwiseAbs().maxCoeff();
  for (Index x = 0; x < m.rows(); ++x)
    for (Index y = x + 1; y < m.cols(); ++y)
      d.detailed_balance_residual = std::max(
          d.detailed_balance_residual, std::fabs(pi[x] * m(x, y) - pi[y] * m(y, x)));
  return d;
}

PairDiagnostics validate(const ReversiblePair& pair) { return validate(pair.pi(), pair.P()); }

}  // namespace entrocon
