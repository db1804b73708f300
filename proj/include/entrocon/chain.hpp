#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "entrocon/rational.hpp"
#include "entrocon/tolerances.hpp"

namespace entrocon {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Probability distribution over a finite state space. Immutable after
/// construction; the constructor enforces nonnegativity and unit mass.
class Distribution {
 public:
  explicit Distribution(Vec w, const Tolerances& tol = default_tolerances());

  const Vec& weights() const { return w_; }
  double operator[](Index i) const { return w_[i]; }
  Index size() const { return w_.size(); }

  std::vector<Index> support() const;
  /// min over the support; the pi_min of the comparison bounds.
  double min_positive() const;
  bool full_support() const;

  static Distribution uniform(Index n);
  static Distribution point_mass(Index n, Index x);

 private:
  Vec w_;
};

/// Row-stochastic matrix from one finite state space to another.
class Kernel {
 public:
  explicit Kernel(Mat rows, const Tolerances& tol = default_tolerances());

  const Mat& matrix() const { return m_; }
  double operator()(Index x, Index y) const { return m_(x, y); }
  Index from_size() const { return m_.rows(); }
  Index to_size() const { return m_.cols(); }
  bool square() const { return m_.rows() == m_.cols(); }

  /// min over strictly positive entries; the p_min of the sparsity bounds.
  double min_positive() const;
  bool lazy(double threshold = 0.5) const;  // every diagonal entry >= threshold
  bool strictly_positive() const;

  static Kernel identity(Index n);
  /// The one-step kernel P(x,.) = target for every x.
  static Kernel constant_row(Index n_from, const Distribution& target);

 private:
  Mat m_;
};

Distribution push_forward(const Distribution& nu, const Kernel& K);

/// Reverse channel: K*(y,x) proportional to pi(x) K(x,y); rows with zero
/// output mass under pi K default to pi itself.
Kernel reverse_kernel(const Distribution& pi, const Kernel& K);

Kernel compose(const Kernel& K, const Kernel& L);
Kernel power(const Kernel& P, int m);

/// Time-t kernel e^{t(P - I)} by uniformization: sum_k e^{-t} t^k/k! P^k,
/// truncated once the accumulated Poisson mass reaches 1 - 1e-14, so the
/// entrywise truncation error is below 1e-12 for desk-scale t.
Kernel semigroup(const Kernel& P, double t, const Tolerances& tol = default_tolerances());

/// Nonnegative relative density f = d nu / d pi.
class DensityFunction {
 public:
  explicit DensityFunction(Vec values);
  const Vec& values() const { return v_; }
  double operator[](Index i) const { return v_[i]; }
  Index size() const { return v_.size(); }

 private:
  Vec v_;
};

DensityFunction density(const Distribution& nu, const Distribution& pi);

/// Reversible stationary pair (pi, P). The constructor checks stationarity
/// and detailed balance at the central tolerances.
class ReversiblePair {
 public:
  ReversiblePair(Distribution pi, Kernel P, const Tolerances& tol = default_tolerances());

  const Distribution& pi() const { return pi_; }
  const Kernel& P() const { return P_; }
  Index size() const { return pi_.size(); }

 private:
  Distribution pi_;
  Kernel P_;
};

/// Per-invariant residuals of a candidate pair; reporting only, never throws.
struct PairDiagnostics {
  double max_row_sum_residual = 0;
  double min_entry = 0;           // most negative kernel entry
  double pi_sum_residual = 0;
  double min_pi_entry = 0;
  double stationarity_residual = 0;    // max |pi P - pi|
  double detailed_balance_residual = 0;
  bool stationary(const Tolerances& tol = default_tolerances()) const {
    return stationarity_residual <= tol.stationarity;
  }
  bool reversible(const Tolerances& tol = default_tolerances()) const {
    return detailed_balance_residual <= tol.detailed_balance;
  }
};

PairDiagnostics validate(const Distribution& pi, const Kernel& P);
PairDiagnostics validate(const ReversiblePair& pair);

/// Exact-arithmetic twin of a chain, produced by gallery constructors whose
/// entries are rationals. Keeps KK* = P style checks exact.
struct RationalChain {
  RatVec pi;
  RatMat P;
};

}  // namespace entrocon
