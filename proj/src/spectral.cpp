#include "entrocon/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace entrocon {

const char* name_of(ConstantName c) {
  switch (c) {
    case ConstantName::rho: return "rho";
    case ConstantName::rho0: return "rho0";
    case ConstantName::alpha: return "alpha";
    case ConstantName::delta: return "delta";
    case ConstantName::lambda: return "lambda";
    case ConstantName::eta_tv: return "eta_tv";
    case ConstantName::eta_chi2: return "eta_chi2";
    case ConstantName::eta_kl: return "eta_kl";
  }
  return "?";
}

const char* name_of(BoundKind k) {
  switch (k) {
    case BoundKind::closed_form: return "closed_form";
    case BoundKind::eigen_exact: return "eigen_exact";
    case BoundKind::optimizer_upper: return "optimizer_upper";
    case BoundKind::certified_lower: return "certified_lower";
    case BoundKind::oracle_grid: return "oracle_grid";
  }
  return "?";
}

namespace {

std::vector<int> components_of(const Mat& P, const std::vector<Index>& states) {
  // union-find over the positive entries restricted to `states`
  std::vector<int> parent(states.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = i + 1; j < states.size(); ++j)
      if (P(states[i], states[j]) > 0 || P(states[j], states[i]) > 0)
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<int> comp(states.size());
  for (size_t i = 0; i < states.size(); ++i) comp[i] = find(static_cast<int>(i));
  return comp;
}

}  // namespace

PoincareResult poincare(const ReversiblePair& pair) {
  const std::vector<Index> supp = pair.pi().support();
  const Index n = static_cast<Index>(supp.size());
  PoincareResult out;
  out.estimate.name = ConstantName::lambda;
  out.estimate.kind = BoundKind::eigen_exact;
  out.estimate.provenance = "second eigenvalue of the symmetrized kernel";
  if (n <= 1) {
    out.estimate.value = 0;
    out.irreducible = true;  // single point; nothing to mix
    return out;
  }

  const Mat& P = pair.P().matrix();
  const Vec& pi = pair.pi().weights();
  Mat S(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      S(a, b) = std::sqrt(pi[supp[a]] / pi[supp[b]]) * P(supp[a], supp[b]);
  Eigen::SelfAdjointEigenSolver<Mat> es((S + S.transpose()) / 2.0);
  if (es.info() != Eigen::Success) throw std::runtime_error("poincare: eigensolver failed");
  const Vec ev = es.eigenvalues();  // ascending

  const Tolerances& tol = default_tolerances();
  if (ev[n - 2] >= 1.0 - tol.reducibility) {
    out.irreducible = false;
    out.estimate.value = 0;
    out.component = components_of(P, supp);
    out.estimate.provenance = "reducible chain: spectral gap 0";
    return out;
  }
  out.estimate.value = 1.0 - ev[n - 2];
  // witness eigenfunction f = D^{-1/2} v, mapped back to the full space
  Vec f = Vec::Zero(pair.size());
  const Vec v = es.eigenvectors().col(n - 2);
  for (Index a = 0; a < n; ++a) f[supp[a]] = v[a] / std::sqrt(pi[supp[a]]);
  out.estimate.witness = std::move(f);
  return out;
}

ConstantEstimate eta_chi2(const Distribution& pi, const Kernel& K) {
  const Kernel KKstar = compose(K, reverse_kernel(pi, K));
  PoincareResult pr = poincare(ReversiblePair(pi, KKstar));
  ConstantEstimate e;
  e.name = ConstantName::eta_chi2;
  e.kind = BoundKind::eigen_exact;
  e.value = std::clamp(1.0 - pr.estimate.value, 0.0, 1.0);
  e.provenance = "spectral gap of K K* under pi";
  if (pr.estimate.witness) e.witness = pr.estimate.witness;
  return e;
}

ConstantEstimate eta_tv(const Distribution& /*pi*/, const Kernel& K) {
  const Mat& m = K.matrix();
  double best = 0;
  Index bx = 0, by = 0;
  for (Index x = 0; x < m.rows(); ++x)
    for (Index y = x + 1; y < m.rows(); ++y) {
      const double d = 0.5 * (m.row(x) - m.row(y)).lpNorm<1>();
      if (d > best) {
        best = d;
        bx = x;
        by = y;
      }
    }
  ConstantEstimate e;
  e.name = ConstantName::eta_tv;
  e.kind = BoundKind::closed_form;
  e.value = std::min(best, 1.0);
  e.provenance = "worst row pair (" + std::to_string(bx) + "," + std::to_string(by) + ")";
  return e;
}

}  // namespace entrocon
