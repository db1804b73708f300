#include "entrocon/factorization.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace entrocon {

Factorization make_factorization(const Distribution& pi, const Kernel& K,
                                 std::vector<std::string> output_labels,
                                 std::optional<RationalFactorization> exact) {
  Kernel Kstar = reverse_kernel(pi, K);
  Kernel product = compose(K, Kstar);
  return Factorization{pi, K, std::move(Kstar), std::move(product),
                       std::move(output_labels), std::move(exact)};
}

Factorization lazy_factorize(const ReversiblePair& pair,
                             const std::optional<RationalChain>& exact_chain) {
  const Mat& P = pair.P().matrix();
  const Index n = pair.size();
  for (Index x = 0; x < n; ++x)
    if (P(x, x) < 0.5)
      throw std::invalid_argument("lazy_factorize: P(x,x) < 1/2 at state " + std::to_string(x));

  // output alphabet: all singletons, then occupied pairs {x,y}
  std::vector<std::pair<Index, Index>> pairs;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (P(x, y) > 0 || P(y, x) > 0 ||
          (exact_chain && (exact_chain->P(static_cast<int>(x), static_cast<int>(y)) != 0)))
        pairs.emplace_back(x, y);
  const Index m = n + static_cast<Index>(pairs.size());

  Mat K = Mat::Zero(n, m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Index x = 0; x < n; ++x) {
    K(x, x) = 2 * P(x, x) - 1;
    labels.push_back("{" + std::to_string(x) + "}");
  }
  for (size_t e = 0; e < pairs.size(); ++e) {
    auto [x, y] = pairs[e];
    K(x, n + static_cast<Index>(e)) = 2 * P(x, y);
    K(y, n + static_cast<Index>(e)) = 2 * P(y, x);
    labels.push_back("{" + std::to_string(x) + "," + std::to_string(y) + "}");
  }

  std::optional<RationalFactorization> exact;
  if (exact_chain) {
    RationalFactorization rf;
    rf.pi = exact_chain->pi;
    rf.P = exact_chain->P;
    rf.K = RatMat(static_cast<int>(n), static_cast<int>(m));
    for (Index x = 0; x < n; ++x)
      rf.K(static_cast<int>(x), static_cast<int>(x)) = 2 * exact_chain->P(static_cast<int>(x), static_cast<int>(x)) - 1;
    for (size_t e = 0; e < pairs.size(); ++e) {
      auto [x, y] = pairs[e];
      rf.K(static_cast<int>(x), static_cast<int>(n) + static_cast<int>(e)) =
          2 * exact_chain->P(static_cast<int>(x), static_cast<int>(y));
      rf.K(static_cast<int>(y), static_cast<int>(n) + static_cast<int>(e)) =
          2 * exact_chain->P(static_cast<int>(y), static_cast<int>(x));
    }
    rf.Kstar = reverse_kernel_exact(rf.pi, rf.K);
    exact = std::move(rf);
  }
  return make_factorization(pair.pi(), Kernel(std::move(K)), std::move(labels), std::move(exact));
}

PsdCheck psd_check(const ReversiblePair& pair) {
  const Mat A = pair.pi().weights().asDiagonal() * pair.P().matrix();
  Eigen::SelfAdjointEigenSolver<Mat> es((A + A.transpose()) / 2.0);
  PsdCheck out;
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  out.psd = out.min_eigenvalue >= default_tolerances().psd_eigenvalue;
  return out;
}

Factorization mix_factorizations(const Factorization& f0, const Factorization& f1, double t) {
  if (t < 0 || t > 1) throw std::invalid_argument("mix_factorizations: t in [0,1]");
  if ((f0.pi.weights() - f1.pi.weights()).cwiseAbs().maxCoeff() > 0)
    throw std::invalid_argument("mix_factorizations: mismatched pi");
  const Index n = f0.pi.size();
  const Index m0 = f0.K.to_size(), m1 = f1.K.to_size();
  Mat K = Mat::Zero(n, m0 + m1);
  K.leftCols(m0) = (1 - t) * f0.K.matrix();
  K.rightCols(m1) = t * f1.K.matrix();
  std::vector<std::string> labels;
  for (const auto& s : f0.output_labels) labels.push_back("0:" + s);
  for (const auto& s : f1.output_labels) labels.push_back("1:" + s);

  std::optional<RationalFactorization> exact;
  if (f0.exact && f1.exact) {
    Rational tr(t);  // exact only when t is a dyadic/double-representable rational
    RationalFactorization rf;
    rf.pi = f0.exact->pi;
    rf.K = RatMat(static_cast<int>(n), static_cast<int>(m0 + m1));
    for (int x = 0; x < n; ++x) {
      for (int j = 0; j < m0; ++j) rf.K(x, j) = (1 - tr) * f0.exact->K(x, j);
      for (int j = 0; j < m1; ++j) rf.K(x, static_cast<int>(m0) + j) = tr * f1.exact->K(x, j);
    }
    rf.Kstar = reverse_kernel_exact(rf.pi, rf.K);
    rf.P = RatMat(static_cast<int>(n), static_cast<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        rf.P(x, y) = (1 - tr) * f0.exact->P(x, y) + tr * f1.exact->P(x, y);
    exact = std::move(rf);
  }
  return make_factorization(f0.pi, Kernel(std::move(K)), std::move(labels), std::move(exact));
}

SinkhornResult sinkhorn(const Mat& A, double tol, int max_iters) {
  if (A.rows() != A.cols()) throw std::invalid_argument("sinkhorn: square matrix required");
  if (A.minCoeff() <= 0) throw std::invalid_argument("sinkhorn: strictly positive entries required");
  const Index n = A.rows();
  SinkhornResult out;
  out.row_scale = Vec::Ones(n);
  out.col_scale = Vec::Ones(n);
  const bool symmetric = (A - A.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * A.cwiseAbs().maxCoeff();

  auto residual = [&](const Mat& S) {
    double r = 0;
    for (Index i = 0; i < n; ++i) {
      r = std::max(r, std::fabs(S.row(i).sum() - 1.0));
      r = std::max(r, std::fabs(S.col(i).sum() - 1.0));
    }
    return r;
  };

  Mat S = A;
  int it = 0;
  for (; it < max_iters; ++it) {
    if (residual(S) <= tol) break;
    for (Index i = 0; i < n; ++i) {
      const double rs = S.row(i).sum();
      out.row_scale[i] /= rs;
      S.row(i) /= rs;
    }
    for (Index j = 0; j < n; ++j) {
      const double cs = S.col(j).sum();
      out.col_scale[j] /= cs;
      S.col(j) /= cs;
    }
  }
  if (residual(S) > tol)
    throw std::runtime_error("sinkhorn: no convergence within iteration cap");

  if (symmetric) {
    // merge the two scalings; for symmetric A the limit satisfies D A D
    Vec d = (out.row_scale.cwiseProduct(out.col_scale)).cwiseSqrt();
    Mat Ssym = d.asDiagonal() * A * d.asDiagonal();
    // a few extra symmetric polish sweeps against round-off
    for (int k = 0; k < 64 && residual(Ssym) > tol; ++k) {
      for (Index i = 0; i < n; ++i) d[i] /= std::sqrt(Ssym.row(i).sum());
      Ssym = d.asDiagonal() * A * d.asDiagonal();
    }
    if (residual(Ssym) <= tol) {
      out.row_scale = d;
      out.col_scale = d;
      out.scaled = std::move(Ssym);
      out.symmetric_scaling = true;
      out.iterations = it;
      out.max_sum_residual = residual(out.scaled);
      return out;
    }
  }
  out.scaled = std::move(S);
  out.iterations = it;
  out.max_sum_residual = residual(out.scaled);
  return out;
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void subsets_of_size(int n, int l, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Factorization complete_graph_factor(int n, int l) {
  if (l < 2 || l > n) throw std::invalid_argument("complete_graph_factor: 2 <= l <= n");
  std::vector<std::vector<int>> lsets;
  subsets_of_size(n, l, lsets);
  const Index m = n + static_cast<Index>(lsets.size());

  const Rational diag = Rational(l - 2) / (2 * (l - 1));
  const Rational in_set = Rational(l) / (Rational(2) * (l - 1) * binom(n - 1, l - 1));

  RationalFactorization rf;
  rf.pi.assign(n, Rational(1) / n);
  rf.K = RatMat(n, static_cast<int>(m));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    rf.K(x, x) = diag;
    labels.push_back("{" + std::to_string(x) + "}");
  }
  for (size_t s = 0; s < lsets.size(); ++s) {
    for (int x : lsets[s]) rf.K(x, n + static_cast<int>(s)) = in_set;
    std::string lab = "{";
    for (size_t i = 0; i < lsets[s].size(); ++i)
      lab += (i ? "," : "") + std::to_string(lsets[s][i]);
    labels.push_back(lab + "}");
  }
  rf.Kstar = reverse_kernel_exact(rf.pi, rf.K);
  rf.P = rf.K * rf.Kstar;

  Mat K(n, m);
  for (int x = 0; x < n; ++x)
    for (Index j = 0; j < m; ++j) K(x, j) = to_double(rf.K(x, static_cast<int>(j)));
  return make_factorization(Distribution::uniform(n), Kernel(std::move(K)), std::move(labels),
                            std::move(rf));
}

Factorization block_dynamics_factor(const std::vector<Rational>& pi_table, int q, int n,
                                    const std::vector<Rational>& subset_weights) {
  const long long size = static_cast<long long>(std::pow(q, n) + 0.5);
  if (size > 4096) throw std::invalid_argument("block_dynamics_factor: q^n <= 4096");
  if (static_cast<long long>(pi_table.size()) != size)
    throw std::invalid_argument("block_dynamics_factor: pi table size != q^n");
  if (static_cast<int>(subset_weights.size()) != (1 << n))
    throw std::invalid_argument("block_dynamics_factor: need a weight per subset of [n]");
  Rational wsum = 0;
  for (const auto& w : subset_weights) {
    if (w < 0) throw std::invalid_argument("block_dynamics_factor: negative subset weight");
    wsum += w;
  }
  if (wsum != 1) throw std::invalid_argument("block_dynamics_factor: weights must sum to 1");
  Rational psum = 0;
  for (const auto& p : pi_table) {
    if (p < 0) throw std::invalid_argument("block_dynamics_factor: negative pi entry");
    psum += p;
  }
  if (psum != 1) throw std::invalid_argument("block_dynamics_factor: pi must sum to 1");
  for (const auto& p : pi_table)
    if (p == 0)
      throw std::invalid_argument("block_dynamics_factor: pi must have full support "
                                  "(restrict the table to its support first)");

  const int N = static_cast<int>(size);
  auto digit = [&](int sigma, int site) { return (sigma / static_cast<int>(std::pow(q, site) + 0.5)) % q; };
  auto agrees_off = [&](int a, int b, int mask) {
    for (int s = 0; s < n; ++s)
      if (!(mask & (1 << s)) && digit(a, s) != digit(b, s)) return false;
    return true;
  };

  std::vector<int> blocks;
  for (int a = 0; a < (1 << n); ++a)
    if (subset_weights[a] > 0) blocks.push_back(a);

  const int m = static_cast<int>(blocks.size()) * N;
  RationalFactorization rf;
  rf.pi = pi_table;
  rf.K = RatMat(N, m);
  std::vector<std::string> labels(m);

  // off-block configuration key: digits outside the mask, in site order
  auto off_key = [&](int sigma, int mask) {
    int key = 0;
    for (int s = n - 1; s >= 0; --s)
      if (!(mask & (1 << s))) key = key * q + digit(sigma, s);
    return key;
  };

  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const int mask = blocks[bi];
    std::map<int, Rational> slice;  // pi-mass of each off-block slice
    for (int eta = 0; eta < N; ++eta) slice[off_key(eta, mask)] += pi_table[eta];
    for (int sigma = 0; sigma < N; ++sigma) {
      const Rational& norm = slice[off_key(sigma, mask)];
      for (int eta = 0; eta < N; ++eta) {
        if (!agrees_off(sigma, eta, mask)) continue;
        rf.K(sigma, static_cast<int>(bi) * N + eta) = subset_weights[mask] * pi_table[eta] / norm;
      }
    }
    for (int eta = 0; eta < N; ++eta)
      labels[bi * N + eta] = "(A=" + std::to_string(mask) + ",cfg=" + std::to_string(eta) + ")";
  }
  rf.Kstar = reverse_kernel_exact(rf.pi, rf.K);
  rf.P = rf.K * rf.Kstar;

  Mat K(N, m);
  Vec pivec(N);
  for (int i = 0; i < N; ++i) pivec[i] = to_double(pi_table[i]);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < m; ++j) K(i, j) = to_double(rf.K(i, j));
  return make_factorization(Distribution(pivec), Kernel(std::move(K)), std::move(labels),
                            std::move(rf));
}

Factorization glauber_factor(const std::vector<Rational>& pi_table, int q, int n) {
  std::vector<Rational> weights(1 << n, Rational(0));
  for (int s = 0; s < n; ++s) weights[1 << s] = Rational(1) / n;
  return block_dynamics_factor(pi_table, q, n, weights);
}

}  // namespace entrocon
