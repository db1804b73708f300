#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrocon/chain.hpp"

namespace entrocon {

/// Exact-arithmetic side of a factorization, present when the constructor's
/// entries are rational.
struct RationalFactorization {
  RatVec pi;
  RatMat K;
  RatMat Kstar;
  RatMat P;  // target kernel
  bool product_exact() const { return K * Kstar == P; }
};

/// P = K K* factorization of a reversible pair. Kstar is always the reverse
/// channel of K under pi; `product` caches K Kstar for residual checks.
struct Factorization {
  Distribution pi;
  Kernel K;
  Kernel Kstar;
  Kernel product;
  std::vector<std::string> output_labels;
  std::optional<RationalFactorization> exact;

  double product_residual(const Kernel& target) const {
    return (product.matrix() - target.matrix()).cwiseAbs().maxCoeff();
  }
};

Factorization make_factorization(const Distribution& pi, const Kernel& K,
                                 std::vector<std::string> output_labels = {},
                                 std::optional<RationalFactorization> exact = std::nullopt);

/// Factorization of a lazy reversible chain through the alphabet of
/// singletons and occupied pairs: K(x,{x}) = 2P(x,x)-1, K(x,{x,y}) = 2P(x,y).
/// The reverse channel comes out uniform on each block.
Factorization lazy_factorize(const ReversiblePair& pair,
                             const std::optional<RationalChain>& exact_chain = std::nullopt);

/// Necessary condition for factorizability: Diag(pi) P is PSD.
struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0;
};
PsdCheck psd_check(const ReversiblePair& pair);

/// Factorizes (1-t) P0 + t P1 through the disjoint union of the two output
/// alphabets.
Factorization mix_factorizations(const Factorization& f0, const Factorization& f1, double t);

/// Sinkhorn scaling of a strictly positive square matrix to doubly
/// stochastic form. For symmetric input the two scalings are merged into a
/// single D with D A D doubly stochastic.
struct SinkhornResult {
  Mat scaled;
  Vec row_scale;
  Vec col_scale;
  int iterations = 0;
  bool symmetric_scaling = false;
  double max_sum_residual = 0;
};
SinkhornResult sinkhorn(const Mat& A, double tol = 1e-12, int max_iters = 100000);

/// The one-parameter family of factorizations of the lazy complete-graph
/// walk through singletons and l-subsets, with its closed-form half-step
/// contraction attached by the gallery.
Factorization complete_graph_factor(int n, int l);

/// Block dynamics on an explicit table pi over [q]^n with subset weights;
/// output alphabet is (positive-weight subsets) x configurations.
/// weights[a] indexes subsets by bitmask a in [0, 2^n).
Factorization block_dynamics_factor(const std::vector<Rational>& pi_table, int q, int n,
                                    const std::vector<Rational>& subset_weights);

/// Glauber special case: site weights 1/n on singletons.
Factorization glauber_factor(const std::vector<Rational>& pi_table, int q, int n);

}  // namespace entrocon
