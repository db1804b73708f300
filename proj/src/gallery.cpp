#include "entrocon/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "entrocon/rng.hpp"
#include "entrocon/scalar_functions.hpp"

namespace entrocon {

const char* name_of(Family f) {
  switch (f) {
    case Family::one_step: return "one_step";
    case Family::one_to_k: return "one_to_k";
    case Family::bernoulli_laplace: return "bernoulli_laplace";
    case Family::three_state: return "three_state";
    case Family::birth_death: return "birth_death";
    case Family::complete_lazy: return "complete_lazy";
    case Family::complete_nonlazy: return "complete_nonlazy";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::random_transposition: return "random_transposition";
    case Family::lazy_rw_graph: return "lazy_rw_graph";
    case Family::random_regular: return "random_regular";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::one_step, Family::one_to_k, Family::bernoulli_laplace,
                   Family::three_state, Family::birth_death, Family::complete_lazy,
                   Family::complete_nonlazy, Family::complete_bipartite,
                   Family::random_transposition, Family::lazy_rw_graph, Family::random_regular})
    if (s == name_of(f)) return f;
  return std::nullopt;
}

namespace {

RationalChain rational_pair_from(const RatVec& pi, const RatMat& P) { return {pi, P}; }

ReversiblePair pair_from_rational(const RationalChain& rc) {
  const int n = static_cast<int>(rc.pi.size());
  Vec pi(n);
  Mat P(n, n);
  for (int i = 0; i < n; ++i) {
    pi[i] = to_double(rc.pi[i]);
    for (int j = 0; j < n; ++j) P(i, j) = to_double(rc.P(i, j));
  }
  return ReversiblePair(Distribution(pi), Kernel(P));
}

/// Doubles are binary rationals, so gallery parameters convert exactly.
Rational rat(double x) { return Rational(x); }

}  // namespace

GalleryChain lazy_walk_on_graph(const std::vector<std::pair<int, int>>& edges, int n_vertices,
                                ChainSpec spec, std::vector<std::string> names) {
  std::vector<int> degree(n_vertices, 0);
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= n_vertices || b >= n_vertices)
      throw std::invalid_argument("lazy_walk_on_graph: bad edge");
    ++degree[a];
    ++degree[b];
  }
  const int d = degree.empty() ? 0 : degree[0];
  for (int v : degree)
    if (v != d || d == 0) throw std::invalid_argument("lazy_walk_on_graph: graph must be d-regular");

  const int n = n_vertices;
  const int m = static_cast<int>(edges.size());
  RatVec pi(n, Rational(1) / n);
  RatMat P(n, n);
  RatMat K(n, m);
  const Rational half(1, 2), step = Rational(1) / (2 * d), inK = Rational(1) / d;
  for (int i = 0; i < n; ++i) P(i, i) = half;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = edges[e];
    P(a, b) += step;
    P(b, a) += step;
    K(a, e) = inK;
    K(b, e) = inK;
  }

  RationalFactorization rf;
  rf.pi = pi;
  rf.K = K;
  rf.Kstar = reverse_kernel_exact(pi, K);
  rf.P = P;

  RationalChain rc = rational_pair_from(pi, P);
  ReversiblePair pair = pair_from_rational(rc);

  Mat Kd(n, m);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < m; ++e) Kd(i, e) = to_double(K(i, e));
  std::vector<std::string> labels(m);
  for (int e = 0; e < m; ++e)
    labels[e] = "{" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) + "}";

  Factorization fact = make_factorization(pair.pi(), Kernel(std::move(Kd)), std::move(labels),
                                          std::move(rf));
  return GalleryChain{spec, std::move(pair), std::move(fact), known_constants(spec),
                      std::move(rc), std::move(names)};
}

namespace {

GalleryChain build_one_step(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("one_step: n >= 2");
  RatVec pi(n);
  if (spec.pi_min > 0) {
    if (spec.pi_min >= 1.0 / n)
      throw std::invalid_argument("one_step: pi_min must be < 1/n to be the smallest atom");
    pi[0] = rat(spec.pi_min);
    for (int i = 1; i < n; ++i) pi[i] = (1 - rat(spec.pi_min)) / (n - 1);
  } else {
    for (int i = 0; i < n; ++i) pi[i] = Rational(1) / n;
  }
  RatMat P(n, n), K(n, 1);
  for (int i = 0; i < n; ++i) {
    K(i, 0) = 1;
    for (int j = 0; j < n; ++j) P(i, j) = pi[j];
  }
  RationalFactorization rf{pi, K, reverse_kernel_exact(pi, K), P};
  RationalChain rc{pi, P};
  ReversiblePair pair = pair_from_rational(rc);
  Mat Kd = Mat::Ones(n, 1);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return GalleryChain{spec, pair,
                      make_factorization(pair.pi(), Kernel(std::move(Kd)), {"*"}, std::move(rf)),
                      known_constants(spec), std::move(rc), std::move(names)};
}

GalleryChain build_one_to_k(const ChainSpec& spec) {
  const int n = spec.n, k = spec.k;
  if (n < 2 || k < 1) throw std::invalid_argument("one_to_k: need n >= 2, k >= 1");
  double ycount = std::pow(static_cast<double>(n), k);
  if (static_cast<double>(k) * ycount > 1e6)
    throw std::invalid_argument("one_to_k: size guard k*n^k <= 1e6 violated");
  const long long m = static_cast<long long>(ycount + 0.5);

  RatVec pi(n, Rational(1) / n);
  const Rational base = Rational(1) / (Rational(k) * static_cast<long long>(std::pow(n, k - 1) + 0.5));
  RatMat K(n, static_cast<int>(m));
  std::vector<std::string> labels(m);
  for (long long y = 0; y < m; ++y) {
    long long t = y;
    std::string lab;
    for (int j = 0; j < k; ++j) {
      const int digit = static_cast<int>(t % n);
      t /= n;
      K(digit, static_cast<int>(y)) += base;
      lab += (j ? "," : "") + std::to_string(digit);
    }
    labels[y] = "(" + lab + ")";
  }
  RationalFactorization rf;
  rf.pi = pi;
  rf.K = K;
  rf.Kstar = reverse_kernel_exact(pi, K);
  rf.P = K * rf.Kstar;
  RationalChain rc{pi, rf.P};
  ReversiblePair pair = pair_from_rational(rc);
  Mat Kd(n, m);
  for (int i = 0; i < n; ++i)
    for (long long y = 0; y < m; ++y) Kd(i, y) = to_double(K(i, static_cast<int>(y)));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return GalleryChain{spec, pair,
                      make_factorization(pair.pi(), Kernel(std::move(Kd)), std::move(labels),
                                         std::move(rf)),
                      known_constants(spec), std::move(rc), std::move(names)};
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
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
  return out;
}

std::string set_name(const std::vector<int>& s) {
  std::string lab = "{";
  for (size_t i = 0; i < s.size(); ++i) lab += (i ? "," : "") + std::to_string(s[i]);
  return lab + "}";
}

GalleryChain build_bernoulli_laplace(const ChainSpec& spec) {
  const int n = spec.n, k = spec.k;
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("bernoulli_laplace: 1 <= k <= n-1");
  if (binomial(n, k) > 5000)
    throw std::invalid_argument("bernoulli_laplace: size guard C(n,k) <= 5000 violated");
  auto sets = k_subsets(n, k);
  const int N = static_cast<int>(sets.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[sets[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      std::vector<int> inter;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) == k - 1) edges.emplace_back(i, j);
    }
  std::vector<std::string> names(N);
  for (int i = 0; i < N; ++i) names[i] = set_name(sets[i]);
  return lazy_walk_on_graph(edges, N, spec, std::move(names));
}

GalleryChain build_three_state(const ChainSpec& spec) {
  const double M = spec.M;
  if (!(M > 0)) throw std::invalid_argument("three_state: M > 0 required");
  const Rational rM = rat(M);
  RatVec pi = {rM / (rM + 2), Rational(1) / (rM + 2), Rational(1) / (rM + 2)};
  RatMat P(3, 3);
  const Rational a = Rational(1) / (4 * rM);
  P(0, 0) = 1 - a;
  P(0, 1) = a;
  P(1, 0) = Rational(1, 4);
  P(1, 1) = Rational(1, 2);
  P(1, 2) = Rational(1, 4);
  P(2, 1) = Rational(1, 4);
  P(2, 2) = Rational(3, 4);
  RationalChain rc{pi, P};
  ReversiblePair pair = pair_from_rational(rc);
  GalleryChain gc{spec, pair, std::nullopt, known_constants(spec), rc, {"1", "2", "3"}};
  gc.fact = lazy_factorize(pair, rc);
  return gc;
}

GalleryChain build_birth_death(const ChainSpec& spec) {
  const int m = spec.m;
  const double M = spec.M;
  if (m < 1) throw std::invalid_argument("birth_death: m >= 1 required");
  if (!(M > 0)) throw std::invalid_argument("birth_death: M > 0 required");
  const int n = m + 2;
  const Rational rM = rat(M);
  RatVec pi(n);
  const Rational denom = rM + m + 1;
  pi[0] = rM / denom;
  for (int x = 1; x < n; ++x) pi[x] = Rational(1) / denom;
  RatMat P(n, n);
  const Rational quarter(1, 4);
  for (int x = 0; x < n; ++x) {
    Rational off = 0;
    if (x == 0) {
      P(0, 1) = Rational(1) / (4 * rM);
      off = P(0, 1);
    } else {
      P(x, x - 1) = quarter;
      off = quarter;
      if (x + 1 < n) {
        P(x, x + 1) = quarter;
        off += quarter;
      }
    }
    P(x, x) = 1 - off;
  }
  RationalChain rc{pi, P};
  ReversiblePair pair = pair_from_rational(rc);
  GalleryChain gc{spec, pair, std::nullopt, known_constants(spec), rc, {}};
  gc.state_names.resize(n);
  for (int x = 0; x < n; ++x) gc.state_names[x] = std::to_string(x + 1);
  gc.fact = lazy_factorize(pair, rc);
  return gc;
}

GalleryChain build_complete_lazy(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 3) throw std::invalid_argument("complete_lazy: n >= 3");
  const int l = spec.l >= 2 ? spec.l : 2;
  Factorization f = complete_graph_factor(n, l);
  RationalChain rc{f.exact->pi, f.exact->P};
  ReversiblePair pair = pair_from_rational(rc);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return GalleryChain{spec, pair, std::move(f), known_constants(spec), std::move(rc),
                      std::move(names)};
}

GalleryChain build_complete_nonlazy(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 3) throw std::invalid_argument("complete_nonlazy: n >= 3");
  RatVec pi(n, Rational(1) / n);
  RatMat P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) P(i, j) = Rational(1) / (n - 1);
  RationalChain rc{pi, P};
  ReversiblePair pair = pair_from_rational(rc);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return GalleryChain{spec, pair, std::nullopt, known_constants(spec), std::move(rc),
                      std::move(names)};
}

GalleryChain build_complete_bipartite(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("complete_bipartite: n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, n + j);
  std::vector<std::string> names(2 * n);
  for (int i = 0; i < n; ++i) names[i] = "L" + std::to_string(i);
  for (int j = 0; j < n; ++j) names[n + j] = "R" + std::to_string(j);
  return lazy_walk_on_graph(edges, 2 * n, spec, std::move(names));
}

GalleryChain build_random_transposition(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 2 || n > 5)
    throw std::invalid_argument("random_transposition: 2 <= n <= 5 (factorial state space)");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int N = static_cast<int>(perms.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      int diff = 0;
      for (int s = 0; s < n; ++s) diff += perms[i][s] != perms[j][s];
      if (diff == 2) edges.emplace_back(i, j);
    }
  std::vector<std::string> names(N);
  for (int i = 0; i < N; ++i) {
    for (int s = 0; s < n; ++s) names[i] += std::to_string(perms[i][s] + 1);
  }
  return lazy_walk_on_graph(edges, N, spec, std::move(names));
}

GalleryChain build_cycle(const ChainSpec& spec) {
  const int n = spec.n;
  if (n < 3) throw std::invalid_argument("lazy_rw_graph: n >= 3 (cycle length)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return lazy_walk_on_graph(edges, n, spec, std::move(names));
}

GalleryChain build_random_regular(const ChainSpec& spec) {
  const int n = spec.n, d = spec.d;
  if (n < 4 || d < 3 || d >= n) throw std::invalid_argument("random_regular: need 4 <= n, 3 <= d < n");
  if (n * d % 2 != 0) throw std::invalid_argument("random_regular: n*d must be even");
  if (n > 3000) throw std::invalid_argument("random_regular: desk scale caps n around 3000");

  // configuration model with rejection; a fixed seed pins the graph, and the
  // acceptance filter keeps only instances with spectral gap >= 0.1
  for (std::uint64_t attempt = 0; attempt < 512; ++attempt) {
    Rng rng = Rng::stream(spec.seed, attempt);
    std::vector<int> stubs(n * d);
    for (int i = 0; i < n * d; ++i) stubs[i] = i / d;
    for (int i = n * d - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (int i = 0; i < n * d && ok; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) ok = false;
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) ok = false;
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    GalleryChain gc = lazy_walk_on_graph(edges, n, spec, std::move(names));
    PoincareResult pr = poincare(gc.pair);
    if (pr.irreducible && pr.estimate.value >= 0.1) return gc;
  }
  throw std::runtime_error("random_regular: no admissible graph found (gap filter)");
}

}  // namespace

GalleryChain make_chain(const ChainSpec& spec) {
  switch (spec.family) {
    case Family::one_step: return build_one_step(spec);
    case Family::one_to_k: return build_one_to_k(spec);
    case Family::bernoulli_laplace: return build_bernoulli_laplace(spec);
    case Family::three_state: return build_three_state(spec);
    case Family::birth_death: return build_birth_death(spec);
    case Family::complete_lazy: return build_complete_lazy(spec);
    case Family::complete_nonlazy: return build_complete_nonlazy(spec);
    case Family::complete_bipartite: return build_complete_bipartite(spec);
    case Family::random_transposition: return build_random_transposition(spec);
    case Family::lazy_rw_graph: return build_cycle(spec);
    case Family::random_regular: return build_random_regular(spec);
  }
  throw std::invalid_argument("make_chain: unknown family");
}

std::vector<KnownConstant> known_constants(const ChainSpec& spec) {
  std::vector<KnownConstant> out;
  using Kind = KnownConstant::Kind;
  auto add = [&](ConstantName c, Kind k, double v, std::string why) {
    out.push_back(KnownConstant{c, k, v, std::move(why)});
  };
  switch (spec.family) {
    case Family::one_step: {
      const int n = spec.n;
      const double pmin = spec.pi_min > 0 ? spec.pi_min : 1.0 / n;
      if (pmin < 0.5)
        add(ConstantName::rho, Kind::exact, (1 - 2 * pmin) / std::log(1 / pmin - 1),
            "two-point-profile log-Sobolev value of the one-step chain");
      add(ConstantName::alpha, Kind::exact, 1.0, "one-step kernel removes all information");
      add(ConstantName::delta, Kind::exact, 1.0, "Dobrushin coefficient is zero");
      add(ConstantName::lambda, Kind::exact, 1.0, "rank-one kernel has spectrum {1,0}");
      break;
    }
    case Family::one_to_k: {
      const int n = spec.n, k = spec.k;
      add(ConstantName::delta, Kind::lower_bound, 1.0 - 1.0 / k,
          "marginal-decomposition bound for the 1-to-k chain");
      // point mass ratio: D(nu K || pi K) = log n - sum_i C(k-1,i-1) (n-1)^{k-i}/n^{k-1} log(k/i)
      double corr = 0;
      for (int i = 1; i <= k; ++i)
        corr += static_cast<double>(binomial(k - 1, i - 1)) *
                std::pow(n - 1.0, k - i) / std::pow(static_cast<double>(n), k - 1) *
                std::log(static_cast<double>(k) / i);
      add(ConstantName::alpha, Kind::upper_bound, corr / std::log(static_cast<double>(n)),
          "point-mass evaluation of the half-step ratio");
      break;
    }
    case Family::bernoulli_laplace: {
      const int n = spec.n, k = spec.k;
      const double logC = std::log(static_cast<double>(binomial(n, k)));
      add(ConstantName::alpha, Kind::exact, std::log(2.0) / logC,
          "half-step contraction of the subset-swap walk (tight point-mass value)");
      add(ConstantName::delta, Kind::lower_bound, n / (2.0 * k * (n - k)),
          "coupling contraction bound");
      add(ConstantName::delta, Kind::upper_bound, std::log(2.0 * n * (n - k)) / (2 * logC),
          "point-mass evaluation of the full-step ratio");
      break;
    }
    case Family::three_state: {
      const double M = spec.M;
      add(ConstantName::delta, Kind::upper_bound, binary_entropy(0.25) / std::log(M + 2),
          "point mass at the far state");
      add(ConstantName::rho0, Kind::order_only, 0,
          "order log log M / log M; witnessed by f = (1/M, 1, log M)");
      break;
    }
    case Family::birth_death:
      break;  // bounds are evaluated, not closed-form
    case Family::complete_lazy: {
      const int n = spec.n;
      const int l = spec.l >= 2 ? spec.l : 2;
      add(ConstantName::rho, Kind::exact, (n - 2.0) / (2.0 * (n - 1) * std::log(n - 1.0)),
          "log-Sobolev constant of the lazy complete-graph walk");
      add(ConstantName::lambda, Kind::exact, n / (2.0 * (n - 1)),
          "spectrum of the lazy complete-graph walk");
      add(ConstantName::alpha, Kind::exact,
          l * std::log(static_cast<double>(l)) / (2.0 * (l - 1) * std::log(static_cast<double>(n))),
          "half-step contraction through l-subsets (point-mass extremizers)");
      break;
    }
    case Family::complete_nonlazy: {
      const int n = spec.n;
      add(ConstantName::eta_kl, Kind::exact,
          (std::log(static_cast<double>(n)) - std::log(n - 1.0)) / std::log(static_cast<double>(n)),
          "entropy contraction of the non-lazy complete-graph kernel");
      break;
    }
    case Family::complete_bipartite: {
      const int n = spec.n;
      add(ConstantName::eta_kl, n == 3 ? Kind::exact : Kind::conjectured,
          std::log(static_cast<double>(n)) / (2.0 * std::log(2.0 * n)),
          n == 3 ? "proven value; point-mass extremizers only"
                 : "conjectured from numerics; proven only for n = 3");
      add(ConstantName::lambda, Kind::exact, 0.5, "bipartite walk spectrum");
      break;
    }
    case Family::random_transposition: {
      const int n = spec.n;
      double logfact = 0;
      for (int i = 2; i <= n; ++i) logfact += std::log(static_cast<double>(i));
      add(ConstantName::alpha, Kind::exact, std::log(2.0) / logfact,
          "half-step contraction of the transposition walk (point-mass value)");
      add(ConstantName::rho0, Kind::order_only, 0, "order 1/n");
      break;
    }
    case Family::lazy_rw_graph:
      break;
    case Family::random_regular:
      add(ConstantName::rho0, Kind::order_only, 0, "order 1/log|V| for expanders");
      break;
  }
  return out;
}

}  // namespace entrocon
