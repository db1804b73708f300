#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrocon {

/// x log x with the continuity convention 0 log 0 = 0.
inline double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

/// Binary entropy, natural log. h(0) = h(1) = 0, max log 2 at 1/2.
inline double binary_entropy(double x) { return -xlogx(x) - xlogx(1.0 - x); }

/// Binary KL divergence d(x || y); +inf when the supports do not match.
inline double binary_kl(double x, double y) {
  double s = 0;
  if (x > 0) {
    if (y <= 0) return std::numeric_limits<double>::infinity();
    s += x * std::log(x / y);
  }
  if (x < 1) {
    if (y >= 1) return std::numeric_limits<double>::infinity();
    s += (1 - x) * std::log((1 - x) / (1 - y));
  }
  return s;
}

/// f_n(x) = D((x, (1-x)/(n-1), ..., (1-x)/(n-1)) || Unif[n])
///        = log n + x log x + (1-x) log((1-x)/(n-1)).
/// Zero at x = 1/n, equal to log n at x = 1, convex on [0,1].
inline double f_n(int n, double x) {
  if (n < 2) throw std::invalid_argument("f_n: n >= 2");
  return std::log(static_cast<double>(n)) + xlogx(x) +
         (x < 1 ? (1 - x) * std::log((1 - x) / (n - 1)) : 0.0);
}

/// g_n(u) = -(1-u) log(1-u) - u log(u/n), the (1-u)-parameterized form of f_n.
inline double g_n(int n, double u) {
  double s = 0;
  if (u < 1) s -= (1 - u) * std::log1p(-u);
  if (u > 0) s -= u * std::log(u / n);
  return s;
}

/// g(u) = (1+u) log(1+u) - u on [-1, inf). Nonnegative, vanishing quadratically
/// at 0; the series branch keeps full relative accuracy for tiny u, which the
/// ratio objectives need near constant densities.
inline double entropy_kernel(double u) {
  if (u <= -1.0) return 1.0;  // limit of (1+u)log(1+u) - u at u = -1
  double au = std::fabs(u);
  if (au < 1e-3) {
    // sum_{k>=2} (-1)^k u^k / (k(k-1))
    double u2 = u * u;
    return u2 * (1.0 / 2 + u * (-1.0 / 6 + u * (1.0 / 12 + u * (-1.0 / 20 + u / 30))));
  }
  return (1 + u) * std::log1p(u) - u;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Upper tail P[Pois(t) >= m], exact up to floating round-off.
inline double poisson_tail_geq(double t, int m) {
  if (t < 0) throw std::invalid_argument("poisson_tail_geq: t >= 0");
  if (m <= 0) return 1.0;
  if (t == 0) return 0.0;
  double w = std::exp(-t), cdf = 0;
  for (int k = 0; k < m; ++k) {
    cdf += w;
    w *= t / (k + 1);
  }
  return cdf < 1.0 ? 1.0 - cdf : 0.0;
}

}  // namespace entrocon
