#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace entrocon {

/// Deterministic, platform-pinned random stream. std:: distributions are
/// implementation-defined, so every draw here is built from raw 64-bit
/// output; results are reproducible across compilers and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // splitmix64 warm-up so nearby seeds decorrelate
    for (int i = 0; i < 4; ++i) next();
  }

  /// Independent substream: hash the (seed, stream) pair.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0,1]; safe as a log argument.
  double uniform_pos() { return 1.0 - uniform(); }

  double exponential() { return -std::log(uniform_pos()); }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Flat Dirichlet draw: normalized exponentials.
  std::vector<double> dirichlet(int n) {
    std::vector<double> v(n);
    double s = 0;
    for (auto& x : v) {
      x = exponential();
      s += x;
    }
    for (auto& x : v) x /= s;
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace entrocon
