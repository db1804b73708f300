#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrocon/chain.hpp"
#include "entrocon/factorization.hpp"
#include "entrocon/spectral.hpp"

namespace entrocon {

enum class Family {
  one_step,
  one_to_k,
  bernoulli_laplace,
  three_state,
  birth_death,
  complete_lazy,
  complete_nonlazy,
  complete_bipartite,
  random_transposition,
  lazy_rw_graph,
  random_regular,
};

const char* name_of(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct ChainSpec {
  Family family = Family::one_step;
  int n = 0;
  int k = 0;
  int l = 0;      // subset size for the complete-graph factorization
  int m = 1;      // birth-death interior length
  int d = 0;      // regular-graph degree
  double M = 0;   // mass parameter of the three-state / birth-death chains
  double pi_min = 0;  // smallest atom of the one-step chain (0 = uniform)
  std::uint64_t seed = 0;
};

/// A closed-form or literature value attached to a gallery chain.
struct KnownConstant {
  enum class Kind { exact, upper_bound, lower_bound, order_only, conjectured };
  ConstantName name = ConstantName::lambda;
  Kind kind = Kind::exact;
  double value = 0;  // meaningless for order_only
  std::string provenance;
};

struct GalleryChain {
  ChainSpec spec;
  ReversiblePair pair;
  /// Half-step factorization P = K K* when the family carries one.
  std::optional<Factorization> fact;
  std::vector<KnownConstant> constants;
  std::optional<RationalChain> exact;
  std::vector<std::string> state_names;
};

/// Validates the spec (parameter ranges, size guards) and throws
/// std::invalid_argument on violations.
GalleryChain make_chain(const ChainSpec& spec);

/// Formula-only lookup of the constants attached by make_chain.
std::vector<KnownConstant> known_constants(const ChainSpec& spec);

/// Lazy random walk on an arbitrary d-regular graph together with its edge
/// factorization K(x,e) = (1/d) 1{x in e}; the building block behind several
/// families. Adjacency is given as a sorted edge list.
GalleryChain lazy_walk_on_graph(const std::vector<std::pair<int, int>>& edges, int n_vertices,
                                ChainSpec spec, std::vector<std::string> names);

}  // namespace entrocon
