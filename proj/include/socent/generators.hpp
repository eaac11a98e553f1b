#pragma once

#include <cstdint>

#include "socent/graph.hpp"

namespace socent {

/// splitmix64: the 64-bit mixer from Steele et al.'s SplittableRandom,
/// fully specified here so generated graphs reproduce across builds.
/// Uniform variates are derived without libm or implementation-defined
/// library distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by multiply-shift reduction.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Geometric count with P(k) = p^k (1-p): number of successes before the
  /// first failure, sampled by repeated comparison (no transcendentals).
  std::uint64_t geometric(double p) {
    std::uint64_t k = 0;
    while (uniform() < p) ++k;
    return k;
  }

 private:
  std::uint64_t state_;
};

/// Parameters of one synthetic graph.
///
/// ER: exactly er_edges distinct edges uniform over node pairs.
/// WS: ring lattice of dimension 1 with ws_neighbors neighbors per side;
///     each lattice edge is rewired with probability ws_rewire_p to a
///     uniform target, keeping the original edge when the target would be
///     a self-loop or duplicate, so the edge count is always n * nei.
/// FF: nodes arrive one by one; each new node picks ff_ambassadors
///     distinct existing nodes and burns outward from them: from every
///     burned node, geometric(ff_forward_prob) + geometric(ff_forward_prob
///     * ff_backward_factor) of its not-yet-burned neighbors are burned
///     (chosen uniformly without replacement); the new node links to every
///     burned node. The literature defines forest fire on digraphs; the
///     output here is symmetrized to match the undirected pipeline.
///
/// All weights are 1.0 and node labels are the decimal ids, so output is
/// byte-deterministic for a fixed seed.
struct GeneratorSpec {
  enum class Model { ER, WS, FF };

  Model model = Model::ER;
  std::uint64_t n = 0;
  std::uint64_t er_edges = 0;
  unsigned ws_neighbors = 4;
  double ws_rewire_p = 0.3;
  unsigned ff_ambassadors = 4;
  double ff_forward_prob = 0.3;
  double ff_backward_factor = 0.2;
  std::uint64_t seed = 0;
};

/// Generates the graph described by spec. Throws std::invalid_argument on
/// impossible parameters (e.g. ER edge count above n(n-1)/2, probabilities
/// outside [0,1]).
WeightedGraph generate(const GeneratorSpec& spec);

/// Name recorded in output metadata so runs are reproducible across
/// builds.
const char* generator_rng_name();

}  // namespace socent
