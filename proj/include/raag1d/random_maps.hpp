#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "raag1d/pl_map.hpp"

namespace raag1d {

// Seeded generator of random PL homeomorphisms with small-denominator
// breakpoints. Output depends only on the seed and the call sequence.
class MapSampler {
 public:
  explicit MapSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

  // A few random windows in (0,1), each carrying a random PL homeomorphism
  // (so fixed points inside a window are possible); identity elsewhere.
  PLMap interval_map();

  // Random homeomorphism on each window [lo, hi], identity elsewhere.
  PLMap supported_in(const std::vector<std::pair<Rational, Rational>>& windows);

  // Interval maps whose supports are disjoint.
  std::pair<PLMap, PLMap> disjoint_pair();

  // Random circle lift with a handful of breakpoints.
  PLMap circle_map();

  // h R_{p/q} h^-1 for a random PL circle map h and q <= max_q.
  PLMap conjugated_rotation(unsigned max_q);

 private:
  std::mt19937_64 rng_;

  std::vector<Rational> sorted_grid(std::size_t count, long den, const Rational& lo, const Rational& hi);
  std::vector<std::pair<Rational, Rational>> random_windows(std::size_t count);
};

}  // namespace raag1d
