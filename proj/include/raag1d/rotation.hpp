#pragma once

#include <optional>
#include <string>

#include "raag1d/pl_map.hpp"

namespace raag1d {

inline constexpr unsigned kDefaultQMax = 64;

// Either an exact rotation number in [0,1) or, when no periodic orbit of
// period <= q_max exists, bounds [lo, hi] on the rotation number of the
// normalised lift (F(0) in [0,1)).
struct RotationNumber {
  std::optional<Rational> exact;
  Rational lo, hi;
  unsigned period_searched = 0;

  bool is_exact() const { return exact.has_value(); }
};

// Decides for q = 1..q_max whether F^q(x) = x + p is solvable; the first hit
// gives p/q. Throws Error on interval maps or q_max == 0.
RotationNumber rotation_number(const PLMap& f, unsigned q_max = kDefaultQMax);

std::string to_string(const RotationNumber& r);

}  // namespace raag1d
