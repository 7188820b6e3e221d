#pragma once

#include <vector>

#include "raag1d/pl_map.hpp"

namespace raag1d {

// Exact checkers for support containments satisfied by commutators. The
// first two hold for all homeomorphisms, so a `false` result is a bug
// signal; the C^1 containment is reported, not asserted, because PL maps
// are not C^1.

// closure(supp [f,g]) inside supp f U supp g U closure(supp f ∩ supp g).
struct CommutatorSupportReport {
  bool holds = false;
  PointSet lhs, rhs;
};
CommutatorSupportReport commutator_support_report(const PLMap& f, const PLMap& g);
bool check_commutator_support(const PLMap& f, const PLMap& g);

// phi = [c, b d b^-1]. Throws HypothesisViolated when supp c and supp d meet.
PLMap phi_map(const PLMap& b, const PLMap& c, const PLMap& d);

// supp phi inside supp b U cb(supp b ∩ supp d) U db^-1(supp b ∩ supp c).
struct PhiSupportReport {
  bool holds = false;
  PointSet lhs, rhs;
};
PhiSupportReport phi_support_report(const PLMap& b, const PLMap& c, const PLMap& d);
bool check_phi_support(const PLMap& b, const PLMap& c, const PLMap& d);

// closure(supp phi \ supp b) inside supp c U supp d.
struct C1ContainmentReport {
  bool holds = false;
  PointSet violating_set;
};
C1ContainmentReport check_c1_containment(const PLMap& b, const PLMap& c, const PLMap& d);

// A finite prefix of the crossing data (s_i, t_i, y_i) for a pair f, g.
struct JumpTriple {
  Rational s, t, y;
};

struct TwoJumpsReport {
  bool valid = true;
  // Per triple: 1 for configuration (i), 2 for (ii), 0 if neither.
  std::vector<int> configuration;
  std::vector<Rational> gaps;  // |g(y_i) - f(y_i)|
};

// Checks each triple against
//   (i)  f(y) <= s = g(s) < y < t = f(t) <= g(y), or
//   (ii) g(y) <= t = f(t) < y < s = g(s) <= f(y).
// On S^1 points are compared through their coordinates in [0,1).
TwoJumpsReport check_two_jumps_prefix(const PLMap& f, const PLMap& g, const std::vector<JumpTriple>& triples);

}  // namespace raag1d
