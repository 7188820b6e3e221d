#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag1d/point_set.hpp"
#include "raag1d/rational.hpp"

namespace raag1d {

struct Breakpoint {
  Rational x, y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Orientation-preserving piecewise-linear homeomorphism of I or S^1 with
// rational breakpoints.
//
// On I the breakpoints run from (0,0) to (1,1). On S^1 they describe a lift
// F on [0,1], extended by F(x+1) = F(x)+1; the stored lift is normalised so
// that F(0) lies in [0,1). Redundant collinear breakpoints are removed, so
// two maps are equal iff their breakpoint lists are.
class PLMap {
 public:
  // Identity of I.
  PLMap();

  // Throws InvalidMap unless x runs strictly from 0 to 1, y is strictly
  // increasing, and the endpoints are (0,0),(1,1) on I or F(1) = F(0)+1 on
  // S^1 (any integer offset of the lift is accepted).
  PLMap(Domain domain, std::vector<Breakpoint> points);

  static PLMap identity(Domain d);
  static PLMap rotation(const Rational& angle);

  Domain domain() const { return domain_; }
  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool is_identity() const;

  // Image of x. On S^1, x is taken mod 1 and the result lies in [0,1).
  Rational operator()(const Rational& x) const;

  // Lift evaluation on R (S^1) or [0,1] (I), and its inverse.
  Rational lift(const Rational& x) const;
  Rational lift_inverse(const Rational& y) const;

  // Slopes of the consecutive linear pieces on [0,1].
  std::vector<Rational> slopes() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  Domain domain_;
  std::vector<Breakpoint> points_;

  struct Trusted {};
  PLMap(Domain domain, std::vector<Breakpoint> points, Trusted);
  void canonicalize();

  friend PLMap compose(const PLMap& f, const PLMap& g);
  friend PLMap invert(const PLMap& f);
  friend PLMap rescale_into(const PLMap& f, const Rational& lo, const Rational& hi);
  friend PLMap splice(const std::vector<PLMap>& blocks, const std::vector<Rational>& cuts);
};

// f after g. Throws DomainMismatch.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
// [f,g] = f g f^-1 g^-1.
PLMap commutator(const PLMap& f, const PLMap& g);
// h f h^-1.
PLMap conjugate(const PLMap& h, const PLMap& f);
PLMap power(const PLMap& f, std::int64_t n);

// Fixed-point set, as closed pieces and isolated points.
PointSet fixed_set(const PLMap& f);
// supp f = complement of Fix f.
PointSet support(const PLMap& f);
bool is_grounded(const PLMap& f);

// Exact image of a set under f.
PointSet image(const PLMap& f, const PointSet& s);

// Total variation of the slope step function: sum of |slope jumps| at the
// interior breakpoints on I; on S^1 the jump across 0 is included.
Rational derivative_variation(const PLMap& f);

// Interval maps only: conjugate f by the affine map [0,1] -> [lo,hi] and
// extend by the identity outside [lo,hi].
PLMap rescale_into(const PLMap& f, const Rational& lo, const Rational& hi);

// Interval maps only: block k acts on [cuts[k], cuts[k+1]] through
// rescale_into; cuts run from 0 to 1.
PLMap splice(const std::vector<PLMap>& blocks, const std::vector<Rational>& cuts);

std::string to_string(const PLMap& f);

}  // namespace raag1d
