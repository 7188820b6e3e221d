#include "raag1d/rotation.hpp"

#include <algorithm>

#include "raag1d/errors.hpp"

namespace raag1d {

RotationNumber rotation_number(const PLMap& f, unsigned q_max) {
  if (f.domain() != Domain::Circle) throw Error("rotation number needs a circle map");
  if (q_max == 0) throw Error("q_max must be at least 1");

  // iterate holds the lift F^q; its breakpoints carry the extrema of the
  // periodic displacement F^q(x) - x, which spans less than one unit, so at
  // most one integer p can be hit.
  PLMap iterate = f;
  Rational lift_at_zero = f.lift(0);
  for (unsigned q = 1; q <= q_max; ++q) {
    if (q > 1) {
      iterate = compose(f, iterate);
      lift_at_zero = f.lift(lift_at_zero);
    }
    const auto& pts = iterate.breakpoints();
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end(), [](const Breakpoint& a, const Breakpoint& b) {
      return a.y - a.x < b.y - b.x;
    });
    // The stored iterate is renormalised, so shift it back onto the true
    // q-th power of the normalised lift before reading off p.
    const Rational turns = floor(lift_at_zero) - floor(pts.front().y);
    const Rational lo = mn->y - mn->x + turns;
    const Rational hi = mx->y - mx->x + turns;
    const Rational p = floor(hi);
    if (p >= lo) {
      const Rational value = p / q;
      RotationNumber r;
      r.exact = frac(value);
      r.lo = r.hi = value;
      r.period_searched = q;
      return r;
    }
  }
  RotationNumber r;
  r.lo = (lift_at_zero - 1) / q_max;
  r.hi = (lift_at_zero + 1) / q_max;
  r.period_searched = q_max;
  return r;
}

std::string to_string(const RotationNumber& r) {
  if (r.exact) return to_string(*r.exact);
  return "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

}  // namespace raag1d
