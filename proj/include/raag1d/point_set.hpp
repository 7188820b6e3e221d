#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag1d/rational.hpp"

namespace raag1d {

// I = [0,1] or S^1 = R/Z, the latter parametrised by [0,1).
enum class Domain { Interval, Circle };

std::string to_string(Domain d);

// Interval with independently open or closed ends; lo == hi only for a
// closed single point.
struct Piece {
  Rational lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(const Rational& x) const;
  friend bool operator==(const Piece&, const Piece&) = default;
};

// Connected component of an open subset, as reported to users. On the circle
// a component may wrap through 0 (then lo > hi) or be the whole circle.
struct OpenComponent {
  Rational lo, hi;
  bool wraps = false;
  bool whole = false;
  friend bool operator==(const OpenComponent&, const OpenComponent&) = default;
};

// Finite union of rational intervals inside I or S^1, kept as sorted,
// pairwise disjoint, non-touching pieces. All set algebra is exact.
class PointSet {
 public:
  explicit PointSet(Domain d = Domain::Interval) : domain_(d) {}

  static PointSet whole(Domain d);
  // Pieces outside the domain are clipped; circle pieces are not reduced
  // mod 1, so callers pass coordinates in [0,1).
  static PointSet from_pieces(Domain d, std::vector<Piece> pieces);
  // (a,b); on the circle a > b means the arc through 0.
  static PointSet open_interval(Domain d, const Rational& a, const Rational& b);
  static PointSet closed_interval(Domain d, const Rational& a, const Rational& b);
  static PointSet point(Domain d, const Rational& x);

  Domain domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(const Rational& x) const;

  PointSet closure() const;
  PointSet complement() const;

  // Connected components of an open set. Throws Error if the set is not open.
  std::vector<OpenComponent> open_components() const;
  bool is_open() const;

  // Infimum and supremum of a nonempty set, as coordinates in [0,1].
  Rational inf() const;
  Rational sup() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  Domain domain_;
  std::vector<Piece> pieces_;

  void normalize();
};

PointSet unite(const PointSet& a, const PointSet& b);
PointSet intersect(const PointSet& a, const PointSet& b);
PointSet subtract(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

std::string to_string(const PointSet& s);

}  // namespace raag1d
