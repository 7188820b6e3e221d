#include "raag1d/pl_map.hpp"

#include <algorithm>

#include "raag1d/errors.hpp"

namespace raag1d {

namespace {

// Linear interpolation on the table, for u inside [front.x, back.x].
Rational interpolate(const std::vector<Breakpoint>& pts, const Rational& u) {
  auto it = std::upper_bound(pts.begin(), pts.end(), u,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  if (it == pts.end()) return pts.back().y;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.y + (u - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
}

Rational interpolate_inverse(const std::vector<Breakpoint>& pts, const Rational& v) {
  auto it = std::upper_bound(pts.begin(), pts.end(), v,
                             [](const Rational& w, const Breakpoint& p) { return w < p.y; });
  if (it == pts.end()) return pts.back().x;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.x + (v - lo.y) * (hi.x - lo.x) / (hi.y - lo.y);
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

PLMap::PLMap() : PLMap(Domain::Interval, {{0, 0}, {1, 1}}, Trusted{}) {}

PLMap::PLMap(Domain domain, std::vector<Breakpoint> points, Trusted) : domain_(domain), points_(std::move(points)) {
  canonicalize();
}

PLMap::PLMap(Domain domain, std::vector<Breakpoint> points) : domain_(domain), points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidMap("a PL map needs at least two breakpoints");
  if (points_.front().x != 0 || points_.back().x != 1) throw InvalidMap("breakpoints must span x = 0 .. 1");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].x <= points_[i - 1].x) throw InvalidMap("breakpoint x values must increase strictly");
    if (points_[i].y <= points_[i - 1].y) throw InvalidMap("map must be strictly increasing");
  }
  if (domain_ == Domain::Interval) {
    if (points_.front().y != 0 || points_.back().y != 1) throw InvalidMap("interval map must fix 0 and 1");
  } else if (points_.back().y != points_.front().y + 1) {
    throw InvalidMap("circle lift must satisfy F(1) = F(0) + 1");
  }
  canonicalize();
}

void PLMap::canonicalize() {
  // Compact in place. A kept point is dropped when the segment into it has
  // the same slope as the segment out of it; merging keeps that slope.
  std::size_t kept = 1;
  Rational last_slope;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const Breakpoint& prev = points_[kept - 1];
    Rational slope = (points_[i].y - prev.y) / (points_[i].x - prev.x);
    if (kept >= 2 && slope == last_slope) --kept;
    if (kept != i) points_[kept] = std::move(points_[i]);
    ++kept;
    last_slope = std::move(slope);
  }
  points_.resize(kept);
  if (domain_ == Domain::Circle) {
    Rational shift = floor(points_.front().y);
    if (shift != 0)
      for (auto& p : points_) p.y -= shift;
  }
}

PLMap PLMap::identity(Domain d) { return PLMap(d, {{0, 0}, {1, 1}}, Trusted{}); }

PLMap PLMap::rotation(const Rational& angle) {
  return PLMap(Domain::Circle, {{0, angle}, {1, angle + 1}}, Trusted{});
}

bool PLMap::is_identity() const {
  return points_.size() == 2 && points_[0].y == 0 && points_[1].y == 1;
}

Rational PLMap::lift(const Rational& x) const {
  if (domain_ == Domain::Interval) {
    if (x < 0 || x > 1) throw Error("point " + to_string(x) + " is outside [0,1]");
    return interpolate(points_, x);
  }
  Rational n = floor(x);
  return interpolate(points_, x - n) + n;
}

Rational PLMap::lift_inverse(const Rational& y) const {
  if (domain_ == Domain::Interval) {
    if (y < 0 || y > 1) throw Error("point " + to_string(y) + " is outside [0,1]");
    return interpolate_inverse(points_, y);
  }
  Rational n = floor(y - points_.front().y);
  return interpolate_inverse(points_, y - n) + n;
}

Rational PLMap::operator()(const Rational& x) const {
  if (domain_ == Domain::Interval) return lift(x);
  return frac(lift(x));
}

std::vector<Rational> PLMap::slopes() const {
  std::vector<Rational> s;
  s.reserve(points_.size() - 1);
  for (std::size_t i = 1; i < points_.size(); ++i)
    s.push_back((points_[i].y - points_[i - 1].y) / (points_[i].x - points_[i - 1].x));
  return s;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.domain_ != g.domain_) throw DomainMismatch();
  // Breakpoints of f's lift over the range of g's lift: [0,1] on I, and
  // [0,2] on S^1 since g(0) lies in [0,1).
  std::vector<Breakpoint> extended;
  if (f.domain_ == Domain::Circle) {
    extended = f.points_;
    for (std::size_t i = 1; i < f.points_.size(); ++i) extended.push_back({f.points_[i].x + 1, f.points_[i].y + 1});
  }
  const std::vector<Breakpoint>& fb = f.domain_ == Domain::Circle ? extended : f.points_;

  // One sweep along g. The result's breakpoints are g's breakpoints, where
  // f is interpolated, and g-preimages of f's breakpoints, where g^-1 is.
  std::vector<Breakpoint> pts;
  pts.reserve(g.points_.size() + fb.size());
  std::size_t j = 0;
  auto f_at = [&](const Rational& u) {
    while (fb[j].x < u) ++j;
    if (fb[j].x == u) return fb[j].y;
    const Breakpoint& a = fb[j - 1];
    const Breakpoint& b = fb[j];
    return a.y + (u - a.x) * (b.y - a.y) / (b.x - a.x);
  };
  const auto& gp = g.points_;
  pts.push_back({gp[0].x, f_at(gp[0].y)});
  for (std::size_t i = 1; i < gp.size(); ++i) {
    const Rational inv_slope = (gp[i].x - gp[i - 1].x) / (gp[i].y - gp[i - 1].y);
    while (fb[j].x < gp[i].y) {
      if (fb[j].x > gp[i - 1].y) pts.push_back({gp[i - 1].x + (fb[j].x - gp[i - 1].y) * inv_slope, fb[j].y});
      ++j;
    }
    pts.push_back({gp[i].x, f_at(gp[i].y)});
  }
  return PLMap(f.domain_, std::move(pts), PLMap::Trusted{});
}

PLMap invert(const PLMap& f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.points_.size() + 1);
  if (f.domain_ == Domain::Interval) {
    for (const auto& p : f.points_) pts.push_back({p.y, p.x});
    return PLMap(f.domain_, std::move(pts), PLMap::Trusted{});
  }
  std::vector<Rational> xs{0, 1};
  for (const auto& p : f.points_) xs.push_back(frac(p.y));
  sort_unique(xs);
  for (auto& x : xs) {
    Rational y = f.lift_inverse(x);
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap(f.domain_, std::move(pts), PLMap::Trusted{});
}

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(f, g), invert(compose(g, f)));
}

PLMap conjugate(const PLMap& h, const PLMap& f) { return compose(compose(h, f), invert(h)); }

PLMap power(const PLMap& f, std::int64_t n) {
  PLMap base = n < 0 ? invert(f) : f;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  PLMap result = PLMap::identity(f.domain());
  while (e) {
    if (e & 1) result = compose(base, result);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

PointSet fixed_set(const PLMap& f) {
  const auto& pts = f.breakpoints();
  std::vector<Rational> disp;
  disp.reserve(pts.size());
  for (const auto& p : pts) disp.push_back(p.y - p.x);
  Rational kmin = 0, kmax = 0;
  if (f.domain() == Domain::Circle) {
    auto [mn, mx] = std::minmax_element(disp.begin(), disp.end());
    kmin = floor(*mn);
    kmax = floor(*mx);
  }
  std::vector<Piece> out;
  for (Rational kk = kmin; kk <= kmax; kk += 1) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Rational d0 = disp[i] - kk;
      const Rational d1 = disp[i + 1] - kk;
      const Rational& x0 = pts[i].x;
      const Rational& x1 = pts[i + 1].x;
      if (d0 == 0 && d1 == 0) {
        out.push_back(Piece{x0, x1, true, true});
      } else if (d0 == 0) {
        out.push_back(Piece{x0, x0, true, true});
      } else if (d1 == 0) {
        out.push_back(Piece{x1, x1, true, true});
      } else if ((d0 < 0) != (d1 < 0)) {
        Rational r = x0 + d0 * (x1 - x0) / (d0 - d1);
        out.push_back(Piece{r, r, true, true});
      }
    }
  }
  return PointSet::from_pieces(f.domain(), std::move(out));
}

PointSet support(const PLMap& f) { return fixed_set(f).complement(); }

bool is_grounded(const PLMap& f) { return !fixed_set(f).empty(); }

PointSet image(const PLMap& f, const PointSet& s) {
  if (f.domain() != s.domain()) throw DomainMismatch();
  std::vector<Piece> out;
  for (const auto& p : s.pieces()) {
    Piece q{f.lift(p.lo), f.lift(p.hi), p.lo_closed, p.hi_closed};
    if (f.domain() == Domain::Circle) {
      // The lift carries [0,1) into [F(0), F(0)+1) inside [0,2); fold the
      // part beyond 1 back by one turn. Clipping drops what falls outside.
      out.push_back(Piece{q.lo - 1, q.hi - 1, q.lo_closed, q.hi_closed});
    }
    out.push_back(std::move(q));
  }
  return PointSet::from_pieces(f.domain(), std::move(out));
}

Rational derivative_variation(const PLMap& f) {
  auto s = f.slopes();
  Rational total = 0;
  for (std::size_t i = 1; i < s.size(); ++i) total += abs(s[i] - s[i - 1]);
  if (f.domain() == Domain::Circle) total += abs(s.front() - s.back());
  return total;
}

PLMap rescale_into(const PLMap& f, const Rational& lo, const Rational& hi) {
  if (f.domain_ != Domain::Interval) throw Error("rescale_into needs an interval map");
  if (!(0 <= lo && lo < hi && hi <= 1)) throw Error("rescale_into needs 0 <= lo < hi <= 1");
  const Rational w = hi - lo;
  std::vector<Breakpoint> pts;
  pts.reserve(f.points_.size() + 2);
  if (lo > 0) pts.push_back({0, 0});
  for (const auto& p : f.points_) pts.push_back({lo + p.x * w, lo + p.y * w});
  if (hi < 1) pts.push_back({1, 1});
  return PLMap(Domain::Interval, std::move(pts), PLMap::Trusted{});
}

PLMap splice(const std::vector<PLMap>& blocks, const std::vector<Rational>& cuts) {
  if (cuts.size() != blocks.size() + 1 || cuts.front() != 0 || cuts.back() != 1)
    throw Error("splice needs cuts 0 = c_0 < ... < c_k = 1, one block per gap");
  std::vector<Breakpoint> pts;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].domain_ != Domain::Interval) throw Error("splice needs interval maps");
    if (!(cuts[k] < cuts[k + 1])) throw Error("splice cuts must increase");
    const Rational w = cuts[k + 1] - cuts[k];
    for (std::size_t i = (k == 0 ? 0 : 1); i < blocks[k].points_.size(); ++i) {
      const auto& p = blocks[k].points_[i];
      pts.push_back({cuts[k] + p.x * w, cuts[k] + p.y * w});
    }
  }
  return PLMap(Domain::Interval, std::move(pts), PLMap::Trusted{});
}

std::string to_string(const PLMap& f) {
  std::string out = to_string(f.domain()) + "[";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    const auto& p = f.breakpoints()[i];
    if (i) out += " ";
    out += "(" + to_string(p.x) + "," + to_string(p.y) + ")";
  }
  return out + "]";
}

}  // namespace raag1d
