#include "raag1d/point_set.hpp"

#include <algorithm>

#include "raag1d/errors.hpp"

namespace raag1d {

std::string to_string(Domain d) { return d == Domain::Interval ? "I" : "S1"; }

bool Piece::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

namespace {

Piece universe(Domain d) {
  return d == Domain::Interval ? Piece{0, 1, true, true} : Piece{0, 1, true, false};
}

Piece meet(const Piece& a, const Piece& b) {
  Piece r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace

void PointSet::normalize() {
  const Piece u = universe(domain_);
  std::vector<Piece> clipped;
  clipped.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    Piece c = meet(p, u);
    if (!c.empty()) clipped.push_back(std::move(c));
  }
  std::sort(clipped.begin(), clipped.end(), [](const Piece& a, const Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Piece> merged;
  for (auto& p : clipped) {
    if (!merged.empty()) {
      Piece& cur = merged.back();
      const bool touches = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (touches) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  pieces_ = std::move(merged);
}

PointSet PointSet::whole(Domain d) { return from_pieces(d, {universe(d)}); }

PointSet PointSet::from_pieces(Domain d, std::vector<Piece> pieces) {
  PointSet s(d);
  s.pieces_ = std::move(pieces);
  s.normalize();
  return s;
}

PointSet PointSet::open_interval(Domain d, const Rational& a, const Rational& b) {
  if (d == Domain::Circle && a > b)
    return from_pieces(d, {Piece{a, 1, false, false}, Piece{0, b, true, false}});
  return from_pieces(d, {Piece{a, b, false, false}});
}

PointSet PointSet::closed_interval(Domain d, const Rational& a, const Rational& b) {
  if (d == Domain::Circle && a > b)
    return from_pieces(d, {Piece{a, 1, true, false}, Piece{0, b, true, true}});
  return from_pieces(d, {Piece{a, b, true, true}});
}

PointSet PointSet::point(Domain d, const Rational& x) { return from_pieces(d, {Piece{x, x, true, true}}); }

bool PointSet::contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) { return p.contains(x); });
}

PointSet PointSet::closure() const {
  std::vector<Piece> out;
  bool reaches_one = false;
  for (Piece p : pieces_) {
    p.lo_closed = p.hi_closed = true;
    if (domain_ == Domain::Circle && p.hi == 1) {
      p.hi_closed = false;
      reaches_one = true;
    }
    out.push_back(std::move(p));
  }
  if (reaches_one) out.push_back(Piece{0, 0, true, true});
  return from_pieces(domain_, std::move(out));
}

PointSet PointSet::complement() const {
  const Piece u = universe(domain_);
  std::vector<Piece> gaps;
  Rational cursor = u.lo;
  bool cursor_closed = u.lo_closed;
  for (const auto& p : pieces_) {
    gaps.push_back(Piece{cursor, p.lo, cursor_closed, !p.lo_closed});
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  gaps.push_back(Piece{cursor, u.hi, cursor_closed, u.hi_closed});
  return from_pieces(domain_, std::move(gaps));
}

bool PointSet::is_open() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.lo == p.hi) return false;
    if (p.hi_closed && !(domain_ == Domain::Interval && p.hi == 1)) return false;
    if (p.lo_closed) {
      if (p.lo != 0) return false;
      if (domain_ == Domain::Circle) {
        // [0,1) alone is the whole circle.
        if (pieces_.back().hi != 1) return false;
      }
    }
  }
  return true;
}

std::vector<OpenComponent> PointSet::open_components() const {
  if (!is_open()) throw Error("set is not open");
  std::vector<OpenComponent> out;
  if (pieces_.empty()) return out;
  if (domain_ == Domain::Circle && pieces_.size() == 1 && pieces_[0].lo == 0 && pieces_[0].lo_closed &&
      pieces_[0].hi == 1)
    return {OpenComponent{0, 0, false, true}};
  std::size_t first = 0, last = pieces_.size();
  std::optional<OpenComponent> wrap;
  if (domain_ == Domain::Circle && pieces_.front().lo == 0 && pieces_.front().lo_closed) {
    wrap = OpenComponent{pieces_.back().lo, pieces_.front().hi, true, false};
    first = 1;
    last = pieces_.size() - 1;
  }
  for (std::size_t i = first; i < last; ++i) out.push_back(OpenComponent{pieces_[i].lo, pieces_[i].hi});
  if (wrap) out.push_back(*wrap);
  return out;
}

Rational PointSet::inf() const {
  if (pieces_.empty()) throw Error("inf of empty set");
  return pieces_.front().lo;
}

Rational PointSet::sup() const {
  if (pieces_.empty()) throw Error("sup of empty set");
  return pieces_.back().hi;
}

PointSet unite(const PointSet& a, const PointSet& b) {
  if (a.domain() != b.domain()) throw DomainMismatch();
  std::vector<Piece> all = a.pieces();
  all.insert(all.end(), b.pieces().begin(), b.pieces().end());
  return PointSet::from_pieces(a.domain(), std::move(all));
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  if (a.domain() != b.domain()) throw DomainMismatch();
  std::vector<Piece> out;
  const auto& pa = a.pieces();
  const auto& pb = b.pieces();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    Piece m = meet(pa[i], pb[j]);
    if (!m.empty()) out.push_back(m);
    // Advance whichever piece ends first; on a tie either works.
    if (pa[i].hi < pb[j].hi || (pa[i].hi == pb[j].hi && !pa[i].hi_closed))
      ++i;
    else
      ++j;
  }
  return PointSet::from_pieces(a.domain(), std::move(out));
}

PointSet subtract(const PointSet& a, const PointSet& b) { return intersect(a, b.complement()); }

bool is_subset(const PointSet& a, const PointSet& b) { return subtract(a, b).empty(); }

std::string to_string(const PointSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& p : s.pieces()) {
    if (!out.empty()) out += " U ";
    if (p.lo == p.hi) {
      out += "{" + to_string(p.lo) + "}";
      continue;
    }
    out += p.lo_closed ? "[" : "(";
    out += to_string(p.lo) + ", " + to_string(p.hi);
    out += p.hi_closed ? "]" : ")";
  }
  return out;
}

}  // namespace raag1d
