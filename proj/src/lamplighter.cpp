#include "raag1d/lamplighter.hpp"

#include "raag1d/errors.hpp"

namespace raag1d {

namespace {

// u(x) >= x on [from, 1]: u - id is linear between breakpoints, so the
// endpoints of each piece meeting [from, 1] decide it.
bool non_decreasing_orbits_from(const PLMap& u, const Rational& from) {
  if (u.lift(from) < from) return false;
  for (const auto& p : u.breakpoints())
    if (p.x >= from && p.y < p.x) return false;
  return true;
}

}  // namespace

bool verify_lamplighter_relations(const PLMap& g, const PLMap& u, const Rational& k_lo, const Rational& k_hi,
                                  unsigned depth) {
  const PointSet hull = PointSet::closed_interval(g.domain(), k_lo, k_hi);
  PLMap uj = PLMap::identity(u.domain());
  for (unsigned j = 1; j <= depth; ++j) {
    uj = compose(u, uj);
    if (!commutator(g, conjugate(uj, g)).is_identity()) return false;
    if (!intersect(image(uj, hull), hull).empty()) return false;
  }
  return true;
}

std::optional<LamplighterCertificate> lamplighter_certificate(const PLMap& g, const PLMap& u, unsigned j_checked) {
  if (g.is_identity()) throw IdentityInput("g is the identity");
  if (g.domain() != Domain::Interval || u.domain() != Domain::Interval)
    throw Error("lamplighter certificates are defined for interval maps");
  const PointSet supp = support(g);
  const Rational lo = supp.inf();
  const Rational hi = supp.sup();
  if (lo == 0 || hi == 1) return std::nullopt;
  if (!(u.lift(lo) > hi)) return std::nullopt;
  if (!non_decreasing_orbits_from(u, lo)) return std::nullopt;
  if (!verify_lamplighter_relations(g, u, lo, hi, j_checked))
    throw Error("internal: certified pair fails the lamplighter relations");
  return LamplighterCertificate{g, u, lo, hi, j_checked};
}

ChainReport recursive_commutator_chain(const PLMap& g1, const std::vector<PLMap>& picks) {
  ChainReport report;
  PLMap g = g1;
  for (const auto& u : picks) {
    PLMap next = commutator(g, conjugate(u, g));
    const bool done = next.is_identity();
    report.steps.push_back({g, support(g), done});
    if (done) {
      report.reached_identity = true;
      return report;
    }
    g = std::move(next);
  }
  report.steps.push_back({g, support(g), false});
  return report;
}

}  // namespace raag1d
