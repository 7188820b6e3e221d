#include "raag1d/lemmas.hpp"

#include "raag1d/errors.hpp"

namespace raag1d {

CommutatorSupportReport commutator_support_report(const PLMap& f, const PLMap& g) {
  if (f.domain() != g.domain()) throw DomainMismatch();
  const PointSet sf = support(f);
  const PointSet sg = support(g);
  CommutatorSupportReport r;
  r.lhs = support(commutator(f, g)).closure();
  r.rhs = unite(unite(sf, sg), intersect(sf, sg).closure());
  r.holds = is_subset(r.lhs, r.rhs);
  return r;
}

bool check_commutator_support(const PLMap& f, const PLMap& g) { return commutator_support_report(f, g).holds; }

namespace {

void require_disjoint(const PointSet& sc, const PointSet& sd) {
  if (!intersect(sc, sd).empty()) throw HypothesisViolated("supp c and supp d intersect");
}

}  // namespace

PLMap phi_map(const PLMap& b, const PLMap& c, const PLMap& d) {
  if (b.domain() != c.domain() || b.domain() != d.domain()) throw DomainMismatch();
  require_disjoint(support(c), support(d));
  return commutator(c, conjugate(b, d));
}

PhiSupportReport phi_support_report(const PLMap& b, const PLMap& c, const PLMap& d) {
  if (b.domain() != c.domain() || b.domain() != d.domain()) throw DomainMismatch();
  const PointSet sb = support(b);
  const PointSet sc = support(c);
  const PointSet sd = support(d);
  require_disjoint(sc, sd);
  const PLMap phi = commutator(c, conjugate(b, d));
  PhiSupportReport r;
  r.lhs = support(phi);
  r.rhs = unite(sb, unite(image(compose(c, b), intersect(sb, sd)), image(compose(d, invert(b)), intersect(sb, sc))));
  r.holds = is_subset(r.lhs, r.rhs);
  return r;
}

bool check_phi_support(const PLMap& b, const PLMap& c, const PLMap& d) { return phi_support_report(b, c, d).holds; }

C1ContainmentReport check_c1_containment(const PLMap& b, const PLMap& c, const PLMap& d) {
  const PLMap phi = phi_map(b, c, d);
  const PointSet lhs = subtract(support(phi), support(b)).closure();
  C1ContainmentReport r;
  r.violating_set = subtract(lhs, unite(support(c), support(d)));
  r.holds = r.violating_set.empty();
  return r;
}

TwoJumpsReport check_two_jumps_prefix(const PLMap& f, const PLMap& g, const std::vector<JumpTriple>& triples) {
  if (f.domain() != g.domain()) throw DomainMismatch();
  TwoJumpsReport r;
  for (const auto& [s, t, y] : triples) {
    const Rational fy = f(y), gy = g(y);
    const bool first = fy <= s && s == g(s) && s < y && y < t && t == f(t) && t <= gy;
    const bool second = gy <= t && t == f(t) && t < y && y < s && s == g(s) && s <= fy;
    r.configuration.push_back(first ? 1 : second ? 2 : 0);
    r.valid = r.valid && (first || second);
    r.gaps.push_back(abs(gy - fy));
  }
  return r;
}

}  // namespace raag1d
