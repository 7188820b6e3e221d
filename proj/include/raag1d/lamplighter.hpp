#pragma once

#include <optional>
#include <vector>

#include "raag1d/pl_map.hpp"

namespace raag1d {

// Sufficient condition for <g,u> to be the lamplighter group Z wr Z:
// K = hull(supp g) is compact in (0,1), u(inf K) > sup K, and u(x) >= x for
// all x >= inf K. Then the u^j K (j >= 1) are pairwise disjoint and miss K,
// so g commutes with every u^j g u^-j.
struct LamplighterCertificate {
  PLMap g, u;
  Rational k_lo, k_hi;  // K = [k_lo, k_hi]
  unsigned j_checked = 0;
};

inline constexpr unsigned kDefaultLamplighterDepth = 20;

// Returns a certificate iff the condition holds; the relations
// [g, u^j g u^-j] = 1 and u^j K ∩ K = ∅ are then re-verified exactly for
// j = 1..j_checked (a failure there throws Error, as it would be a bug).
// Throws IdentityInput when g is the identity.
std::optional<LamplighterCertificate> lamplighter_certificate(const PLMap& g, const PLMap& u,
                                                               unsigned j_checked = kDefaultLamplighterDepth);

// Independent exact check of the relations for j = 1..depth.
bool verify_lamplighter_relations(const PLMap& g, const PLMap& u, const Rational& k_lo, const Rational& k_hi,
                                  unsigned depth);

struct ChainStep {
  PLMap g;              // g_i
  PointSet support;     // supp g_i
  bool next_is_identity;  // g_{i+1} = 1
};

struct ChainReport {
  std::vector<ChainStep> steps;
  bool reached_identity = false;
};

// g_{i+1} = [g_i, u_i g_i u_i^-1] for the given picks u_1, u_2, ...; stops
// once a term is the identity or the picks run out.
ChainReport recursive_commutator_chain(const PLMap& g1, const std::vector<PLMap>& picks);

}  // namespace raag1d
