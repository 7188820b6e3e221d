#include "raag1d/actions.hpp"

#include <algorithm>

#include "raag1d/errors.hpp"

namespace raag1d {

namespace {

Rational apply_power(const PLMap& f, std::int64_t e, Rational x) {
  for (std::int64_t k = 0; k < e; ++k) x = f.lift(x);
  for (std::int64_t k = 0; k > e; --k) x = f.lift_inverse(x);
  return x;
}

FreeProductWord single(const Syllable& s) { return reduce({s}); }

// Returns (h, c) with h = c w c^-1 and h either a single syllable or of the
// form g_l t^r_l ... g_1 t^r_1 (starts abelian, ends with t).
std::pair<FreeProductWord, FreeProductWord> cyclic_form(const FreeProductWord& w) {
  FreeProductWord h = w;
  FreeProductWord c;
  auto conjugate_by_last = [&] {
    const FreeProductWord s = single(h.syllables().back());
    h = concat(concat(s, h), s.inverse());
    c = concat(s, c);
  };
  while (h.length() >= 2 && h.syllables().front().kind == h.syllables().back().kind) conjugate_by_last();
  if (h.length() >= 2 && h.syllables().front().kind == Syllable::Kind::T) conjugate_by_last();
  return {h, c};
}

// PL bump on [lo,hi] pushing interior points rightwards; identity elsewhere
// is added by the caller.
std::vector<Breakpoint> right_bump(const Rational& lo, const Rational& hi, bool inverse) {
  const Rational w = hi - lo;
  Breakpoint mid{lo + w / 2, lo + w * 3 / 4};
  if (inverse) std::swap(mid.x, mid.y);
  return {{lo, lo}, mid, {hi, hi}};
}

// PL map supported in [lo,hi] sending chain[k] to chain[k+1].
std::vector<Breakpoint> chain_map(const Rational& lo, const Rational& hi, const std::vector<Rational>& chain,
                                  bool inverse) {
  std::vector<Breakpoint> pts{{lo, lo}};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    Breakpoint p{chain[k], chain[k + 1]};
    if (inverse) std::swap(p.x, p.y);
    pts.push_back(p);
  }
  pts.push_back({hi, hi});
  return pts;
}

PLMap assemble(std::vector<Breakpoint> inner) {
  std::vector<Breakpoint> pts{{0, 0}};
  for (auto& p : inner)
    if (p.x > pts.back().x) pts.push_back(std::move(p));
  if (pts.back().x < 1) pts.push_back({1, 1});
  return PLMap(Domain::Interval, std::move(pts));
}

std::vector<Rational> even_chain(const Rational& from, const Rational& to, std::int64_t steps) {
  std::vector<Rational> chain;
  for (std::int64_t k = 0; k <= steps; ++k) chain.push_back(from + (to - from) * k / steps);
  return chain;
}

std::int64_t magnitude(std::int64_t e) { return e < 0 ? -e : e; }

// Action where the cyclically reduced h moves `x0`.
ActionAssignment realise_cyclic(const FreeProductWord& h) {
  const auto& syl = h.syllables();
  ActionAssignment asg{PLMap(), PLMap(), PLMap(), 0, {}, {}};

  if (syl.size() == 1 && syl[0].kind == Syllable::Kind::T) {
    const std::int64_t r = syl[0].r;
    asg.t = assemble(chain_map(ratio(1, 4), ratio(3, 4),
                               even_chain(ratio(3, 8), ratio(5, 8), magnitude(r)), r < 0));
    asg.x0 = ratio(3, 8);
    return asg;
  }
  if (syl.size() == 1) {
    const auto& g = syl[0];
    asg.a = assemble(right_bump(ratio(1, 4), ratio(1, 2), g.m < 0));
    asg.b = assemble(right_bump(ratio(1, 2), ratio(3, 4), g.n < 0));
    asg.x0 = g.m != 0 ? ratio(3, 8) : ratio(5, 8);
    return asg;
  }

  // syl = [g_l, t^r_l, ..., g_1, t^r_1]; block i lives at [i s, i s + s/2].
  const std::size_t pairs = syl.size() / 2;
  const Rational s = ratio(1, static_cast<long>(pairs + 1));
  auto g_of = [&](std::size_t i) -> const Syllable& { return syl[2 * (pairs - i)]; };
  auto t_of = [&](std::size_t i) -> const Syllable& { return syl[2 * (pairs - i) + 1]; };

  // Orient each half so that the relevant power of a (or b) pushes right.
  std::vector<Breakpoint> a_pts, b_pts, t_pts;
  std::vector<Rational> xs;
  for (std::size_t i = 1; i <= pairs; ++i) {
    const Syllable& g = g_of(i);
    const Rational p = s * static_cast<long>(i);
    const Rational mid = p + s / 4;
    const Rational q = p + s / 2;
    auto a_bump = right_bump(p, mid, g.m < 0);
    auto b_bump = right_bump(mid, q, g.n < 0);
    a_pts.insert(a_pts.end(), a_bump.begin(), a_bump.end());
    b_pts.insert(b_pts.end(), b_bump.begin(), b_bump.end());
    xs.push_back(g.m != 0 ? (p + mid) / 2 : (mid + q) / 2);
  }
  asg.a = assemble(std::move(a_pts));
  asg.b = assemble(std::move(b_pts));

  // t carries the orbit from g_{i-1}(x_{i-1}) to x_i inside L_i = [c_i, d_i].
  Rational start = s / 2;
  Rational c_i = s / 4;
  asg.x0 = start;
  for (std::size_t i = 1; i <= pairs; ++i) {
    const Syllable& g = g_of(i);
    const Syllable& tr = t_of(i);
    const Rational& x_i = xs[i - 1];
    const Rational y_i = apply_power(asg.a, g.m, apply_power(asg.b, g.n, x_i));
    const Rational d_i = (x_i + y_i) / 2;
    auto t_piece = chain_map(c_i, d_i, even_chain(start, x_i, magnitude(tr.r)), tr.r < 0);
    t_pts.insert(t_pts.end(), t_piece.begin(), t_piece.end());
    start = y_i;
    c_i = (d_i + y_i) / 2;
  }
  asg.t = assemble(std::move(t_pts));
  return asg;
}

PLMap syllable_map(const ActionAssignment& asg, const Syllable& s) {
  if (s.kind == Syllable::Kind::T) return power(asg.t, s.r);
  return compose(power(asg.a, s.m), power(asg.b, s.n));
}

}  // namespace

PLMap evaluate_word(const ActionAssignment& asg, const FreeProductWord& w) {
  PLMap result = PLMap::identity(asg.a.domain());
  for (const auto& s : w.syllables()) result = compose(result, syllable_map(asg, s));
  return result;
}

Rational apply_word(const ActionAssignment& asg, const FreeProductWord& w, const Rational& x) {
  Rational y = x;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->kind == Syllable::Kind::T) {
      y = apply_power(asg.t, it->r, std::move(y));
    } else {
      y = apply_power(asg.b, it->n, std::move(y));
      y = apply_power(asg.a, it->m, std::move(y));
    }
  }
  return y;
}

ActionAssignment build_separating_action(const FreeProductWord& w) {
  if (w.is_identity()) throw TrivialWord("word reduces to the identity");
  auto [h, c] = cyclic_form(w);
  ActionAssignment asg = realise_cyclic(h);
  // w = c^-1 h c, so w moves c^-1(x0') whenever h moves x0'.
  asg.x0 = apply_word(asg, c.inverse(), asg.x0);
  asg.words = {w};
  asg.witnesses = {asg.x0};
  return asg;
}

ActionAssignment build_faithful_on(const std::vector<FreeProductWord>& words) {
  if (words.empty()) throw Error("no words to realise");
  for (std::size_t k = 0; k < words.size(); ++k)
    if (words[k].is_identity()) throw TrivialWord("word " + std::to_string(k + 1) + " reduces to the identity");

  const long slots = static_cast<long>(words.size()) + 1;
  std::vector<Rational> cuts;
  for (long k = 0; k <= slots; ++k) cuts.push_back(ratio(k, slots));
  std::vector<PLMap> as, bs, ts;
  ActionAssignment out{PLMap(), PLMap(), PLMap(), 0, words, {}};
  for (std::size_t k = 0; k < words.size(); ++k) {
    ActionAssignment part = build_separating_action(words[k]);
    as.push_back(part.a);
    bs.push_back(part.b);
    ts.push_back(part.t);
    out.witnesses.push_back(cuts[k] + part.x0 * (cuts[k + 1] - cuts[k]));
  }
  as.push_back(PLMap());
  bs.push_back(PLMap());
  ts.push_back(PLMap());
  out.a = splice(as, cuts);
  out.b = splice(bs, cuts);
  out.t = splice(ts, cuts);
  out.x0 = out.witnesses.front();
  return out;
}

bool AssignmentReport::ok() const {
  return a_b_commute && supports_disjoint &&
         std::all_of(word_moves.begin(), word_moves.end(), [](bool b) { return b; });
}

AssignmentReport certify(const ActionAssignment& asg) {
  AssignmentReport r;
  r.a_b_commute = commutator(asg.a, asg.b).is_identity();
  r.supports_disjoint = intersect(support(asg.a), support(asg.b)).empty();
  for (std::size_t k = 0; k < asg.words.size(); ++k) {
    const Rational& x = k < asg.witnesses.size() ? asg.witnesses[k] : asg.x0;
    r.word_moves.push_back(apply_word(asg, asg.words[k], x) != x);
  }
  return r;
}

}  // namespace raag1d
