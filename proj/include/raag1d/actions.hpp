#pragma once

#include <string>
#include <vector>

#include "raag1d/pl_map.hpp"
#include "raag1d/word.hpp"

namespace raag1d {

// Action of Z^2 * Z = <a,b | [a,b]> * <t> on [0,1]: images of the three
// generators plus a basepoint. `words`/`witnesses` record which words the
// action was built to separate and a point each of them moves.
struct ActionAssignment {
  PLMap a, b, t;
  Rational x0;
  std::vector<FreeProductWord> words;
  std::vector<Rational> witnesses;
};

// Image of w: leftmost syllable applied last.
PLMap evaluate_word(const ActionAssignment& asg, const FreeProductWord& w);

// Image of a point under w, without composing maps.
Rational apply_word(const ActionAssignment& asg, const FreeProductWord& w, const Rational& x);

// Realisation in which w moves x0, with supp a and supp b disjoint.
// Throws TrivialWord if w is the identity.
ActionAssignment build_separating_action(const FreeProductWord& w);

// One action on [0,1] in which every listed word moves a point: the action
// for the k-th word is rescaled into [k/(N+1), (k+1)/(N+1)].
// Throws TrivialWord naming the first trivial word.
ActionAssignment build_faithful_on(const std::vector<FreeProductWord>& words);

struct AssignmentReport {
  bool a_b_commute = false;
  bool supports_disjoint = false;
  // One entry per recorded word: does it move its witness point?
  std::vector<bool> word_moves;

  bool ok() const;
};

// Re-derives every invariant of an assignment with exact arithmetic.
AssignmentReport certify(const ActionAssignment& asg);

}  // namespace raag1d
