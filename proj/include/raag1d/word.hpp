#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace raag1d {

// Syllable of Z^2 * Z = <a,b> * <t>: either a^m b^n or t^r.
struct Syllable {
  enum class Kind { Abelian, T };

  Kind kind = Kind::T;
  std::int64_t m = 0;  // a exponent (Abelian)
  std::int64_t n = 0;  // b exponent (Abelian)
  std::int64_t r = 0;  // t exponent (T)

  static Syllable ab(std::int64_t m, std::int64_t n) { return {Kind::Abelian, m, n, 0}; }
  static Syllable t(std::int64_t r) { return {Kind::T, 0, 0, r}; }

  bool is_trivial() const { return kind == Kind::Abelian ? (m == 0 && n == 0) : r == 0; }
  Syllable inverse() const { return {kind, -m, -n, -r}; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Reduced word: no trivial syllable, adjacent syllables of different kinds.
// The leftmost syllable acts last.
class FreeProductWord {
 public:
  FreeProductWord() = default;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  FreeProductWord inverse() const;

  friend FreeProductWord reduce(std::vector<Syllable> syllables);
  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

FreeProductWord reduce(std::vector<Syllable> syllables);
FreeProductWord concat(const FreeProductWord& u, const FreeProductWord& v);

// Whitespace-separated letters a, b, t with optional integer exponents, e.g.
// "a^2 b^-1 t^3". "1" or an empty string is the identity. Throws Error.
std::vector<Syllable> parse_syllables(std::string_view text);
FreeProductWord parse_word(std::string_view text);

// Canonical spelling, "1" for the identity.
std::string to_string(const FreeProductWord& w);

// Visits every reduced word with 1..max_length syllables whose exponents lie
// in [-max_exp, max_exp], in a deterministic order.
void for_each_reduced_word(std::size_t max_length, std::int64_t max_exp,
                           const std::function<void(const FreeProductWord&)>& visit);
std::vector<FreeProductWord> enumerate_reduced_words(std::size_t max_length, std::int64_t max_exp);

}  // namespace raag1d
