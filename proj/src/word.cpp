#include "raag1d/word.hpp"

#include <cctype>
#include <charconv>

#include "raag1d/errors.hpp"

namespace raag1d {

FreeProductWord reduce(std::vector<Syllable> syllables) {
  FreeProductWord w;
  auto& out = w.syllables_;
  for (const auto& s : syllables) {
    if (s.is_trivial()) continue;
    if (!out.empty() && out.back().kind == s.kind) {
      Syllable& top = out.back();
      top.m += s.m;
      top.n += s.n;
      top.r += s.r;
      if (top.is_trivial()) out.pop_back();
      continue;
    }
    out.push_back(s);
  }
  return w;
}

FreeProductWord FreeProductWord::inverse() const {
  std::vector<Syllable> inv(syllables_.rbegin(), syllables_.rend());
  for (auto& s : inv) s = s.inverse();
  return reduce(std::move(inv));
}

FreeProductWord concat(const FreeProductWord& u, const FreeProductWord& v) {
  std::vector<Syllable> all = u.syllables();
  all.insert(all.end(), v.syllables().begin(), v.syllables().end());
  return reduce(std::move(all));
}

std::vector<Syllable> parse_syllables(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw Error("unexpected text after '1' in word '" + std::string(text) + "'");
    return out;
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    const char letter = text[i];
    if (letter != 'a' && letter != 'b' && letter != 't')
      throw Error(std::string("unexpected character '") + letter + "' in word '" + std::string(text) + "'");
    ++i;
    std::int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view digits = text.substr(i, j - i);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw Error("bad exponent in word '" + std::string(text) + "'");
      i = j;
    }
    if (letter == 'a')
      out.push_back(Syllable::ab(e, 0));
    else if (letter == 'b')
      out.push_back(Syllable::ab(0, e));
    else
      out.push_back(Syllable::t(e));
  }
  return out;
}

FreeProductWord parse_word(std::string_view text) { return reduce(parse_syllables(text)); }

namespace {

void append_letter(std::string& out, char letter, std::int64_t e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += letter;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const FreeProductWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (s.kind == Syllable::Kind::Abelian) {
      append_letter(out, 'a', s.m);
      append_letter(out, 'b', s.n);
    } else {
      append_letter(out, 't', s.r);
    }
  }
  return out;
}

void for_each_reduced_word(std::size_t max_length, std::int64_t max_exp,
                           const std::function<void(const FreeProductWord&)>& visit) {
  std::vector<Syllable> abelian, tees;
  for (std::int64_t m = -max_exp; m <= max_exp; ++m)
    for (std::int64_t n = -max_exp; n <= max_exp; ++n)
      if (m != 0 || n != 0) abelian.push_back(Syllable::ab(m, n));
  for (std::int64_t r = -max_exp; r <= max_exp; ++r)
    if (r != 0) tees.push_back(Syllable::t(r));

  std::vector<Syllable> current;
  // Alternating syllables are already reduced, so reduce() just copies.
  auto extend = [&](auto&& self, std::size_t length, bool next_abelian) -> void {
    if (current.size() == length) {
      visit(reduce(current));
      return;
    }
    for (const auto& s : next_abelian ? abelian : tees) {
      current.push_back(s);
      self(self, length, !next_abelian);
      current.pop_back();
    }
  };
  for (std::size_t length = 1; length <= max_length; ++length)
    for (bool start_abelian : {true, false}) extend(extend, length, start_abelian);
}

std::vector<FreeProductWord> enumerate_reduced_words(std::size_t max_length, std::int64_t max_exp) {
  std::vector<FreeProductWord> out;
  for_each_reduced_word(max_length, max_exp, [&](const FreeProductWord& w) { out.push_back(w); });
  return out;
}

}  // namespace raag1d
