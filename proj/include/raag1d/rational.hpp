#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace raag1d {

using Integer = mpz_class;

// Exact rational in canonical form (reduced, positive denominator).
//
// Values whose numerator and denominator fit in 63 bits live inline and use
// 128-bit intermediates; anything larger is held as a GMP mpq. The
// representation is unique: a value that fits inline is never stored big.
class Rational {
 public:
  Rational() noexcept = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<std::int64_t>(v) != kMin) {
        n_ = static_cast<std::int64_t>(v);
        return;
      }
    } else if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(kMax)) {
      n_ = static_cast<std::int64_t>(v);
      return;
    }
    assign(mpq_class(Integer(std::to_string(v), 10)));
  }
  Rational(const Integer& z);  // NOLINT(google-explicit-constructor)
  // num/den; throws std::domain_error on a zero denominator.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) { assign(mpq_class(q)); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  Integer num() const;
  Integer den() const;
  mpq_class to_mpq() const;
  int sign() const;
  bool is_integer() const { return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : d_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Largest integer <= *this.
  Rational floor() const;
  std::string str() const;

 private:
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;

  void assign(mpq_class&& q);
  static Rational from_wide(__int128 num, __int128 den);
};

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws Error on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// p/q in canonical form. Throws Error when q == 0.
Rational ratio(long p, long q);

Rational floor(const Rational& q);
Rational frac(const Rational& q);  // q - floor(q), in [0, 1)
Rational abs(const Rational& q);

}  // namespace raag1d
