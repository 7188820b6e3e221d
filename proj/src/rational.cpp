#include "raag1d/rational.hpp"

#include <cctype>
#include <algorithm>
#include <stdexcept>

#include "raag1d/errors.hpp"

namespace raag1d {

namespace {

using u128 = unsigned __int128;

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Binary gcd; libstdc++'s std::gcd divides, which dominates small-value
// arithmetic.
std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b);
  return a << shift;
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    if (a >> 64 == 0 && b >> 64 == 0) return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(__int128 v) {
  const bool neg = v < 0;
  u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) z = -z;
  return z;
}

bool fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

void Rational::assign(mpq_class&& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    n_ = q.get_num().get_si();
    d_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  // den > 0 on entry.
  const bool neg = num < 0;
  u128 m = neg ? -static_cast<u128>(num) : static_cast<u128>(num);
  u128 d = static_cast<u128>(den);
  if (d == 1) {
  } else if (m == 0) {
    d = 1;
  } else if ((d & (d - 1)) == 0) {
    const std::uint64_t lo_m = static_cast<std::uint64_t>(m), lo_d = static_cast<std::uint64_t>(d);
    const int tz_m = lo_m ? __builtin_ctzll(lo_m) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
    const int tz_d = lo_d ? __builtin_ctzll(lo_d) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(d >> 64));
    const int k = std::min(tz_m, tz_d);
    m >>= k;
    d >>= k;
  } else {
    const u128 g = gcd128(m, d);
    if (g > 1) {
      m /= g;
      d /= g;
    }
  }
  Rational r;
  if (m <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax)) {
    r.n_ = neg ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
    r.d_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_integer(neg ? -static_cast<__int128>(m) : static_cast<__int128>(m)), to_integer(static_cast<__int128>(d)));
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational::Rational(const Integer& z) { assign(mpq_class(z)); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(std::move(q));
}

Integer Rational::num() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(n_)); }
Integer Rational::den() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(d_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(Integer(static_cast<long>(n_)), Integer(static_cast<long>(d_)));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  Rational r;
  r.assign(mpq_class(-*big_));
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == b.d_) return Rational::from_wide(static_cast<__int128>(a.n_) + b.n_, a.d_);
    return Rational::from_wide(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                               static_cast<__int128>(a.d_) * b.d_);
  }
  Rational r;
  r.assign(a.to_mpq() + b.to_mpq());
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == b.d_) return Rational::from_wide(static_cast<__int128>(a.n_) - b.n_, a.d_);
    return Rational::from_wide(static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_,
                               static_cast<__int128>(a.d_) * b.d_);
  }
  Rational r;
  r.assign(a.to_mpq() - b.to_mpq());
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0 || b.n_ == 0) return Rational();
    // Cross-cancel first so the product is already reduced.
    const auto mag = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
    const auto g1 = static_cast<std::int64_t>(gcd64(mag(a.n_), static_cast<std::uint64_t>(b.d_)));
    const auto g2 = static_cast<std::int64_t>(gcd64(mag(b.n_), static_cast<std::uint64_t>(a.d_)));
    const __int128 num = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
    const __int128 den = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
    return Rational::from_wide(num, den);
  }
  Rational r;
  r.assign(a.to_mpq() * b.to_mpq());
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (!b.big_) {
    Rational inv;
    inv.n_ = b.n_ < 0 ? -b.d_ : b.d_;
    inv.d_ = b.n_ < 0 ? -b.n_ : b.n_;
    return a * inv;
  }
  Rational r;
  r.assign(a.to_mpq() / b.to_mpq());
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == b.d_) return a.n_ <=> b.n_;
    return static_cast<__int128>(a.n_) * b.d_ <=> static_cast<__int128>(b.n_) * a.d_;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational Rational::floor() const {
  if (!big_) {
    std::int64_t q = n_ / d_;
    if (n_ % d_ != 0 && n_ < 0) --q;
    return Rational(q);
  }
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(r);
}

std::string Rational::str() const {
  if (big_) return big_->get_str(10);
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!den.empty() && den.front() == '+') den.remove_prefix(1);
  if (!valid_integer(num) || den.empty() || !valid_integer(den) || den.front() == '-')
    throw Error("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational ratio(long p, long q) {
  if (q == 0) throw Error("zero denominator");
  return Rational(p) / Rational(q);
}

std::string to_string(const Rational& q) { return q.str(); }

Rational floor(const Rational& q) { return q.floor(); }

Rational frac(const Rational& q) { return q - q.floor(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace raag1d
