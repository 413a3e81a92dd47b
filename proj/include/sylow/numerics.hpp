#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sylow {

using BigInt = mpz_class;

BigInt big(std::uint64_t v);
std::string to_string(const BigInt& v);
BigInt parse_bigint(std::string_view text);
// Throws InvalidArgument when v is negative or does not fit in 64 bits.
std::uint64_t to_u64(const BigInt& v);
bool fits_u64(const BigInt& v);

/// Exact rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(long n) : v_(n) {}
  explicit Rational(const BigInt& n) : v_(n) {}

  // Throws InvalidArgument on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "n/d", including "0/1" and "3/1".
  std::string str() const;
  /// Like str() but drops a unit denominator ("3" rather than "3/1").
  std::string pretty() const;

  /// Accepts "n/d" or a bare integer "n".
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rat(const BigInt& n, const BigInt& d);
inline Rational rat(long n, long d) { return rat(BigInt(n), BigInt(d)); }
/// 1/(d) for a positive integer d.
Rational unit_fraction(const BigInt& d);

Rational rat_sum(std::span<const Rational> terms);
// Throws InvalidArgument on an empty list or a value < 1.
BigInt lcm_all(std::span<const BigInt> values);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);
// Rejects (InvalidArgument) values outside the 64-bit range instead of guessing.
bool is_prime(const BigInt& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

BigInt pow(std::uint64_t base, unsigned exponent);

/// k such that n == p^k, or -1 when n is not a power of p (n == 1 gives 0).
int power_exponent(const BigInt& n, std::uint64_t p);

struct PrimePower {
  std::uint64_t prime = 2;
  unsigned exponent = 1;

  // Validates primality and exponent >= 1.
  static PrimePower make(std::uint64_t prime, unsigned exponent);
  BigInt value() const { return pow(prime, exponent); }

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

}  // namespace sylow
