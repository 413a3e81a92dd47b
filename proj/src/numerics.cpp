#include "sylow/numerics.hpp"

#include <ostream>

#include "sylow/errors.hpp"

namespace sylow {

BigInt big(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8, "mpz_class needs 64-bit unsigned long");
  return BigInt(static_cast<unsigned long>(v));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InvalidArgument("expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidArgument("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

bool fits_u64(const BigInt& v) { return sgn(v) >= 0 && v.fits_ulong_p(); }

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw InvalidArgument("value " + to_string(v) + " outside the 64-bit range");
  return v.get_ui();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const { return to_string(num()) + "/" + to_string(den()); }

std::string Rational::pretty() const { return is_integer() ? to_string(num()) : str(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat(const BigInt& n, const BigInt& d) { return Rational(n, d); }

Rational unit_fraction(const BigInt& d) { return Rational(BigInt(1), d); }

Rational rat_sum(std::span<const Rational> terms) {
  Rational total;
  for (const auto& t : terms) total += t;
  return total;
}

BigInt lcm_all(std::span<const BigInt> values) {
  if (values.empty()) throw InvalidArgument("lcm of an empty list");
  BigInt acc = 1;
  for (const auto& v : values) {
    if (v < 1) throw InvalidArgument("lcm argument " + to_string(v) + " is not positive");
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (sgn(n) < 0) return false;
  if (!n.fits_ulong_p()) throw InvalidArgument("primality of " + to_string(n) + " is outside the supported 64-bit range");
  return is_prime(static_cast<std::uint64_t>(n.get_ui()));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

BigInt pow(std::uint64_t base, unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

int power_exponent(const BigInt& n, std::uint64_t p) {
  if (n < 1 || p < 2) return -1;
  BigInt m = n;
  int k = 0;
  while (m != 1) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return -1;
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++k;
  }
  return k;
}

PrimePower PrimePower::make(std::uint64_t prime, unsigned exponent) {
  if (!is_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
  if (exponent < 1) throw InvalidArgument("exponent of " + std::to_string(prime) + " must be at least 1");
  return PrimePower{prime, exponent};
}

}  // namespace sylow
