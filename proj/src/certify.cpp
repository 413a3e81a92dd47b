#include "sylow/certify.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "sylow/errors.hpp"

namespace sylow {

void Certificate::validate() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    const std::string where = "part " + std::to_string(i + 1) + " (" + std::to_string(part.prime) + "^" + std::to_string(part.exponent) + ")";
    if (!is_prime(part.prime)) throw InvalidArgument(where + ": " + std::to_string(part.prime) + " is not prime");
    if (part.exponent < 1) throw InvalidArgument(where + ": exponent must be at least 1");
    if (forbidden.contains(part.prime)) throw InvalidArgument(where + ": prime " + std::to_string(part.prime) + " is forbidden");
    if (i > 0 && parts[i - 1].prime >= part.prime) throw InvalidArgument(where + ": primes must be strictly increasing");
  }
}

Rational Certificate::sum() const {
  std::vector<Rational> terms;
  terms.reserve(parts.size());
  for (const auto& p : parts) terms.push_back(unit_fraction(p.value() + 1));
  return rat_sum(terms);
}

std::vector<std::uint64_t> Certificate::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& p : parts) out.push_back(p.prime);
  return out;
}

Certificate make_certificate(const std::vector<std::uint64_t>& primes, const Rational& target) {
  Certificate c;
  c.target = target;
  for (auto q : primes) c.parts.push_back(PrimePower{q, 1});
  std::sort(c.parts.begin(), c.parts.end());
  c.validate();
  return c;
}

PartitionWitness verify_certificate(const Certificate& c) {
  c.validate();
  std::vector<BigInt> denominators{c.target.den()};
  for (const auto& p : c.parts) denominators.push_back(p.value() + 1);
  PartitionWitness w;
  w.common_denominator = lcm_all(denominators);
  for (std::size_t i = 1; i < denominators.size(); ++i) {
    BigInt n;
    mpz_divexact(n.get_mpz_t(), w.common_denominator.get_mpz_t(), denominators[i].get_mpz_t());
    w.total += n;
    w.numerators.push_back(std::move(n));
  }
  BigInt scaled = c.target.num() * w.common_denominator;
  mpz_divexact(w.target_numerator.get_mpz_t(), scaled.get_mpz_t(), c.target.den().get_mpz_t());
  return w;
}

void write_certificate(std::ostream& os, const Certificate& c) {
  const PartitionWitness w = verify_certificate(c);
  os << "target " << c.target.str() << "\n";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    os << c.parts[i].prime << " " << c.parts[i].exponent << " " << to_string(w.numerators[i]) << "\n";
  }
  os << "denominator " << to_string(w.common_denominator) << "\n";
  os << "total " << to_string(w.total) << "\n";
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  write_certificate(os, c);
  return os.str();
}

Certificate read_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  Certificate c;
  std::vector<BigInt> recorded;
  std::optional<BigInt> denominator, total;
  bool have_target = false;
  while (std::getline(in, line)) {
    const std::size_t line_at = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    try {
      if (tok[0] == "target" && tok.size() == 2 && !have_target) {
        c.target = Rational::parse(tok[1]);
        have_target = true;
      } else if (tok[0] == "denominator" && tok.size() == 2 && have_target && !denominator) {
        denominator = parse_bigint(tok[1]);
      } else if (tok[0] == "total" && tok.size() == 2 && denominator && !total) {
        total = parse_bigint(tok[1]);
      } else if (tok.size() == 3 && have_target && !denominator) {
        const BigInt q = parse_bigint(tok[0]);
        const BigInt e = parse_bigint(tok[1]);
        if (!fits_u64(q) || e < 1 || !e.fits_uint_p()) throw InvalidArgument("bad prime power");
        c.parts.push_back(PrimePower{to_u64(q), static_cast<unsigned>(e.get_ui())});
        recorded.push_back(parse_bigint(tok[2]));
      } else {
        throw ParseError(line_at, "unexpected line '" + line + "'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(line_at, e.what());
    }
  }
  if (!have_target || !denominator || !total) throw ParseError(offset, "certificate needs target, denominator and total lines");
  const PartitionWitness w = verify_certificate(c);
  if (w.common_denominator != *denominator || w.numerators != recorded || w.total != *total) {
    throw CrossCheckFailure("recorded witness does not match the recomputed partition");
  }
  return c;
}

void SearchBounds::validate() const {
  if (max_prime < 1 || max_parts < 1 || max_exponent < 1 || node_budget < 1) throw InvalidArgument("search bounds must all be at least 1");
  if (max_prime > 100'000'000) throw Refusal("max_prime above 10^8 is not supported");
  if (max_exponent > 64) throw Refusal("max_exponent above 64 is not supported");
}

Residual residual_bounds(const Rational& target_remaining, std::uint64_t next_prime, unsigned parts_remaining,
                         const std::set<std::uint64_t>& forbidden) {
  if (target_remaining.sign() < 0) return Residual::Prune;
  if (target_remaining.is_zero()) return Residual::Feasible;
  if (parts_remaining == 0) return Residual::Prune;
  // Distinct increasing primes: the gain is at most the sum of the next
  // parts_remaining terms 1/(q+1), and exponents above 1 only shrink a term.
  Rational best;
  unsigned taken = 0;
  for (std::uint64_t q = std::max<std::uint64_t>(next_prime, 2); taken < parts_remaining; ++q) {
    if (forbidden.contains(q) || !is_prime(q)) continue;
    best += unit_fraction(big(q) + 1);
    ++taken;
    if (!(best < target_remaining)) return Residual::Feasible;
  }
  return Residual::Prune;
}

CertificateGroup certificate_to_group(const Certificate& c) {
  if (c.target != rat(4, 9)) throw InvalidArgument("certificate target is " + c.target.str() + ", not 4/9");
  for (const auto& p : c.parts) {
    if (p.exponent != 1) throw InvalidArgument("certificate is not squarefree: " + std::to_string(p.prime) + "^" + std::to_string(p.exponent));
    if (p.prime == 2 || p.prime == 3 || p.prime == 5) throw InvalidArgument("prime " + std::to_string(p.prime) + " collides with A5 x C2");
  }
  if (!verify_certificate(c).valid()) throw InvalidArgument("certificate does not sum to 4/9");
  CertificateGroup out;
  out.expr.factors.push_back(BuiltinA5{});
  out.expr.factors.push_back(Cyclic{PrimePower{2, 1}});
  out.prime_product = 1;
  for (const auto& p : c.parts) {
    out.expr.factors.push_back(Cyclic{p});
    out.prime_product *= big(p.prime);
  }
  out.order = 120 * out.prime_product;
  return out;
}

}  // namespace sylow
