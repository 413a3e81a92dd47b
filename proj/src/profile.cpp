#include "sylow/profile.hpp"

#include "sylow/errors.hpp"

namespace sylow {

void check_datum(const SylowDatum& d) {
  const std::string where = "Sylow datum for p=" + std::to_string(d.prime);
  if (!is_prime(d.prime)) throw CrossCheckFailure(where + ": key is not prime");
  if (power_exponent(d.sigma, d.prime) < 1) throw CrossCheckFailure(where + ": sigma " + to_string(d.sigma) + " is not a positive power of p");
  if (d.nu < 1) throw CrossCheckFailure(where + ": nu must be positive");
  if (mpz_fdiv_ui(d.nu.get_mpz_t(), d.prime) != 1 % d.prime) {
    throw CrossCheckFailure(where + ": nu " + to_string(d.nu) + " is not 1 mod p");
  }
}

void SylowProfile::insert(const SylowDatum& d) {
  check_datum(d);
  entries_[d.prime] = d;
}

const SylowDatum& SylowProfile::at(std::uint64_t p) const {
  auto it = entries_.find(p);
  if (it == entries_.end()) throw InvalidArgument("prime " + std::to_string(p) + " does not divide the group order");
  return it->second;
}

Rational SylowProfile::gamma() const {
  Rational total;
  for (const auto& [p, d] : entries_) total += d.gamma_term();
  return total;
}

}  // namespace sylow
