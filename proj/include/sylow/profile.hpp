#pragma once

#include <cstdint>
#include <map>

#include "sylow/numerics.hpp"

namespace sylow {

/// Sylow data of one prime: nu Sylow p-subgroups, each of order sigma.
struct SylowDatum {
  std::uint64_t prime = 2;
  BigInt nu = 1;
  BigInt sigma = 1;

  Rational gamma_term() const { return Rational(nu, sigma + 1); }

  friend bool operator==(const SylowDatum&, const SylowDatum&) = default;
};

/// Sylow data for every prime dividing the group order, and no others.
class SylowProfile {
 public:
  using Map = std::map<std::uint64_t, SylowDatum>;

  SylowProfile() = default;

  // Validates the datum (sigma a positive power of p, nu >= 1, nu = 1 mod p)
  // and throws CrossCheckFailure if it is inconsistent.
  void insert(const SylowDatum& d);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool contains(std::uint64_t p) const { return entries_.contains(p); }
  const SylowDatum& at(std::uint64_t p) const;

  /// Sum of nu_p / (sigma_p + 1) over the stored primes.
  Rational gamma() const;

  friend bool operator==(const SylowProfile&, const SylowProfile&) = default;

 private:
  Map entries_;
};

// Sanity check used on every produced datum.
void check_datum(const SylowDatum& d);

}  // namespace sylow
