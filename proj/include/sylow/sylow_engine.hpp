#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sylow/group_model.hpp"
#include "sylow/profile.hpp"

namespace sylow {

struct SylowTerm {
  std::uint64_t prime = 2;
  BigInt coefficient = 1;  // nu_p
  BigInt exponent = 1;     // sigma_p
};

/// SP(G,x) = sum over p of nu_p x^sigma_p, one term per prime.
class SylowPolynomial {
 public:
  SylowPolynomial() = default;
  explicit SylowPolynomial(const SylowProfile& profile);

  /// Sorted by exponent, descending.
  const std::vector<SylowTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// "x^83 + ... + 5x^8 + x^7 + 6x^5 + 10x^3"; "0" for the trivial group.
  std::string str() const;
  /// Term-by-term integral over [0,1].
  Rational integral() const;

 private:
  std::vector<SylowTerm> terms_;
};

/// Direct-product rule: nu and sigma multiply prime by prime, absent primes count as (1,1).
SylowProfile merge_profiles(std::span<const SylowProfile> profiles);

SylowProfile profile_of(const GroupExpr& g);
SylowPolynomial sylow_polynomial(const GroupExpr& g);
Rational gamma(const GroupExpr& g);

}  // namespace sylow
