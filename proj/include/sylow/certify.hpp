#pragma once

// Egyptian-fraction compensation certificates: exact verification over a common
// denominator, and exhaustive branch-and-bound search within explicit bounds.

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/group_model.hpp"
#include "sylow/numerics.hpp"

namespace sylow {

inline const std::set<std::uint64_t>& default_forbidden() {
  static const std::set<std::uint64_t> f{2, 3, 5};
  return f;
}

/// Prime powers q^e with strictly increasing primes, claimed to satisfy
/// sum 1/(q^e + 1) = target.
struct Certificate {
  std::vector<PrimePower> parts;
  Rational target;
  std::set<std::uint64_t> forbidden = default_forbidden();

  // Throws InvalidArgument naming the offending part.
  void validate() const;
  Rational sum() const;
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.parts == b.parts && a.target == b.target;
  }
};

Certificate make_certificate(const std::vector<std::uint64_t>& primes, const Rational& target);

/// The identity multiplied through by D = lcm of every q^e + 1 and the target denominator.
struct PartitionWitness {
  BigInt common_denominator = 1;
  std::vector<BigInt> numerators;  // D / (q^e + 1), in part order
  BigInt total = 0;
  BigInt target_numerator = 0;     // target * D
  bool valid() const { return total == target_numerator; }
};

PartitionWitness verify_certificate(const Certificate& c);

/// Line-oriented text form: "target n/d", one "q e numerator" line per part,
/// then "denominator D" and "total T".
void write_certificate(std::ostream& os, const Certificate& c);
std::string certificate_text(const Certificate& c);
/// Parses the text form and re-checks the recorded numerators, denominator and
/// total against a fresh verification; throws ParseError / CrossCheckFailure.
Certificate read_certificate(std::string_view text);

struct SearchBounds {
  std::uint64_t max_prime = 100;
  unsigned max_parts = 8;
  unsigned max_exponent = 1;
  std::set<std::uint64_t> forbidden = default_forbidden();
  std::uint64_t node_budget = 100'000'000;

  void validate() const;
};

enum class Residual { Feasible, Prune };

/// Sound pruning test for a subtree that may still add up to parts_remaining parts,
/// all with primes >= next_prime: prunes when the remaining target is negative, when
/// parts are exhausted with a positive remainder, or when even the largest
/// parts_remaining admissible unit fractions 1/(q+1), q >= next_prime, fall short.
Residual residual_bounds(const Rational& target_remaining, std::uint64_t next_prime, unsigned parts_remaining,
                         const std::set<std::uint64_t>& forbidden = default_forbidden());

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Every certificate within bounds whose sum equals target, sorted lexicographically by
/// (prime, exponent) sequence. OpenMP-parallel over the first branching level.
/// Throws InvalidArgument for target <= 0 and Refusal once the node budget is exhausted.
std::vector<Certificate> search_certificates(const Rational& target, const SearchBounds& bounds,
                                             SearchStats* stats = nullptr);

/// Serial rational-arithmetic reference for search_certificates, driven by residual_bounds.
std::vector<Certificate> search_certificates_reference(const Rational& target, const SearchBounds& bounds,
                                                       SearchStats* stats = nullptr);

struct CertificateGroup {
  GroupExpr expr;     // A5 * C2 * prod C_q
  BigInt prime_product;  // M(Q)
  BigInt order;          // 120 M(Q)
};

/// Throws InvalidArgument unless c is a valid squarefree certificate for 4/9.
CertificateGroup certificate_to_group(const Certificate& c);

}  // namespace sylow
