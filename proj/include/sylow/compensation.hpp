#pragma once

// Closed-form calculus for A5 x N with N nilpotent. Deliberately independent of
// the generic Sylow engine so the two can be checked against each other.

#include <cstdint>
#include <map>
#include <set>

#include "sylow/group_model.hpp"
#include "sylow/numerics.hpp"

namespace sylow {

/// N = P2 x P3 x P5 x prod_q Pq with |P2| = 2^a, |P3| = 3^b, |P5| = 5^c, |Pq| = q^e_q.
struct NilpotentSpec {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  std::map<std::uint64_t, unsigned> new_parts;  // prime q not in {2,3,5} -> e_q >= 1

  // Throws InvalidArgument on a non-prime key, a key in {2,3,5} or a zero exponent.
  void validate() const;
  bool trivial() const { return a == 0 && b == 0 && c == 0 && new_parts.empty(); }

  friend bool operator==(const NilpotentSpec&, const NilpotentSpec&) = default;
};

/// A5 * N{...} for a NilpotentSpec, for evaluation by the generic engine.
GroupExpr to_group_expr(const NilpotentSpec& spec);

struct DefectReport {
  Rational d2, d3, d5;
  Rational gain;  // sum of 1/(q^e + 1) over the new primes
  Rational gamma_value;
  bool balanced = false;

  friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

/// Loss in the A5 p-term when the nilpotent Sylow p-order is d:
/// D2(d) = 4(d-1)/(4d+1), D3(d) = 15(d-1)/(2(3d+1)), D5(d) = 5(d-1)/(5d+1).
/// Throws InvalidArgument for p outside {2,3,5} or d not a power of p.
Rational defect(std::uint64_t p, const BigInt& d);

/// gamma(A5 x N) from 5/(2^(a+2)+1) + 10/(3^(b+1)+1) + 6/(5^(c+1)+1) + gain.
DefectReport gamma_a5_times(const NilpotentSpec& spec);

enum class Threshold { Below, Equal, Above };

struct ThresholdResult {
  Threshold side = Threshold::Equal;
  Rational difference;  // Theta(Q) - 4/9
};

/// Position of Theta(Q) = sum 1/(q+1) against the minimal defect 4/9.
ThresholdResult threshold_classify(const std::set<std::uint64_t>& primes);

enum class Perturbation { OldOnlyBelow, NewOnlyAbove, Mixed, Trivial };

/// Which side of A5 the perturbation touches. Throws CrossCheckFailure if a
/// one-sided perturbation fails to move gamma in the forced direction.
Perturbation one_sided_check(const NilpotentSpec& spec);

const char* to_string(Threshold t);
const char* to_string(Perturbation p);

}  // namespace sylow
