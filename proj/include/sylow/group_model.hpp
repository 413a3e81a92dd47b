#pragma once

// Group atoms, direct-product expressions and their text grammar:
//
//   expr    := "1" | atom ("*" atom)*
//   atom    := "A5" | cyclic | layer | perm
//   cyclic  := "C" integer ["^" integer]            C7, C2^3, C9 (prime powers only)
//   layer   := "N{" p ":" order ("," p ":" order)* "}"
//   perm    := "P[" cycles (";" cycles)* "]"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sylow/numerics.hpp"
#include "sylow/perm_oracle.hpp"
#include "sylow/profile.hpp"

namespace sylow {

struct BuiltinA5 {
  friend bool operator==(const BuiltinA5&, const BuiltinA5&) = default;
};

struct Cyclic {
  PrimePower order;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

/// Nilpotent group given by the orders of its Sylow subgroups only.
struct NilpotentLayer {
  std::map<std::uint64_t, BigInt> sylow_orders;
  friend bool operator==(const NilpotentLayer&, const NilpotentLayer&) = default;
};

/// Permutation group given by generators; enumerated lazily and cached.
struct PermAtom {
  perm::GeneratorSet gens;
  friend bool operator==(const PermAtom& a, const PermAtom& b) {
    return a.gens.degree == b.gens.degree && a.gens.generators == b.gens.generators;
  }
};

using GroupAtom = std::variant<BuiltinA5, Cyclic, NilpotentLayer, PermAtom>;

struct GroupExpr {
  std::vector<GroupAtom> factors;  // empty: trivial group
  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

// Throws InvalidArgument unless every key is prime and every order a proper power of its key.
NilpotentLayer make_layer(std::map<std::uint64_t, BigInt> sylow_orders);

/// Throws ParseError (with position) on malformed text or a non-prime-power cyclic order.
GroupExpr parse_group(std::string_view text);
/// Canonical text form; parse_group(render(g)) == g.
std::string render(const GroupExpr& g);
std::string render(const GroupAtom& a);

/// Enumerated group for a permutation atom; results are cached process-wide.
std::shared_ptr<const perm::PermGroup> resolve(const PermAtom& a);

SylowProfile atom_profile(const GroupAtom& a);
BigInt atom_order(const GroupAtom& a);
BigInt order_of(const GroupExpr& g);

/// Concrete permutation realization on disjoint points; layers become cyclic groups
/// of the same Sylow orders. Throws Refusal beyond 16 points.
perm::GeneratorSet realize_permutation(const GroupExpr& g);

/// Standard generators of A5 on 5 points: (1 2 3 4 5), (1 2 3).
perm::GeneratorSet a5_generators();

}  // namespace sylow
