#pragma once

// Brute-force permutation group engine on at most 16 points. Every group is
// fully enumerated, so it serves as an oracle independent of the closed-form
// Sylow calculus used elsewhere.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sylow/profile.hpp"

namespace sylow::perm {

inline constexpr unsigned kMaxDegree = 16;
inline constexpr std::size_t kDefaultElementCap = 100000;

/// Bijection of {0..15}; points past the group's degree are fixed.
class Permutation {
 public:
  Permutation();

  // Throws InvalidArgument unless images is a bijection of {0..n-1}, n <= 16.
  static Permutation from_images(std::span<const std::uint8_t> images);

  std::uint8_t operator()(std::uint8_t x) const { return img_[x]; }
  /// (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const { return key() == Permutation().key(); }

  /// Four bits per point; unique per permutation.
  std::uint64_t key() const;

  /// Cycle notation on 1-based points, "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

 private:
  std::array<std::uint8_t, kMaxDegree> img_;
};

struct GeneratorSet {
  std::vector<Permutation> generators;
  unsigned degree = 1;
};

/// Parses "(1 2 3)(4 5)" as a single permutation; returns it and the largest point seen.
std::pair<Permutation, unsigned> parse_cycles(std::string_view text);
/// Parses ";"-separated permutations, e.g. "(1 2 3 4 5);(1 2 3)".
GeneratorSet parse_generators(std::string_view text);

/// Subgroup of an enumerated group, stored as sorted element indices of the parent.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<std::size_t> sorted_indices) : elems_(std::move(sorted_indices)) {}

  std::size_t order() const { return elems_.size(); }
  const std::vector<std::size_t>& elements() const { return elems_; }
  bool contains(std::size_t idx) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<std::size_t> elems_;
};

class PermGroup {
 public:
  /// Breadth-first closure of the generators. Index 0 is the identity.
  /// Throws Refusal when the closure would exceed element_cap.
  static PermGroup enumerate(std::vector<Permutation> generators, unsigned degree,
                             std::size_t element_cap = kDefaultElementCap);

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conj(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv(g)); }
  std::size_t element_order(std::size_t a) const;

  Subgroup whole() const;
  Subgroup trivial() const { return Subgroup({0}); }
  /// Smallest subgroup containing the given elements.
  Subgroup closure(std::span<const std::size_t> gens) const;
  /// A small generating set found greedily.
  std::vector<std::size_t> generating_set(const Subgroup& h) const;
  bool is_subgroup(const Subgroup& h) const;

 private:
  unsigned degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Sylow p-subgroup grown one p-element of the normalizer at a time.
/// Throws InvalidArgument if p does not divide |G|.
Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

/// {x in G : x H x^-1 = H}. Throws InvalidArgument if H is not a subgroup of G.
Subgroup normalizer(const PermGroup& g, const Subgroup& h);

Subgroup conjugate(const PermGroup& g, std::size_t x, const Subgroup& h);

/// Distinct conjugates of H in G.
std::size_t count_conjugates(const PermGroup& g, const Subgroup& h);

struct SylowReport {
  std::uint64_t prime = 2;
  std::size_t sigma = 1;
  std::size_t normalizer_order = 1;
  std::size_t nu_by_index = 1;
  std::size_t nu_by_conjugates = 1;
};

/// Per-prime Sylow data with both counts of nu; throws CrossCheckFailure if they disagree.
std::vector<SylowReport> sylow_reports(const PermGroup& g);
SylowProfile sylow_profile_bruteforce(const PermGroup& g);

Subgroup center(const PermGroup& g);
Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& h);
/// Orders along G >= G' >= G'' >= ... until it stabilizes.
std::vector<std::size_t> derived_series_orders(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// Direct product acting on disjoint point sets: b's points are shifted past a's.
GeneratorSet direct_product(const GeneratorSet& a, const GeneratorSet& b);

}  // namespace sylow::perm
