#pragma once

#include <algorithm>
#include <vector>

#include "sylow/certify.hpp"
#include "sylow/errors.hpp"

namespace sylow::detail {

inline std::vector<std::uint64_t> admissible_primes(const SearchBounds& bounds) {
  std::vector<std::uint64_t> out;
  for (auto q : primes_up_to(bounds.max_prime)) {
    if (!bounds.forbidden.contains(q)) out.push_back(q);
  }
  return out;
}

inline void check_search_args(const Rational& target, const SearchBounds& bounds) {
  bounds.validate();
  if (target.sign() <= 0) throw InvalidArgument("search target must be positive, got " + target.str());
}

inline Certificate to_certificate(const std::vector<PrimePower>& parts, const Rational& target, const SearchBounds& bounds) {
  Certificate c;
  c.parts = parts;
  c.target = target;
  c.forbidden = bounds.forbidden;
  return c;
}

inline void sort_canonical(std::vector<Certificate>& out) {
  std::sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) { return a.parts < b.parts; });
}

inline Refusal budget_refusal(const SearchBounds& bounds, std::uint64_t nodes) {
  return Refusal("node budget of " + std::to_string(bounds.node_budget) + " exhausted after " + std::to_string(nodes) +
                 " nodes; tighten max_prime/max_parts or raise --node-budget");
}

}  // namespace sylow::detail
