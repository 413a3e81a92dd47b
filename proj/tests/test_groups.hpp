#pragma once

// Small permutation groups and a Sylow-count oracle that does not use the
// normalizer growth algorithm: every Sylow subgroup of these groups is generated
// by at most two p-elements, so closing all pairs finds all of them.

#include <set>
#include <string>
#include <vector>

#include "sylow/perm_oracle.hpp"

namespace testing_groups {

struct Named {
  std::string name;
  std::string gens;
};

inline const std::vector<Named>& corpus() {
  static const std::vector<Named> c{
      {"A5", "(1 2 3 4 5);(1 2 3)"},
      {"S4", "(1 2);(1 2 3 4)"},
      {"A4", "(1 2 3);(1 2)(3 4)"},
      {"D8", "(1 2 3 4);(1 3)"},
      {"S3", "(1 2 3);(1 2)"},
      {"C2", "(1 2)"},
      {"C3", "(1 2 3)"},
      {"C4", "(1 2 3 4)"},
      {"C5", "(1 2 3 4 5)"},
      {"C6", "(1 2 3 4 5 6)"},
      {"C7", "(1 2 3 4 5 6 7)"},
  };
  return c;
}

inline sylow::perm::PermGroup build(const std::string& gens) {
  auto g = sylow::perm::parse_generators(gens);
  return sylow::perm::PermGroup::enumerate(g.generators, g.degree);
}

inline std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// Number of subgroups of order p_part(|G|, p) generated by one or two p-elements.
inline std::size_t count_sylow_by_pairs(const sylow::perm::PermGroup& g, std::size_t p) {
  const std::size_t target = p_part(g.order(), p);
  std::vector<std::size_t> pelems;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (p_part(g.element_order(x), p) == g.element_order(x)) pelems.push_back(x);
  }
  std::set<std::vector<std::size_t>> found;
  for (std::size_t i = 0; i < pelems.size(); ++i) {
    for (std::size_t j = i; j < pelems.size(); ++j) {
      const std::vector<std::size_t> gens{pelems[i], pelems[j]};
      auto h = g.closure(gens);
      if (h.order() == target) found.insert(h.elements());
    }
  }
  return found.size();
}

}  // namespace testing_groups
