#include "sylow/sylow_engine.hpp"

#include <algorithm>
#include <set>

#include "sylow/errors.hpp"

namespace sylow {

SylowProfile merge_profiles(std::span<const SylowProfile> profiles) {
  std::set<std::uint64_t> primes;
  for (const auto& prof : profiles) {
    for (const auto& [p, d] : prof.entries()) primes.insert(p);
  }
  SylowProfile merged;
  for (auto p : primes) {
    SylowDatum d{p, 1, 1};
    for (const auto& prof : profiles) {
      // A factor whose order is prime to p contributes the neutral (1, 1).
      if (!prof.contains(p)) continue;
      d.nu *= prof.at(p).nu;
      d.sigma *= prof.at(p).sigma;
    }
    merged.insert(d);
  }
  return merged;
}

SylowProfile profile_of(const GroupExpr& g) {
  std::vector<SylowProfile> parts;
  parts.reserve(g.factors.size());
  for (const auto& a : g.factors) parts.push_back(atom_profile(a));
  return merge_profiles(parts);
}

SylowPolynomial::SylowPolynomial(const SylowProfile& profile) {
  for (const auto& [p, d] : profile.entries()) terms_.push_back({p, d.nu, d.sigma});
  std::sort(terms_.begin(), terms_.end(), [](const SylowTerm& a, const SylowTerm& b) { return a.exponent > b.exponent; });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].exponent == terms_[i - 1].exponent) {
      throw CrossCheckFailure("primes " + std::to_string(terms_[i - 1].prime) + " and " + std::to_string(terms_[i].prime) +
                              " share the Sylow order " + to_string(terms_[i].exponent));
    }
  }
}

std::string SylowPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.coefficient != 1) out += to_string(t.coefficient);
    out += "x";
    if (t.exponent != 1) out += "^" + to_string(t.exponent);
  }
  return out;
}

Rational SylowPolynomial::integral() const {
  Rational total;
  for (const auto& t : terms_) total += Rational(t.coefficient, t.exponent + 1);
  return total;
}

SylowPolynomial sylow_polynomial(const GroupExpr& g) { return SylowPolynomial(profile_of(g)); }

Rational gamma(const GroupExpr& g) { return profile_of(g).gamma(); }

}  // namespace sylow
