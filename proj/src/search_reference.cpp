#include "search_common.hpp"

namespace sylow {

namespace {

class ReferenceSearch {
 public:
  ReferenceSearch(const Rational& target, const SearchBounds& bounds)
      : target_(target), bounds_(bounds), primes_(detail::admissible_primes(bounds)) {}

  std::vector<Certificate> run() {
    dfs(target_, 0, bounds_.max_parts);
    detail::sort_canonical(found_);
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(const Rational& remaining, std::size_t start, unsigned parts_left) {
    if (++nodes_ > bounds_.node_budget) throw detail::budget_refusal(bounds_, nodes_);
    if (remaining.is_zero()) {
      found_.push_back(detail::to_certificate(chosen_, target_, bounds_));
      return;
    }
    for (std::size_t i = start; i < primes_.size(); ++i) {
      const std::uint64_t q = primes_[i];
      // The bound only weakens as q grows, so the first prune ends the scan.
      if (residual_bounds(remaining, q, parts_left, bounds_.forbidden) == Residual::Prune) break;
      for (unsigned e = 1; e <= bounds_.max_exponent; ++e) {
        const Rational term = unit_fraction(pow(q, e) + 1);
        if (term > remaining) continue;
        chosen_.push_back(PrimePower{q, e});
        dfs(remaining - term, i + 1, parts_left - 1);
        chosen_.pop_back();
      }
    }
  }

  Rational target_;
  SearchBounds bounds_;
  std::vector<std::uint64_t> primes_;
  std::vector<PrimePower> chosen_;
  std::vector<Certificate> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<Certificate> search_certificates_reference(const Rational& target, const SearchBounds& bounds, SearchStats* stats) {
  detail::check_search_args(target, bounds);
  ReferenceSearch search(target, bounds);
  auto out = search.run();
  if (stats) stats->nodes = search.nodes();
  return out;
}

}  // namespace sylow
