#include <doctest.h>

#include <omp.h>

#include <random>

#include "sylow/certify.hpp"
#include "sylow/errors.hpp"

using namespace sylow;

namespace {

using Parts = std::vector<std::pair<std::uint64_t, unsigned>>;

// Exhaustive enumeration over every subset of admissible primes and every exponent
// assignment, summing with exact rationals.
std::vector<Parts> brute_force(const Rational& target, const SearchBounds& b) {
  std::vector<std::uint64_t> q;
  for (auto p : primes_up_to(b.max_prime))
    if (!b.forbidden.contains(p)) q.push_back(p);
  REQUIRE(q.size() <= 14);
  std::vector<Parts> out;
  for (std::uint32_t mask = 0; mask < (1u << q.size()); ++mask) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (mask >> i & 1) chosen.push_back(q[i]);
    if (chosen.empty() || chosen.size() > b.max_parts) continue;
    std::vector<unsigned> e(chosen.size(), 1);
    while (true) {
      Rational s;
      for (std::size_t i = 0; i < chosen.size(); ++i) s += Rational(1, sylow::pow(chosen[i], e[i]) + 1);
      if (s == target) {
        Parts parts;
        for (std::size_t i = 0; i < chosen.size(); ++i) parts.emplace_back(chosen[i], e[i]);
        out.push_back(parts);
      }
      std::size_t i = 0;
      while (i < e.size() && e[i] == b.max_exponent) e[i++] = 1;
      if (i == e.size()) break;
      ++e[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Parts> flatten(const std::vector<Certificate>& cs) {
  std::vector<Parts> out;
  for (const auto& c : cs) {
    Parts parts;
    for (const auto& p : c.parts) parts.emplace_back(p.prime, p.exponent);
    out.push_back(parts);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> prime_sets(const std::vector<Certificate>& cs) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& c : cs) out.push_back(c.primes());
  return out;
}

SearchBounds bounds(std::uint64_t max_prime, unsigned max_parts, unsigned max_exponent = 1) {
  SearchBounds b;
  b.max_prime = max_prime;
  b.max_parts = max_parts;
  b.max_exponent = max_exponent;
  return b;
}

}  // namespace

TEST_CASE("small searches") {
  CHECK(prime_sets(search_certificates(rat(1, 8), bounds(7, 1))) == std::vector<std::vector<std::uint64_t>>{{7}});
  CHECK(flatten(search_certificates(rat(1, 9), bounds(47, 3))) == brute_force(rat(1, 9), bounds(47, 3)));

  const SearchBounds b = bounds(30, 4);
  const auto found = search_certificates(rat(4, 9), b);
  CHECK(flatten(found) == brute_force(rat(4, 9), b));
  CHECK(found.empty());
}

TEST_CASE("the known solutions for 4/9") {
  const std::vector<std::vector<std::uint64_t>> q1{{7, 11, 13, 17, 19, 29, 71, 83}};
  CHECK(prime_sets(search_certificates(rat(4, 9), bounds(83, 8))) == q1);
  const std::vector<std::vector<std::uint64_t>> all{
      {7, 11, 13, 17, 19, 23, 59, 1259},
      {7, 11, 13, 17, 19, 23, 83, 179},
      {7, 11, 13, 17, 19, 29, 41, 503},
      {7, 11, 13, 17, 19, 29, 71, 83},
  };
  const auto found = search_certificates(rat(4, 9), bounds(1259, 8));
  CHECK(prime_sets(found) == all);
  for (const auto& c : found) CHECK(verify_certificate(c).valid());
  CHECK(prime_sets(search_certificates(rat(4, 9), bounds(1258, 8))).size() == 3);
  CHECK(search_certificates(rat(4, 9), bounds(1259, 7)).empty());
}

TEST_CASE("search is sound and complete against exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  const std::uint64_t limits[] = {23, 31, 37, 43, 47};
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t max_prime = limits[trial % 5];
    const unsigned max_exponent = trial % 4 == 0 ? 2 : 1;
    const unsigned max_parts = 2 + trial % 5;
    SearchBounds b = bounds(max_prime, max_parts, max_exponent);
    if (max_exponent == 2) b.max_prime = 23;

    // Targets drawn as sums of random admissible parts, so most have solutions.
    auto primes = primes_up_to(b.max_prime);
    std::erase_if(primes, [&](auto p) { return b.forbidden.contains(p); });
    std::shuffle(primes.begin(), primes.end(), rng);
    Rational target;
    const unsigned k = 1 + rng() % max_parts;
    for (unsigned i = 0; i < k; ++i) target += Rational(1, sylow::pow(primes[i], 1 + rng() % max_exponent) + 1);
    if (trial % 7 == 3) target += rat(1, 1000);

    const auto expected = brute_force(target, b);
    CAPTURE(target.str());
    CHECK(flatten(search_certificates(target, b)) == expected);
    CHECK(flatten(search_certificates_reference(target, b)) == expected);
    if (trial % 7 != 3) CHECK_FALSE(expected.empty());
  }
}

TEST_CASE("wide-integer fallback path") {
  const SearchBounds b = bounds(13, 3, 20);
  for (const Rational& target : {rat(1, 8) + Rational(1, sylow::pow(11, 20) + 1),
                                 Rational(1, sylow::pow(7, 19) + 1) + Rational(1, sylow::pow(13, 20) + 1)}) {
    const auto found = search_certificates(target, b);
    CHECK(flatten(found) == brute_force(target, b));
    CHECK(found.size() == 1);
  }
}

TEST_CASE("parallel search matches the serial reference") {
  for (const Rational& target : {rat(4, 9), rat(1, 3), rat(1, 5), rat(3, 7)}) {
    const SearchBounds b = bounds(200, 6);
    CHECK(flatten(search_certificates(target, b)) == flatten(search_certificates_reference(target, b)));
  }
  const SearchBounds b = bounds(60, 4, 3);
  CHECK(flatten(search_certificates(rat(1, 4), b)) == flatten(search_certificates_reference(rat(1, 4), b)));
}

TEST_CASE("results do not depend on the thread count") {
  const SearchBounds b = bounds(3000, 9);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = flatten(search_certificates(rat(4, 9), b));
  omp_set_num_threads(4);
  const auto four = flatten(search_certificates(rat(4, 9), b));
  omp_set_num_threads(saved);
  const auto many = flatten(search_certificates(rat(4, 9), b));
  CHECK(one.size() == 53);
  CHECK(one == four);
  CHECK(one == many);
}

TEST_CASE("budget and argument errors") {
  SearchBounds b = bounds(100000, 11);
  b.node_budget = 1000;
  CHECK_THROWS_AS(search_certificates(rat(4, 9), b), Refusal);
  CHECK_THROWS_AS(search_certificates_reference(rat(4, 9), b), Refusal);
  CHECK_THROWS_AS(search_certificates(Rational(), bounds(100, 3)), InvalidArgument);
  CHECK_THROWS_AS(search_certificates(-rat(1, 8), bounds(100, 3)), InvalidArgument);
  CHECK_THROWS_AS(search_certificates(rat(1, 8), bounds(1'000'000'000, 3)), Refusal);
  CHECK_THROWS_AS(search_certificates(rat(1, 8), bounds(100, 0)), InvalidArgument);

  SearchStats stats;
  search_certificates(rat(4, 9), bounds(1300, 8), &stats);
  CHECK(stats.nodes > 0);
  CHECK(stats.nodes < 100000);
}
