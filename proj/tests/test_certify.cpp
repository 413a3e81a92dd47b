#include <doctest.h>

#include <random>
#include <set>

#include "sylow/certify.hpp"
#include "sylow/cli.hpp"
#include "sylow/errors.hpp"
#include "sylow/serialize.hpp"
#include "sylow/sylow_engine.hpp"

using namespace sylow;

namespace {

const std::vector<std::uint64_t> kQ0{7, 11, 13, 17, 19, 29, 71, 83};
const std::vector<std::uint64_t> kQ4{7, 11, 13, 17, 19, 23, 59, 1259};

std::vector<BigInt> bigs(std::initializer_list<unsigned long> xs) {
  std::vector<BigInt> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("verify_certificate examples") {
  const PartitionWitness w = verify_certificate(make_certificate(kQ0, rat(4, 9)));
  CHECK(w.common_denominator == 2520);
  CHECK(w.numerators == bigs({315, 210, 180, 140, 126, 84, 35, 30}));
  CHECK(w.total == 1120);
  CHECK(w.target_numerator == 1120);
  CHECK(w.valid());

  const PartitionWitness w4 = verify_certificate(make_certificate(kQ4, rat(4, 9)));
  CHECK(w4.common_denominator == 2520);
  CHECK(w4.numerators == bigs({315, 210, 180, 140, 126, 105, 42, 2}));
  CHECK(w4.total == 1120);
  CHECK(w4.valid());

  Certificate empty;
  empty.target = Rational();
  CHECK(verify_certificate(empty).valid());

  auto minus83 = kQ0;
  minus83.pop_back();
  const Certificate short_cert = make_certificate(minus83, rat(4, 9));
  const PartitionWitness bad = verify_certificate(short_cert);
  CHECK_FALSE(bad.valid());
  CHECK(bad.total == 1090);
  CHECK(bad.target_numerator == 1120);
  CHECK(short_cert.sum() - rat(4, 9) == -rat(1, 84));
  CHECK(Rational(bad.target_numerator - bad.total, bad.common_denominator) == rat(30, 2520));
}

TEST_CASE("partitions of the four known certificates") {
  const std::vector<std::vector<BigInt>> expected{
      bigs({315, 210, 180, 140, 126, 84, 35, 30}),
      bigs({315, 210, 180, 140, 126, 105, 30, 14}),
      bigs({315, 210, 180, 140, 126, 84, 60, 5}),
      bigs({315, 210, 180, 140, 126, 105, 42, 2}),
  };
  const auto& sets = cli::known_certificate_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const PartitionWitness w = verify_certificate(make_certificate(sets[i], rat(4, 9)));
    CHECK(w.common_denominator == 2520);
    CHECK(w.numerators == expected[i]);
    CHECK(w.total == 1120);
  }
}

TEST_CASE("certificate invariants are enforced") {
  Certificate c;
  c.target = rat(1, 8);
  c.parts = {PrimePower{9, 1}};
  CHECK_THROWS_AS(verify_certificate(c), InvalidArgument);
  c.parts = {PrimePower{5, 1}};
  CHECK_THROWS_AS(verify_certificate(c), InvalidArgument);
  c.parts = {PrimePower{11, 1}, PrimePower{7, 1}};
  CHECK_THROWS_AS(verify_certificate(c), InvalidArgument);
  c.parts = {PrimePower{7, 1}, PrimePower{7, 2}};
  CHECK_THROWS_AS(verify_certificate(c), InvalidArgument);
  try {
    make_certificate({7, 11, 15}, rat(4, 9));
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("part 3") != std::string::npos);
  }
}

TEST_CASE("verification agrees with rational summation") {
  std::mt19937_64 rng(8);
  const auto primes = primes_up_to(400);
  std::uniform_int_distribution<std::size_t> pick(3, primes.size() - 1);
  std::uniform_int_distribution<unsigned> ex(1, 3), len(0, 7), coin(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::uint64_t> chosen;
    const unsigned n = len(rng);
    while (chosen.size() < n) chosen.insert(primes[pick(rng)]);
    Certificate c;
    for (auto q : chosen) c.parts.push_back(PrimePower{q, ex(rng)});
    c.target = c.sum();
    if (coin(rng)) c.target = c.target + rat(1, 1000);
    const PartitionWitness w = verify_certificate(c);
    CHECK(w.valid() == (c.sum() == c.target));
    CHECK(Rational(w.total, w.common_denominator) == c.sum());
  }
}

TEST_CASE("certificate text format") {
  const Certificate c = make_certificate(kQ0, rat(4, 9));
  const std::string text = certificate_text(c);
  CHECK(text ==
        "target 4/9\n7 1 315\n11 1 210\n13 1 180\n17 1 140\n19 1 126\n29 1 84\n71 1 35\n83 1 30\n"
        "denominator 2520\ntotal 1120\n");
  CHECK(read_certificate(text) == c);
  CHECK(read_certificate("# comment\n" + text + "# valid\n") == c);

  std::string tampered = text;
  tampered.replace(tampered.find("total 1120"), 10, "total 1121");
  CHECK_THROWS_AS(read_certificate(tampered), CrossCheckFailure);
  CHECK_THROWS_AS(read_certificate("target 4/9\n7 1\n"), ParseError);
  CHECK_THROWS_AS(read_certificate("7 1 315\n"), ParseError);
  CHECK_THROWS_AS(read_certificate("target 4/9\n"), ParseError);

  Certificate squares;
  squares.target = rat(1, 10) + rat(1, 170);
  squares.parts = {PrimePower{3, 2}, PrimePower{13, 2}};
  squares.forbidden = {2};
  CHECK(verify_certificate(squares).valid());
}

TEST_CASE("certificate JSON round trip") {
  const Certificate c = make_certificate(kQ4, rat(4, 9));
  const Json j = to_json(c);
  CHECK(j["denominator"] == 2520);
  CHECK(j["total"] == 1120);
  CHECK(j["valid"] == true);
  CHECK(certificate_from_json(Json::parse(j.dump())) == c);
  Json bad = j;
  bad["parts"][0]["numerator"] = 316;
  CHECK_THROWS_AS(certificate_from_json(bad), CrossCheckFailure);
}

TEST_CASE("residual_bounds") {
  CHECK(residual_bounds(Rational(), 7, 0) == Residual::Feasible);
  const std::vector<Rational> three{rat(1, 8), rat(1, 12), rat(1, 14)};
  CHECK(rat_sum(three) == rat(47, 168));
  CHECK(rat_sum(three) < rat(1, 2));
  CHECK(residual_bounds(rat(1, 2), 7, 3) == Residual::Prune);
  CHECK(residual_bounds(rat(1, 84), 83, 1) == Residual::Feasible);
  CHECK(residual_bounds(-rat(1, 84), 7, 3) == Residual::Prune);
  CHECK(residual_bounds(rat(1, 84), 7, 0) == Residual::Prune);
  CHECK(residual_bounds(rat(1, 84), 84, 1) == Residual::Prune);  // next admissible is 89
  CHECK(residual_bounds(rat(4, 9), 7, 8) == Residual::Feasible);
}

TEST_CASE("certificate_to_group") {
  const auto& sets = cli::known_certificate_sets();
  const char* m[] = {"55254930731", "110483025653", "193368816641", "552385382549"};
  const char* order[] = {"6630591687720", "13257963078360", "23204257996920", "66286245905880"};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const CertificateGroup g = certificate_to_group(make_certificate(sets[i], rat(4, 9)));
    CHECK(g.prime_product == BigInt(m[i], 10));
    CHECK(g.order == BigInt(order[i], 10));
    CHECK(g.order == 120 * g.prime_product);
    CHECK(order_of(g.expr) == g.order);
    CHECK(gamma(g.expr) == rat(9, 2));
  }
  auto minus83 = kQ0;
  minus83.pop_back();
  CHECK_THROWS_AS(certificate_to_group(make_certificate(minus83, rat(4, 9))), InvalidArgument);
  CHECK_THROWS_AS(certificate_to_group(make_certificate({7}, rat(1, 8))), InvalidArgument);
  Certificate squared;
  squared.target = rat(4, 9);
  squared.parts = {PrimePower{7, 2}};
  CHECK_THROWS_AS(certificate_to_group(squared), InvalidArgument);
}
