#include "sylow/compensation.hpp"

#include "sylow/errors.hpp"

namespace sylow {

namespace {

const Rational& nine_halves() {
  static const Rational v = rat(9, 2);
  return v;
}

}  // namespace

void NilpotentSpec::validate() const {
  for (const auto& [q, e] : new_parts) {
    if (q == 2 || q == 3 || q == 5) throw InvalidArgument("new prime " + std::to_string(q) + " is one of the A5 primes");
    if (!is_prime(q)) throw InvalidArgument(std::to_string(q) + " is not prime");
    if (e < 1) throw InvalidArgument("exponent of " + std::to_string(q) + " must be at least 1");
  }
}

GroupExpr to_group_expr(const NilpotentSpec& spec) {
  spec.validate();
  GroupExpr g;
  g.factors.push_back(BuiltinA5{});
  std::map<std::uint64_t, BigInt> orders;
  if (spec.a) orders[2] = pow(2, spec.a);
  if (spec.b) orders[3] = pow(3, spec.b);
  if (spec.c) orders[5] = pow(5, spec.c);
  for (const auto& [q, e] : spec.new_parts) orders[q] = pow(q, e);
  if (!orders.empty()) g.factors.push_back(NilpotentLayer{std::move(orders)});
  return g;
}

Rational defect(std::uint64_t p, const BigInt& d) {
  if (p != 2 && p != 3 && p != 5) throw InvalidArgument("defects are defined for p in {2,3,5}, got " + std::to_string(p));
  if (power_exponent(d, p) < 0) throw InvalidArgument(to_string(d) + " is not a power of " + std::to_string(p));
  switch (p) {
    case 2: return Rational(4 * (d - 1), 4 * d + 1);
    case 3: return Rational(15 * (d - 1), 2 * (3 * d + 1));
    default: return Rational(5 * (d - 1), 5 * d + 1);
  }
}

DefectReport gamma_a5_times(const NilpotentSpec& spec) {
  spec.validate();
  DefectReport r;
  r.d2 = defect(2, pow(2, spec.a));
  r.d3 = defect(3, pow(3, spec.b));
  r.d5 = defect(5, pow(5, spec.c));
  for (const auto& [q, e] : spec.new_parts) r.gain += unit_fraction(pow(q, e) + 1);
  r.gamma_value = Rational(BigInt(5), pow(2, spec.a + 2) + 1) + Rational(BigInt(10), pow(3, spec.b + 1) + 1) +
                  Rational(BigInt(6), pow(5, spec.c + 1) + 1) + r.gain;
  if (r.gamma_value != nine_halves() - r.d2 - r.d3 - r.d5 + r.gain) {
    throw CrossCheckFailure("defect decomposition disagrees with the closed formula");
  }
  r.balanced = r.gain == r.d2 + r.d3 + r.d5;
  return r;
}

ThresholdResult threshold_classify(const std::set<std::uint64_t>& primes) {
  Rational theta;
  for (auto q : primes) {
    if (q == 2 || q == 3 || q == 5) throw InvalidArgument("prime " + std::to_string(q) + " is not allowed in the threshold set");
    if (!is_prime(q)) throw InvalidArgument(std::to_string(q) + " is not prime");
    theta += unit_fraction(big(q) + 1);
  }
  ThresholdResult r;
  r.difference = theta - rat(4, 9);
  r.side = r.difference.sign() < 0 ? Threshold::Below : (r.difference.sign() > 0 ? Threshold::Above : Threshold::Equal);
  return r;
}

Perturbation one_sided_check(const NilpotentSpec& spec) {
  const bool old_part = spec.a || spec.b || spec.c;
  const bool new_part = !spec.new_parts.empty();
  if (!old_part && !new_part) return Perturbation::Trivial;
  if (old_part && new_part) return Perturbation::Mixed;
  const Rational g = gamma_a5_times(spec).gamma_value;
  if (old_part) {
    if (!(g < nine_halves())) throw CrossCheckFailure("old-prime perturbation did not lower gamma below 9/2");
    return Perturbation::OldOnlyBelow;
  }
  if (!(g > nine_halves())) throw CrossCheckFailure("new-prime perturbation did not raise gamma above 9/2");
  return Perturbation::NewOnlyAbove;
}

const char* to_string(Threshold t) {
  switch (t) {
    case Threshold::Below: return "Below";
    case Threshold::Equal: return "Equal";
    case Threshold::Above: return "Above";
  }
  return "?";
}

const char* to_string(Perturbation p) {
  switch (p) {
    case Perturbation::OldOnlyBelow: return "OldOnlyBelow";
    case Perturbation::NewOnlyAbove: return "NewOnlyAbove";
    case Perturbation::Mixed: return "Mixed";
    case Perturbation::Trivial: return "Trivial";
  }
  return "?";
}

}  // namespace sylow
