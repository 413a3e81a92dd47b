#include "sylow/serialize.hpp"

#include "sylow/errors.hpp"

namespace sylow {

Json to_json(const BigInt& v) {
  if (fits_u64(v)) return Json(static_cast<std::uint64_t>(v.get_ui()));
  return Json(to_string(v));
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return big(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidArgument("expected an integer in JSON, got " + j.dump());
}

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected an \"n/d\" string in JSON, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json to_json(const SylowProfile& p) {
  Json out = Json::array();
  for (const auto& [prime, d] : p.entries()) out.push_back({{"p", prime}, {"nu", to_json(d.nu)}, {"sigma", to_json(d.sigma)}});
  return out;
}

SylowProfile profile_from_json(const Json& j) {
  SylowProfile p;
  for (const auto& e : j) p.insert({e.at("p").get<std::uint64_t>(), bigint_from_json(e.at("nu")), bigint_from_json(e.at("sigma"))});
  return p;
}

Json to_json(const SylowPolynomial& poly) {
  Json out = Json::array();
  for (const auto& t : poly.terms()) out.push_back({{"prime", t.prime}, {"nu", to_json(t.coefficient)}, {"sigma", to_json(t.exponent)}});
  return out;
}

Json to_json(const DefectReport& r) {
  return {{"d2", r.d2.str()}, {"d3", r.d3.str()}, {"d5", r.d5.str()}, {"gain", r.gain.str()}, {"gamma", r.gamma_value.str()}, {"balanced", r.balanced}};
}

DefectReport report_from_json(const Json& j) {
  DefectReport r;
  r.d2 = rational_from_json(j.at("d2"));
  r.d3 = rational_from_json(j.at("d3"));
  r.d5 = rational_from_json(j.at("d5"));
  r.gain = rational_from_json(j.at("gain"));
  r.gamma_value = rational_from_json(j.at("gamma"));
  r.balanced = j.at("balanced").get<bool>();
  return r;
}

Json to_json(const Certificate& c) {
  const PartitionWitness w = verify_certificate(c);
  Json parts = Json::array();
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    parts.push_back({{"q", c.parts[i].prime}, {"e", c.parts[i].exponent}, {"numerator", to_json(w.numerators[i])}});
  }
  return {{"target", c.target.str()},
          {"parts", parts},
          {"denominator", to_json(w.common_denominator)},
          {"total", to_json(w.total)},
          {"target_numerator", to_json(w.target_numerator)},
          {"valid", w.valid()}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.target = rational_from_json(j.at("target"));
  std::vector<BigInt> recorded;
  for (const auto& p : j.at("parts")) {
    c.parts.push_back(PrimePower{p.at("q").get<std::uint64_t>(), p.at("e").get<unsigned>()});
    if (p.contains("numerator")) recorded.push_back(bigint_from_json(p.at("numerator")));
  }
  const PartitionWitness w = verify_certificate(c);
  const bool numerators_ok = recorded.empty() || recorded == w.numerators;
  const bool denominator_ok = !j.contains("denominator") || bigint_from_json(j.at("denominator")) == w.common_denominator;
  const bool total_ok = !j.contains("total") || bigint_from_json(j.at("total")) == w.total;
  if (!numerators_ok || !denominator_ok || !total_ok) throw CrossCheckFailure("recorded witness does not match the recomputed partition");
  return c;
}

}  // namespace sylow
