#include "sylow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sylow/certify.hpp"
#include "sylow/compensation.hpp"
#include "sylow/errors.hpp"
#include "sylow/group_model.hpp"
#include "sylow/perm_oracle.hpp"
#include "sylow/serialize.hpp"
#include "sylow/sylow_engine.hpp"

namespace sylow::cli {

namespace {

enum class Format { Text, Json, Csv };

Format pick(bool json, bool csv) {
  if (json && csv) throw InvalidArgument("--json and --csv are mutually exclusive");
  return json ? Format::Json : (csv ? Format::Csv : Format::Text);
}

std::string join_parts(const Certificate& c, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(c.parts[i].prime);
    if (c.parts[i].exponent > 1) s += "^" + std::to_string(c.parts[i].exponent);
  }
  return s;
}

// "7,11,13^2" -> parts.
std::vector<PrimePower> parse_set(const std::string& text) {
  std::vector<PrimePower> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto caret = item.find('^');
    const BigInt q = parse_bigint(item.substr(0, caret));
    const BigInt e = caret == std::string::npos ? BigInt(1) : parse_bigint(item.substr(caret + 1));
    if (!fits_u64(q) || e < 1 || !e.fits_uint_p()) throw InvalidArgument("bad set entry '" + item + "'");
    parts.push_back(PrimePower{to_u64(q), static_cast<unsigned>(e.get_ui())});
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

void cmd_gamma(const std::string& expr, Format fmt, std::ostream& out) {
  const GroupExpr g = parse_group(expr);
  const SylowProfile prof = profile_of(g);
  const Rational total = gamma(g);
  if (SylowPolynomial(prof).integral() != total) throw CrossCheckFailure("polynomial integral disagrees with the profile sum");
  switch (fmt) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& [p, d] : prof.entries()) {
        rows.push_back({{"p", p}, {"nu", to_json(d.nu)}, {"sigma", to_json(d.sigma)}, {"term", d.gamma_term().str()}});
      }
      out << Json{{"expr", render(g)}, {"order", to_json(order_of(g))}, {"rows", rows}, {"gamma", total.str()}}.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "p,nu,sigma,term\n";
      for (const auto& [p, d] : prof.entries()) out << p << "," << to_string(d.nu) << "," << to_string(d.sigma) << "," << d.gamma_term().str() << "\n";
      out << "total,,," << total.str() << "\n";
      break;
    case Format::Text:
      out << std::left << std::setw(8) << "p" << std::setw(8) << "nu" << std::setw(10) << "sigma" << "nu/(sigma+1)\n";
      for (const auto& [p, d] : prof.entries()) {
        out << std::setw(8) << p << std::setw(8) << to_string(d.nu) << std::setw(10) << to_string(d.sigma) << d.gamma_term().pretty() << "\n";
      }
      out << "gamma = " << total.pretty() << "\n";
      break;
  }
}

void cmd_sylow(const std::string& expr, Format fmt, std::ostream& out) {
  const SylowPolynomial poly = sylow_polynomial(parse_group(expr));
  if (fmt == Format::Json) out << to_json(poly).dump() << "\n";
  else out << poly.str() << "\n";
}

void print_certificate(const Certificate& c, Format fmt, std::ostream& out) {
  const PartitionWitness w = verify_certificate(c);
  if (fmt == Format::Json) {
    out << to_json(c).dump() << "\n";
    return;
  }
  write_certificate(out, c);
  if (w.valid()) {
    out << "# valid: " << to_string(w.total) << "/" << to_string(w.common_denominator) << " = " << c.target.str() << "\n";
  } else {
    const Rational diff = Rational(w.total - w.target_numerator, w.common_denominator);
    out << "# invalid: total " << to_string(w.total) << " vs target " << to_string(w.target_numerator) << ", sum - target = " << diff.str() << "\n";
  }
}

void cmd_certify(const std::string& target, const std::string& set, const std::string& file, Format fmt, std::ostream& out) {
  Certificate c;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidArgument("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    c = read_certificate(buf.str());
  } else {
    c.target = Rational::parse(target);
    c.parts = parse_set(set);
  }
  print_certificate(c, fmt, out);
}

void cmd_search(const std::string& target_text, const SearchBounds& bounds, bool serial, Format fmt, std::ostream& out) {
  const Rational target = Rational::parse(target_text);
  SearchStats stats;
  const auto found = serial ? search_certificates_reference(target, bounds, &stats) : search_certificates(target, bounds, &stats);
  for (const auto& c : found) {
    if (!verify_certificate(c).valid()) throw CrossCheckFailure("search produced an invalid certificate {" + join_parts(c, ",") + "}");
  }
  switch (fmt) {
    case Format::Json: {
      Json certs = Json::array();
      for (const auto& c : found) certs.push_back(to_json(c));
      out << Json{{"target", target.str()},
                  {"bounds", {{"max_prime", bounds.max_prime}, {"max_parts", bounds.max_parts}, {"max_exponent", bounds.max_exponent}}},
                  {"count", found.size()},
                  {"certificates", certs}}
                 .dump()
          << "\n";
      break;
    }
    case Format::Csv:
      out << "index,parts\n";
      for (std::size_t i = 0; i < found.size(); ++i) out << i + 1 << "," << join_parts(found[i], " ") << "\n";
      break;
    case Format::Text:
      for (const auto& c : found) out << "{" << join_parts(c, ", ") << "}\n";
      out << "# " << found.size() << " certificate(s) for " << target.str() << ", " << stats.nodes << " nodes\n";
      break;
  }
}

void cmd_oracle(const std::string& expr, bool want_profile, bool want_center, bool want_solvable, Format fmt, std::ostream& out) {
  if (!want_profile && !want_center && !want_solvable) want_profile = want_center = want_solvable = true;
  const perm::GeneratorSet gens = realize_permutation(parse_group(expr));
  const perm::PermGroup g = perm::PermGroup::enumerate(gens.generators, gens.degree);
  Json j{{"degree", std::max(gens.degree, 1u)}, {"order", g.order()}};
  std::ostringstream text;
  text << "degree " << std::max(gens.degree, 1u) << "\norder " << g.order() << "\n";
  if (want_profile) {
    const auto reports = perm::sylow_reports(g);
    Json rows = Json::array();
    text << std::left << std::setw(8) << "p" << std::setw(8) << "nu" << std::setw(10) << "sigma" << "|N_G(P)|\n";
    for (const auto& r : reports) {
      rows.push_back({{"p", r.prime}, {"nu", r.nu_by_index}, {"sigma", r.sigma}, {"normalizer", r.normalizer_order}});
      text << std::setw(8) << r.prime << std::setw(8) << r.nu_by_index << std::setw(10) << r.sigma << r.normalizer_order << "\n";
    }
    j["profile"] = rows;
  }
  if (want_center) {
    const auto z = perm::center(g);
    j["center"] = z.order();
    text << "center " << z.order() << "\n";
  }
  if (want_solvable) {
    const auto series = perm::derived_series_orders(g);
    j["solvable"] = series.back() == 1;
    j["derived_series"] = series;
    text << "solvable " << (series.back() == 1 ? "true" : "false") << "\nderived series";
    for (auto n : series) text << " " << n;
    text << "\n";
  }
  if (fmt == Format::Json) out << j.dump() << "\n";
  else out << text.str();
}

void table_certificates(Format fmt, std::ostream& out) {
  if (fmt == Format::Csv) out << "i,Q,M,order,gamma\n";
  if (fmt == Format::Text) out << std::left << std::setw(4) << "i" << std::setw(34) << "Q" << std::setw(16) << "M(Q)" << std::setw(18) << "|G(Q)|" << "gamma\n";
  Json rows = Json::array();
  const auto& sets = known_certificate_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Certificate c = make_certificate(sets[i], rat(4, 9));
    const CertificateGroup cg = certificate_to_group(c);
    const Rational gm = gamma(cg.expr);
    if (order_of(cg.expr) != cg.order) throw CrossCheckFailure("|G(Q)| disagrees with the expression order");
    const std::string q = "{" + join_parts(c, ",") + "}";
    switch (fmt) {
      case Format::Json:
        rows.push_back({{"i", i + 1}, {"Q", c.primes()}, {"M", to_json(cg.prime_product)}, {"order", to_json(cg.order)}, {"gamma", gm.str()}});
        break;
      case Format::Csv:
        out << i + 1 << ",\"" << q << "\"," << to_string(cg.prime_product) << "," << to_string(cg.order) << "," << gm.str() << "\n";
        break;
      case Format::Text:
        out << std::setw(4) << i + 1 << std::setw(34) << q << std::setw(16) << to_string(cg.prime_product) << std::setw(18) << to_string(cg.order) << gm.pretty() << "\n";
        break;
    }
  }
  if (fmt == Format::Json) out << rows.dump() << "\n";
}

void table_defects(Format fmt, std::ostream& out) {
  if (fmt == Format::Csv) out << "p,d,defect\n";
  if (fmt == Format::Text) out << std::left << std::setw(4) << "p" << std::setw(4) << "d" << "D_p(d)\n";
  Json rows = Json::array();
  for (std::uint64_t p : {2, 3, 5}) {
    const Rational d = defect(p, big(p));
    switch (fmt) {
      case Format::Json: rows.push_back({{"p", p}, {"d", p}, {"defect", d.str()}}); break;
      case Format::Csv: out << p << "," << p << "," << d.str() << "\n"; break;
      case Format::Text: out << std::setw(4) << p << std::setw(4) << p << d.pretty() << "\n"; break;
    }
  }
  if (fmt == Format::Json) out << rows.dump() << "\n";
}

void table_special_cases(Format fmt, std::ostream& out) {
  struct Case {
    const char* label;
    const char* group;
    NilpotentSpec spec;
  };
  const Case cases[] = {
      {"a=b=c=0", "A5 x prod P_q", {0, 0, 0, {}}},
      {"a=1, b=c=0", "A5 x C2 x prod P_q", {1, 0, 0, {}}},
      {"a=0, b=1, c=0", "A5 x P3 x prod P_q", {0, 1, 0, {}}},
      {"a=0, b=0, c=1", "A5 x P5 x prod P_q", {0, 0, 1, {}}},
  };
  const Rational base = gamma_a5_times(NilpotentSpec{}).gamma_value;
  if (fmt == Format::Csv) out << "case,base,defect\n";
  Json rows = Json::array();
  for (const auto& cs : cases) {
    const DefectReport r = gamma_a5_times(cs.spec);
    const Rational loss = r.d2 + r.d3 + r.d5;
    if (r.gamma_value != base - loss) throw CrossCheckFailure("special case does not split as base minus defect");
    switch (fmt) {
      case Format::Json: rows.push_back({{"case", cs.label}, {"base", base.str()}, {"defect", loss.str()}}); break;
      case Format::Csv: out << "\"" << cs.label << "\"," << base.str() << "," << loss.str() << "\n"; break;
      case Format::Text:
        out << std::left << std::setw(15) << cs.label << ": gamma(" << cs.group << ") = " << base.pretty();
        if (!loss.is_zero()) out << " - " << loss.pretty();
        out << " + sum_q 1/(q^e_q+1)\n";
        break;
    }
  }
  if (fmt == Format::Json) out << rows.dump() << "\n";
}

void cmd_table(const std::string& which, Format fmt, std::ostream& out) {
  if (which == "certificates") table_certificates(fmt, out);
  else if (which == "defects") table_defects(fmt, out);
  else if (which == "special-cases") table_special_cases(fmt, out);
  else throw InvalidArgument("unknown table '" + which + "' (certificates, defects, special-cases)");
}

}  // namespace

const std::vector<std::vector<std::uint64_t>>& known_certificate_sets() {
  static const std::vector<std::vector<std::uint64_t>> sets{
      {7, 11, 13, 17, 19, 29, 71, 83},
      {7, 11, 13, 17, 19, 23, 83, 179},
      {7, 11, 13, 17, 19, 29, 41, 503},
      {7, 11, 13, 17, 19, 23, 59, 1259},
  };
  return sets;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Sylow-polynomial invariants, compensation certificates and a permutation-group oracle", "sylowtool"};
  app.require_subcommand(1);

  bool json = false, csv = false;
  std::string expr, target = "4/9", set, file, which;
  SearchBounds bounds;
  bool serial = false;
  bool want_profile = false, want_center = false, want_solvable = false;

  auto* gamma_cmd = app.add_subcommand("gamma", "gamma(G) with the per-prime breakdown");
  gamma_cmd->add_option("expr", expr, "group expression, e.g. \"A5 * C2 * C7\"")->required();
  gamma_cmd->add_flag("--json", json);
  gamma_cmd->add_flag("--csv", csv);

  auto* sylow_cmd = app.add_subcommand("sylow", "the Sylow polynomial SP(G,x)");
  sylow_cmd->add_option("expr", expr)->required();
  sylow_cmd->add_flag("--json", json);

  auto* certify_cmd = app.add_subcommand("certify", "verify sum 1/(q^e+1) = target over a common denominator");
  certify_cmd->add_option("--target", target, "target rational n/d")->capture_default_str();
  auto* set_opt = certify_cmd->add_option("--set", set, "comma-separated q or q^e entries");
  auto* file_opt = certify_cmd->add_option("--file", file, "certificate file to re-check");
  set_opt->excludes(file_opt);
  certify_cmd->add_flag("--json", json);

  auto* search_cmd = app.add_subcommand("search", "exhaustive certificate search within bounds");
  search_cmd->add_option("--target", target)->capture_default_str();
  search_cmd->add_option("--max-prime", bounds.max_prime)->required();
  search_cmd->add_option("--max-parts", bounds.max_parts)->required();
  search_cmd->add_option("--max-exponent", bounds.max_exponent)->capture_default_str();
  search_cmd->add_option("--node-budget", bounds.node_budget)->capture_default_str();
  search_cmd->add_flag("--serial", serial, "use the serial reference search");
  search_cmd->add_flag("--json", json);
  search_cmd->add_flag("--csv", csv);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force permutation group analysis");
  oracle_cmd->add_option("expr", expr, "e.g. \"P[(1 2 3 4 5);(1 2 3)]\" or \"A5 * C2\"")->required();
  oracle_cmd->add_flag("--profile", want_profile);
  oracle_cmd->add_flag("--center", want_center);
  oracle_cmd->add_flag("--solvable", want_solvable);
  oracle_cmd->add_flag("--json", json);

  auto* table_cmd = app.add_subcommand("table", "reproduce a reference table");
  table_cmd->add_option("which", which, "certificates | defects | special-cases")->required();
  table_cmd->add_flag("--json", json);
  table_cmd->add_flag("--csv", csv);

  std::vector<const char*> argv{"sylowtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = pick(json, csv);
    if (gamma_cmd->parsed()) cmd_gamma(expr, fmt, out);
    else if (sylow_cmd->parsed()) cmd_sylow(expr, fmt, out);
    else if (certify_cmd->parsed()) {
      if (set.empty() && file.empty()) throw InvalidArgument("certify needs --set or --file");
      cmd_certify(target, set, file, fmt, out);
    } else if (search_cmd->parsed()) cmd_search(target, bounds, serial, fmt, out);
    else if (oracle_cmd->parsed()) cmd_oracle(expr, want_profile, want_center, want_solvable, fmt, out);
    else if (table_cmd->parsed()) cmd_table(which, fmt, out);
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace sylow::cli
