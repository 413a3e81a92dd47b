#include "sylow/perm_oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "sylow/errors.hpp"

namespace sylow::perm {

namespace {

bool is_power_of(std::size_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, std::uint64_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  unsigned number() {
    skip_ws();
    std::size_t start = i_;
    unsigned v = 0;
    while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') {
      v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
      if (v > 1000) fail("point number too large");
      ++i_;
    }
    if (start == i_) fail("expected a point number");
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
  std::size_t pos() const { return i_; }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

Permutation parse_one(Cursor& c, unsigned& max_point) {
  std::array<std::uint8_t, kMaxDegree> img;
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  Permutation acc;
  bool any = false;
  while (c.peek('(')) {
    any = true;
    c.expect('(');
    std::vector<unsigned> cycle;
    while (!c.peek(')')) {
      if (c.peek(',')) c.expect(',');
      unsigned x = c.number();
      if (x < 1 || x > kMaxDegree) c.fail("point " + std::to_string(x) + " outside 1.." + std::to_string(kMaxDegree));
      if (std::find(cycle.begin(), cycle.end(), x) != cycle.end()) c.fail("point " + std::to_string(x) + " repeated in a cycle");
      cycle.push_back(x);
      max_point = std::max(max_point, x);
    }
    c.expect(')');
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[cycle[k] - 1] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()] - 1);
    }
    // Cycles written left to right compose as functions right to left.
    acc = acc * Permutation::from_images(img);
  }
  if (!any) c.fail("expected '('");
  return acc;
}

}  // namespace

Permutation::Permutation() { std::iota(img_.begin(), img_.end(), std::uint8_t{0}); }

Permutation Permutation::from_images(std::span<const std::uint8_t> images) {
  if (images.size() > kMaxDegree) throw InvalidArgument("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::array<bool, kMaxDegree> seen{};
  Permutation p;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto x = images[i];
    if (x >= images.size() || seen[x]) throw InvalidArgument("images do not form a bijection");
    seen[x] = true;
    p.img_[i] = x;
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  for (std::size_t i = 0; i < kMaxDegree; ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (std::size_t i = 0; i < kMaxDegree; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < kMaxDegree; ++i) k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return k;
}

std::string Permutation::cycles() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < kMaxDegree; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::pair<Permutation, unsigned> parse_cycles(std::string_view text) {
  Cursor c(text);
  unsigned max_point = 1;
  Permutation p = parse_one(c, max_point);
  if (!c.done()) c.fail("trailing input");
  return {p, max_point};
}

GeneratorSet parse_generators(std::string_view text) {
  Cursor c(text);
  GeneratorSet out;
  if (c.done()) return out;
  while (true) {
    out.generators.push_back(parse_one(c, out.degree));
    if (c.done()) break;
    c.expect(';');
  }
  return out;
}

bool Subgroup::contains(std::size_t idx) const { return std::binary_search(elems_.begin(), elems_.end(), idx); }

PermGroup PermGroup::enumerate(std::vector<Permutation> generators, unsigned degree, std::size_t element_cap) {
  if (degree > kMaxDegree) throw Refusal("degree " + std::to_string(degree) + " exceeds the cap of " + std::to_string(kMaxDegree));
  PermGroup g;
  g.degree_ = std::max(degree, 1u);
  for (const auto& s : generators) {
    for (unsigned x = g.degree_; x < kMaxDegree; ++x) {
      if (s(static_cast<std::uint8_t>(x)) != x) throw InvalidArgument("generator " + s.cycles() + " moves points beyond degree " + std::to_string(degree));
    }
  }
  g.gens_ = std::move(generators);
  g.elems_.push_back(Permutation());
  g.index_.emplace(Permutation().key(), 0);
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (const auto& s : g.gens_) {
      Permutation y = s * g.elems_[head];
      if (g.index_.emplace(y.key(), g.elems_.size()).second) {
        if (g.elems_.size() >= element_cap) {
          throw Refusal("group has more than " + std::to_string(element_cap) + " elements (element cap)");
        }
        g.elems_.push_back(y);
      }
    }
  }
  g.inverse_.resize(g.elems_.size());
  for (std::size_t i = 0; i < g.elems_.size(); ++i) g.inverse_[i] = g.index_of(g.elems_[i].inverse());
  return g;
}

std::optional<std::size_t> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw InvalidArgument("permutation " + p.cycles() + " is not in the group");
  return *idx;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const { return index_.at((elems_[a] * elems_[b]).key()); }

std::size_t PermGroup::element_order(std::size_t a) const {
  std::size_t n = 1;
  Permutation x = elems_[a];
  while (!x.is_identity()) {
    x = x * elems_[a];
    ++n;
  }
  return n;
}

Subgroup PermGroup::whole() const {
  std::vector<std::size_t> all(elems_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(std::move(all));
}

Subgroup PermGroup::closure(std::span<const std::size_t> gens) const {
  std::vector<bool> in(elems_.size(), false);
  std::vector<std::size_t> found{0};
  in[0] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto s : gens) {
      const std::size_t y = mul(s, found[head]);
      if (!in[y]) {
        in[y] = true;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(found));
}

std::vector<std::size_t> PermGroup::generating_set(const Subgroup& h) const {
  std::vector<std::size_t> gens;
  Subgroup current = trivial();
  for (auto x : h.elements()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(gens);
  }
  return gens;
}

bool PermGroup::is_subgroup(const Subgroup& h) const {
  if (h.order() == 0 || !h.contains(0)) return false;
  if (h.elements().back() >= elems_.size()) return false;
  return closure(generating_set(h)) == h;
}

Subgroup conjugate(const PermGroup& g, std::size_t x, const Subgroup& h) {
  std::vector<std::size_t> out;
  out.reserve(h.order());
  for (auto e : h.elements()) out.push_back(g.conj(x, e));
  std::sort(out.begin(), out.end());
  return Subgroup(std::move(out));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  if (!g.is_subgroup(h)) throw InvalidArgument("normalizer of a set that is not a subgroup");
  const auto gens = g.generating_set(h);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (auto s : gens) {
      if (!h.contains(g.conj(x, s))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

std::size_t count_conjugates(const PermGroup& g, const Subgroup& h) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < g.order(); ++x) seen.insert(conjugate(g, x, h).elements());
  return seen.size();
}

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (p < 2 || g.order() % p != 0) {
    throw InvalidArgument(std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  }
  const std::size_t target = p_part(g.order(), p);
  std::vector<std::size_t> gens;
  Subgroup h = g.trivial();
  while (h.order() < target) {
    const Subgroup n = normalizer(g, h);
    std::optional<std::size_t> step;
    for (auto x : n.elements()) {
      if (!h.contains(x) && is_power_of(g.element_order(x), p)) {
        step = x;
        break;
      }
    }
    if (!step) throw CrossCheckFailure("no p-element extends a non-Sylow p-subgroup (p=" + std::to_string(p) + ")");
    gens.push_back(*step);
    h = g.closure(gens);
    if (!is_power_of(h.order(), p)) throw CrossCheckFailure("grown subgroup is not a p-group (p=" + std::to_string(p) + ")");
  }
  if (h.order() != target) throw CrossCheckFailure("Sylow growth overshot for p=" + std::to_string(p));
  return h;
}

std::vector<SylowReport> sylow_reports(const PermGroup& g) {
  std::vector<SylowReport> out;
  for (auto p : prime_divisors(g.order())) {
    const Subgroup s = sylow_subgroup(g, p);
    const Subgroup n = normalizer(g, s);
    SylowReport r;
    r.prime = p;
    r.sigma = s.order();
    r.normalizer_order = n.order();
    r.nu_by_index = g.order() / n.order();
    r.nu_by_conjugates = count_conjugates(g, s);
    if (r.nu_by_index != r.nu_by_conjugates) {
      throw CrossCheckFailure("p=" + std::to_string(p) + ": |G:N_G(P)| = " + std::to_string(r.nu_by_index) +
                              " but P has " + std::to_string(r.nu_by_conjugates) + " conjugates");
    }
    out.push_back(r);
  }
  return out;
}

SylowProfile sylow_profile_bruteforce(const PermGroup& g) {
  SylowProfile prof;
  for (const auto& r : sylow_reports(g)) prof.insert({r.prime, big(r.nu_by_index), big(r.sigma)});
  return prof;
}

Subgroup center(const PermGroup& g) {
  std::vector<std::size_t> gens(g.generators().size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = g.index_of(g.generators()[i]);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : gens) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& h) {
  const auto hgens = g.generating_set(h);
  std::vector<std::size_t> kgens;
  for (auto a : hgens) {
    for (auto b : hgens) {
      const std::size_t c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0) kgens.push_back(c);
    }
  }
  Subgroup k = g.closure(kgens);
  // Normal closure in H of the generator commutators.
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto s : hgens) {
      for (auto x : g.generating_set(k)) {
        const std::size_t y = g.conj(s, x);
        if (!k.contains(y)) {
          kgens.push_back(y);
          k = g.closure(kgens);
          grew = true;
        }
      }
    }
  }
  return k;
}

std::vector<std::size_t> derived_series_orders(const PermGroup& g) {
  Subgroup h = g.whole();
  std::vector<std::size_t> orders{h.order()};
  while (h.order() > 1) {
    Subgroup k = commutator_subgroup(g, h);
    if (k.order() == h.order()) break;
    orders.push_back(k.order());
    h = std::move(k);
  }
  return orders;
}

bool is_solvable(const PermGroup& g) { return derived_series_orders(g).back() == 1; }

GeneratorSet direct_product(const GeneratorSet& a, const GeneratorSet& b) {
  const unsigned degree = a.degree + b.degree;
  if (degree > kMaxDegree) throw Refusal("direct product needs " + std::to_string(degree) + " points, cap is " + std::to_string(kMaxDegree));
  GeneratorSet out;
  out.degree = degree;
  out.generators = a.generators;
  for (const auto& s : b.generators) {
    std::array<std::uint8_t, kMaxDegree> img;
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    for (unsigned x = 0; x < b.degree; ++x) img[a.degree + x] = static_cast<std::uint8_t>(a.degree + s(static_cast<std::uint8_t>(x)));
    out.generators.push_back(Permutation::from_images(img));
  }
  return out;
}

}  // namespace sylow::perm
