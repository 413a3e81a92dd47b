#include "sylow/group_model.hpp"

#include <cctype>
#include <mutex>
#include <optional>
#include <numeric>

#include "sylow/errors.hpp"

namespace sylow {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// The prime power p^e equal to n, if any. Limited to the 64-bit range.
std::optional<PrimePower> as_prime_power(const BigInt& n) {
  if (n < 2 || !fits_u64(n)) return std::nullopt;
  for (unsigned e = 1; e < 64; ++e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) == 0) continue;
    if (root < 2) break;
    if (is_prime(root)) return PrimePower{to_u64(root), e};
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr g;
    if (at_end()) fail("empty group expression");
    do {
      if (auto a = atom()) g.factors.push_back(std::move(*a));
    } while (accept('*'));
    if (!at_end()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return g;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at = std::string::npos) const {
    throw ParseError(at == std::string::npos ? i_ : at, msg);
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, i_ - start)), 10);
  }

  std::uint64_t prime_key(std::size_t at, const BigInt& v) {
    if (!fits_u64(v) || !is_prime(to_u64(v))) fail(to_string(v) + " is not a prime", at);
    return to_u64(v);
  }

  // Returns nullopt for the trivial atom "1".
  std::optional<GroupAtom> atom() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ >= s_.size()) fail("expected an atom");
    const char c = s_[i_];
    if (c == '1' && (i_ + 1 == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      ++i_;
      return std::nullopt;
    }
    if (s_.substr(i_, 2) == "A5") {
      i_ += 2;
      return BuiltinA5{};
    }
    if (c == 'C') {
      ++i_;
      const std::size_t num_at = i_;
      BigInt base = integer();
      if (accept('^')) {
        const std::size_t exp_at = i_;
        BigInt e = integer();
        const std::uint64_t p = prime_key(num_at, base);
        if (e < 1 || e > 4096) fail("exponent must be between 1 and 4096", exp_at);
        return Cyclic{PrimePower{p, static_cast<unsigned>(e.get_ui())}};
      }
      auto pp = as_prime_power(base);
      if (!pp) fail("C" + to_string(base) + " is not a prime-power cyclic group; write it as a product of its prime-power parts", num_at);
      return Cyclic{*pp};
    }
    if (c == 'N') {
      ++i_;
      expect('{');
      std::map<std::uint64_t, BigInt> orders;
      do {
        const std::size_t key_at = (skip_ws(), i_);
        const std::uint64_t p = prime_key(key_at, integer());
        expect(':');
        const std::size_t ord_at = (skip_ws(), i_);
        BigInt order = integer();
        if (power_exponent(order, p) < 1) fail(to_string(order) + " is not a proper power of " + std::to_string(p), ord_at);
        if (!orders.emplace(p, order).second) fail("prime " + std::to_string(p) + " repeated in layer", key_at);
      } while (accept(','));
      expect('}');
      return NilpotentLayer{std::move(orders)};
    }
    if (c == 'P') {
      ++i_;
      expect('[');
      const std::size_t body = i_;
      const std::size_t close = s_.find(']', body);
      if (close == std::string_view::npos) fail("missing ']'");
      perm::GeneratorSet gens;
      try {
        gens = perm::parse_generators(s_.substr(body, close - body));
      } catch (const ParseError& e) {
        fail(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), body + e.position());
      }
      if (gens.generators.empty()) fail("permutation atom needs at least one generator", body);
      gens.degree = 1;
      for (const auto& g : gens.generators) {
        for (unsigned x = 0; x < perm::kMaxDegree; ++x) {
          if (g(static_cast<std::uint8_t>(x)) != x) gens.degree = std::max(gens.degree, x + 1);
        }
      }
      i_ = close + 1;
      return PermAtom{std::move(gens)};
    }
    fail("unknown atom", start);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

struct PermCache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const perm::PermGroup>> groups;
};

PermCache& perm_cache() {
  static PermCache cache;
  return cache;
}

perm::GeneratorSet cyclic_generators(std::uint64_t n) {
  if (n > perm::kMaxDegree) throw Refusal("cyclic group of order " + std::to_string(n) + " needs more than " + std::to_string(perm::kMaxDegree) + " points");
  std::vector<std::uint8_t> img(n);
  for (std::uint64_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % n);
  return {{perm::Permutation::from_images(img)}, static_cast<unsigned>(n)};
}

}  // namespace

NilpotentLayer make_layer(std::map<std::uint64_t, BigInt> sylow_orders) {
  for (const auto& [p, order] : sylow_orders) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (power_exponent(order, p) < 1) throw InvalidArgument(to_string(order) + " is not a proper power of " + std::to_string(p));
  }
  return NilpotentLayer{std::move(sylow_orders)};
}

GroupExpr parse_group(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupAtom& a) {
  return std::visit(Overloaded{
                        [](const BuiltinA5&) { return std::string("A5"); },
                        [](const Cyclic& c) {
                          std::string s = "C" + std::to_string(c.order.prime);
                          if (c.order.exponent > 1) s += "^" + std::to_string(c.order.exponent);
                          return s;
                        },
                        [](const NilpotentLayer& l) {
                          std::string s = "N{";
                          bool first = true;
                          for (const auto& [p, order] : l.sylow_orders) {
                            if (!first) s += ", ";
                            s += std::to_string(p) + ":" + to_string(order);
                            first = false;
                          }
                          return s + "}";
                        },
                        [](const PermAtom& p) {
                          std::string s = "P[";
                          for (std::size_t i = 0; i < p.gens.generators.size(); ++i) {
                            if (i) s += ";";
                            s += p.gens.generators[i].cycles();
                          }
                          return s + "]";
                        },
                    },
                    a);
}

std::string render(const GroupExpr& g) {
  if (g.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) s += " * ";
    s += render(g.factors[i]);
  }
  return s;
}

std::shared_ptr<const perm::PermGroup> resolve(const PermAtom& a) {
  const std::string key = render(GroupAtom(a));
  auto& cache = perm_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.groups.find(key); it != cache.groups.end()) return it->second;
  }
  // Enumerate outside the lock; a concurrent fill of the same key stores an identical group.
  auto group = std::make_shared<const perm::PermGroup>(perm::PermGroup::enumerate(a.gens.generators, a.gens.degree));
  std::lock_guard lock(cache.mu);
  return cache.groups.emplace(key, std::move(group)).first->second;
}

SylowProfile atom_profile(const GroupAtom& a) {
  return std::visit(Overloaded{
                        [](const BuiltinA5&) {
                          SylowProfile p;
                          p.insert({2, 5, 4});
                          p.insert({3, 10, 3});
                          p.insert({5, 6, 5});
                          return p;
                        },
                        [](const Cyclic& c) {
                          SylowProfile p;
                          p.insert({c.order.prime, 1, c.order.value()});
                          return p;
                        },
                        [](const NilpotentLayer& l) {
                          SylowProfile p;
                          for (const auto& [q, order] : l.sylow_orders) p.insert({q, 1, order});
                          return p;
                        },
                        [](const PermAtom& pa) { return perm::sylow_profile_bruteforce(*resolve(pa)); },
                    },
                    a);
}

BigInt atom_order(const GroupAtom& a) {
  return std::visit(Overloaded{
                        [](const BuiltinA5&) { return BigInt(60); },
                        [](const Cyclic& c) { return c.order.value(); },
                        [](const NilpotentLayer& l) {
                          BigInt n = 1;
                          for (const auto& [q, order] : l.sylow_orders) n *= order;
                          return n;
                        },
                        [](const PermAtom& pa) { return big(resolve(pa)->order()); },
                    },
                    a);
}

BigInt order_of(const GroupExpr& g) {
  BigInt n = 1;
  for (const auto& a : g.factors) n *= atom_order(a);
  return n;
}

perm::GeneratorSet a5_generators() { return perm::parse_generators("(1 2 3 4 5);(1 2 3)"); }

perm::GeneratorSet realize_permutation(const GroupExpr& g) {
  perm::GeneratorSet acc;
  acc.degree = 0;
  for (const auto& a : g.factors) {
    perm::GeneratorSet part = std::visit(
        Overloaded{
            [](const BuiltinA5&) { return a5_generators(); },
            [](const Cyclic& c) {
              const BigInt n = c.order.value();
              if (!fits_u64(n)) throw Refusal("cyclic factor too large to realize");
              return cyclic_generators(to_u64(n));
            },
            [](const NilpotentLayer& l) {
              perm::GeneratorSet s;
              s.degree = 0;
              for (const auto& [q, order] : l.sylow_orders) {
                if (!fits_u64(order)) throw Refusal("layer factor too large to realize");
                s = perm::direct_product(s, cyclic_generators(to_u64(order)));
              }
              return s;
            },
            [](const PermAtom& pa) { return pa.gens; },
        },
        a);
    acc = perm::direct_product(acc, part);
  }
  return acc;
}

}  // namespace sylow
