#include <atomic>
#include <exception>

#include <omp.h>

#include "search_common.hpp"

namespace sylow {

namespace {

using u128 = unsigned __int128;

// Integer back ends for the kernel. u128 is used whenever a worst-case bound on
// every intermediate numerator and denominator fits; otherwise GMP.
struct NativeInt {
  using T = u128;
  static T from(const BigInt& v) {
    const BigInt lo_mask = (BigInt(1) << 64) - 1;
    const BigInt lo = v & lo_mask;
    const BigInt hi = v >> 64;
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
  }
  static T gcd(T a, T b) {
    while (b != 0) {
      T t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

struct GmpInt {
  using T = BigInt;
  static T from(const BigInt& v) { return v; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
};

template <class Int>
struct Node {
  typename Int::T num;
  typename Int::T den;
  std::size_t start = 0;
  unsigned parts_left = 0;
  std::vector<PrimePower> chosen;
};

template <class Int>
class Kernel {
 public:
  using T = typename Int::T;

  Kernel(const Rational& target, const SearchBounds& bounds, std::vector<std::uint64_t> primes,
         std::atomic<std::uint64_t>& nodes, std::atomic<bool>& abort)
      : target_(target), bounds_(bounds), primes_(std::move(primes)), nodes_(nodes), abort_(abort) {
    // term_[i][e-1] = q_i^e + 1, increasing in both i and e.
    term_.resize(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      for (unsigned e = 1; e <= bounds_.max_exponent; ++e) term_[i].push_back(Int::from(pow(primes_[i], e) + 1));
    }
  }

  Node<Int> root() const {
    return Node<Int>{Int::from(target_.num()), Int::from(target_.den()), 0, bounds_.max_parts, {}};
  }

  // One branching level: exact hits go to out, continuing subtrees to children.
  void expand(const Node<Int>& n, std::vector<Node<Int>>& children, std::vector<Certificate>& out) {
    tick();
    const T k = static_cast<T>(n.parts_left);
    for (std::size_t i = n.start; i < primes_.size(); ++i) {
      // k parts each at most 1/(q+1) cannot reach num/den.
      if (k * n.den < n.num * term_[i][0]) break;
      for (unsigned e = 1; e <= bounds_.max_exponent; ++e) {
        const T& t = term_[i][e - 1];
        const T scaled = t * n.num;
        if (scaled < n.den) continue;  // 1/t exceeds what is left
        std::vector<PrimePower> chosen = n.chosen;
        chosen.push_back(PrimePower{primes_[i], e});
        if (scaled == n.den) {
          out.push_back(detail::to_certificate(chosen, target_, bounds_));
          continue;
        }
        if (n.parts_left < 2) continue;
        tick();
        T num = scaled - n.den;
        T den = n.den * t;
        const T g = Int::gcd(num, den);
        children.push_back(Node<Int>{num / g, den / g, i + 1, n.parts_left - 1, std::move(chosen)});
      }
    }
  }

  void solve(Node<Int> n, std::vector<Certificate>& out) {
    chosen_ = std::move(n.chosen);
    dfs(n.num, n.den, n.start, n.parts_left, out);
  }

  struct Aborted {};

  void tick() {
    if (++pending_ < 1024) return;
    flush();
  }

  void flush() {
    const auto total = nodes_.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (total > bounds_.node_budget) abort_.store(true, std::memory_order_relaxed);
    if (abort_.load(std::memory_order_relaxed)) throw Aborted{};
  }

 private:
  void dfs(const T& num, const T& den, std::size_t start, unsigned parts_left, std::vector<Certificate>& out) {
    tick();
    if (parts_left == 1) {
      last_part(num, den, start, out);
      return;
    }
    const T k = static_cast<T>(parts_left);
    for (std::size_t i = start; i < primes_.size(); ++i) {
      if (k * den < num * term_[i][0]) break;
      for (unsigned e = 1; e <= bounds_.max_exponent; ++e) {
        const T& t = term_[i][e - 1];
        const T scaled = t * num;
        if (scaled < den) continue;
        chosen_.push_back(PrimePower{primes_[i], e});
        if (scaled == den) {
          out.push_back(detail::to_certificate(chosen_, target_, bounds_));
        } else {
          T rnum = scaled - den;
          T rden = den * t;
          const T g = Int::gcd(rnum, rden);
          rnum /= g;
          rden /= g;
          dfs(rnum, rden, i + 1, parts_left - 1, out);
        }
        chosen_.pop_back();
      }
    }
  }

  // One part left: the remainder must be exactly 1/(q^e + 1).
  void last_part(const T& num, const T& den, std::size_t start, std::vector<Certificate>& out) {
    if (num != 1) return;
    for (unsigned e = 1; e <= bounds_.max_exponent; ++e) {
      std::size_t lo = start, hi = primes_.size();
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (term_[mid][e - 1] < den) lo = mid + 1;
        else hi = mid;
      }
      if (lo < primes_.size() && term_[lo][e - 1] == den) {
        chosen_.push_back(PrimePower{primes_[lo], e});
        out.push_back(detail::to_certificate(chosen_, target_, bounds_));
        chosen_.pop_back();
      }
    }
  }

  Rational target_;
  SearchBounds bounds_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<T>> term_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& abort_;
  std::uint64_t pending_ = 0;
  std::vector<PrimePower> chosen_;
};

template <class Int>
std::vector<Certificate> run(const Rational& target, const SearchBounds& bounds, SearchStats* stats) {
  const auto primes = detail::admissible_primes(bounds);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::vector<Certificate> found;

  // Breadth-first split near the root until there is enough work to share.
  Kernel<Int> splitter(target, bounds, primes, nodes, abort);
  std::vector<Node<Int>> frontier{splitter.root()};
  const std::size_t wanted = 64 * static_cast<std::size_t>(omp_get_max_threads());
  try {
    for (int level = 0; level < 3 && frontier.size() < wanted; ++level) {
      std::vector<Node<Int>> next;
      bool expanded = false;
      for (auto& n : frontier) {
        if (n.parts_left < 2) {
          next.push_back(std::move(n));
          continue;
        }
        splitter.expand(n, next, found);
        expanded = true;
      }
      frontier = std::move(next);
      if (!expanded) break;
    }
    splitter.flush();
  } catch (const typename Kernel<Int>::Aborted&) {
    throw detail::budget_refusal(bounds, nodes.load());
  }

  std::vector<std::vector<Certificate>> results(frontier.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    Kernel<Int> kernel(target, bounds, primes, nodes, abort);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t t = 0; t < frontier.size(); ++t) {
      try {
        kernel.solve(std::move(frontier[t]), results[t]);
      } catch (const typename Kernel<Int>::Aborted&) {
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
        abort.store(true);
      }
    }
    try {
      kernel.flush();
    } catch (const typename Kernel<Int>::Aborted&) {
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (abort.load()) throw detail::budget_refusal(bounds, nodes.load());

  for (auto& r : results) found.insert(found.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  detail::sort_canonical(found);
  if (stats) stats->nodes = nodes.load();
  return found;
}

bool fits_native(const Rational& target, const SearchBounds& bounds) {
  const BigInt largest_term = pow(bounds.max_prime, bounds.max_exponent) + 1;
  BigInt bound = abs(target.num()) + 1;
  bound *= target.den();
  bound *= 16 * (bounds.max_parts + 1);
  for (unsigned i = 0; i <= bounds.max_parts; ++i) bound *= largest_term;
  return bound < (BigInt(1) << 126);
}

}  // namespace

std::vector<Certificate> search_certificates(const Rational& target, const SearchBounds& bounds, SearchStats* stats) {
  detail::check_search_args(target, bounds);
  if (fits_native(target, bounds)) return run<NativeInt>(target, bounds, stats);
  return run<GmpInt>(target, bounds, stats);
}

}  // namespace sylow
