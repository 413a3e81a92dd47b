// Times the serial reference search against the OpenMP kernel on the same bounds
// and checks that both return the same certificates.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "sylow/certify.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sylow;
  const Rational target = rat(4, 9);
  SearchBounds bounds;
  bounds.max_prime = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  bounds.max_parts = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10)) : 9;
  const bool with_reference = !(argc > 3 && std::string(argv[3]) == "--parallel-only");

  std::cout << "target 4/9, max_prime " << bounds.max_prime << ", max_parts " << bounds.max_parts << ", threads "
            << omp_get_max_threads() << "\n";

  std::vector<Certificate> fast, slow;
  SearchStats fast_stats, slow_stats;
  const double t_fast = seconds([&] { fast = search_certificates(target, bounds, &fast_stats); });
  std::cout << "parallel   " << t_fast << " s, " << fast_stats.nodes << " nodes, " << fast.size() << " certificates\n";
  if (with_reference) {
    const double t_slow = seconds([&] { slow = search_certificates_reference(target, bounds, &slow_stats); });
    std::cout << "reference  " << t_slow << " s, " << slow_stats.nodes << " nodes, " << slow.size() << " certificates\n";
    if (slow != fast) {
      std::cout << "MISMATCH between reference and parallel results\n";
      return 1;
    }
    std::cout << "speedup    " << t_slow / t_fast << "x\n";
  }
  return 0;
}
