// Serial reference against the OpenMP kernels: full coefficient tables built
// from a cold cache, and the largest single rectification count.

#include <chrono>
#include <cstdio>
#include <optional>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "cominrule/schubert.hpp"

using namespace cominrule;

namespace {

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> spaces{"Gr:3,7", "LG:5", "QD:7", "E6", "E7"};
  if (argc > 1) spaces.assign(argv + 1, argv + argc);
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << "space      shapes  serial_ms  parallel_ms  speedup  equal\n";
  for (const auto& name : spaces) {
    std::optional<CoeffTable> serial, parallel;
    double ts = time_ms([&] { serial.emplace(full_table(Space::make(name), Exec::serial)); });
    double tp = time_ms([&] { parallel.emplace(full_table(Space::make(name), Exec::parallel)); });
    std::printf("%-10s %6d %10.1f %12.1f %8.2f  %s\n", name.c_str(), serial->n(), ts, tp, ts / tp,
                *serial == *parallel ? "yes" : "NO");
  }

  // one large skew shape: the whole E7 poset from the empty shape
  auto e7 = Space::make("E7");
  const BoxPoset& p = e7->poset();
  std::map<Mask, std::int64_t> a, b;
  double ts = time_ms([&] { a = rectification_counts(p, 0, p.full(), Exec::serial); });
  double tp = time_ms([&] { b = rectification_counts(p, 0, p.full(), Exec::parallel); });
  std::printf("E7 rectification counts of the full poset: serial %.1f ms, parallel %.1f ms, equal %s\n", ts, tp,
              a == b ? "yes" : "NO");
  return 0;
}
