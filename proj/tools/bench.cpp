#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "masa/stallings.hpp"

// Compares the parallel malnormality scan against its serial reference on a
// subgroup whose scan window grows quickly with the radius.

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int radius = argc > 1 ? std::atoi(argv[1]) : 4;
  const int rank = 2;
  std::vector<masa::Word> gens = {masa::parse_word("aa", rank),
                                  masa::parse_word("bb", rank),
                                  masa::parse_word("abAB", rank)};
  auto g = masa::SubgroupGraph::build(gens, rank);

  std::vector<masa::MalnormalViolation> serial, parallel;
  double t_serial =
      time_ms([&] { serial = masa::malnormal_violations_serial(g, rank, radius); });
  double t_parallel =
      time_ms([&] { parallel = masa::malnormal_violations(g, rank, radius); });

  bool same = serial.size() == parallel.size();
  for (size_t i = 0; same && i < serial.size(); ++i)
    same = serial[i].x == parallel[i].x && serial[i].g == parallel[i].g;

  std::printf("radius=%d violations=%zu serial=%.1fms parallel=%.1fms speedup=%.2fx agree=%s\n",
              radius, serial.size(), t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0,
              same ? "yes" : "NO");
  return same ? 0 : 1;
}
