// Serial reference versus OpenMP kernels on the n=5 workloads.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "rellaws/census.hpp"
#include "rellaws/lawmine.hpp"
#include "rellaws/redundancy.hpp"
#include "rellaws/witness.hpp"

using namespace rellaws;

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3f %10.3f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  VectorCensus census;
  row("census n=5 unpruned",
      seconds([] { vector_census(5, false, Execution::Serial); }),
      seconds([&] { census = vector_census(5, false, Execution::Parallel); }));
  row("census n=5 pruned",
      seconds([] { vector_census(5, true, Execution::Serial); }),
      seconds([] { vector_census(5, true, Execution::Parallel); }));

  MiningResult mined;
  row("mine n=5 levels 1-8",
      seconds([&] { mine(census, 8, Execution::Serial); }),
      seconds([&] { mined = mine(census, 8, Execution::Parallel); }));
  row("star 274 laws",
      seconds([&] { star_redundant(mined.laws, Execution::Serial); }),
      seconds([&] { star_redundant(mined.laws, Execution::Parallel); }));

  const LiteralConjunction q = parse_conjunction("ASym,Dense", "Empty");
  row("witness n=5 exhaustive",
      seconds([&] { find_witness(5, q, SearchMode::Exhaustive, {}, Execution::Serial); }),
      seconds([&] { find_witness(5, q, SearchMode::Exhaustive, {}, Execution::Parallel); }));
  return 0;
}
