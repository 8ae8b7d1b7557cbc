// Compares the OpenMP kernels against their serial reference implementations:
// left Bol enumeration and corpus classification. Prints wall times and
// speedups, and cross-checks that both paths produce identical output.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gyroloop/enumeration.hpp"
#include "gyroloop/fixtures.hpp"
#include "gyroloop/morphisms.hpp"
#include "gyroloop/pipeline.hpp"

using namespace gyroloop;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Loop scramble(const Loop& loop, unsigned seed) {
  const int n = loop.order();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  unsigned state = seed * 2654435761u + 1;
  for (int i = n - 1; i > 0; --i) {
    state = state * 1664525u + 1013904223u;
    std::swap(p[i], p[state % (i + 1)]);
  }
  for (int i = 0; i < n; ++i)
    if (p[i] == loop.identity()) {
      std::swap(p[i], p[loop.identity()]);
      break;
    }
  return Loop::from_table(relabel(loop.table(), Perm::from_map(p)));
}

}  // namespace

int main(int argc, char** argv) {
  int order = 8;
  int corpus_size = 64;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--order" && i + 1 < argc) order = std::atoi(argv[++i]);
    else if (arg == "--corpus" && i + 1 < argc) corpus_size = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: bench_parallel [--order n] [--corpus k]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "compiled without OpenMP; parallel paths run serially\n";
#endif

  {
    EnumOptions opts;
    EnumerationResult serial_res, parallel_res;
    const double t_serial =
        time_of([&] { serial_res = enumerate_left_bol_serial(order, opts); });
    const double t_parallel =
        time_of([&] { parallel_res = enumerate_left_bol(order, opts); });
    const bool same = serial_res.loops.size() == parallel_res.loops.size();
    std::cout << "enumerate order " << order << ": serial " << t_serial << " s, parallel "
              << t_parallel << " s, speedup " << t_serial / t_parallel << "x, classes "
              << serial_res.loops.size() << (same ? "" : " MISMATCH") << "\n";
    if (!same) return 1;
  }

  {
    const Loop g16 = Loop::from_table(g16_table());
    Corpus corpus;
    for (int i = 0; i < corpus_size; ++i)
      corpus.entries.push_back(CorpusEntry{"g16_" + std::to_string(i),
                                           scramble(g16, i).table(), "<bench>", i, 0});
    ClassificationReport serial_rep, parallel_rep;
    const double t_serial = time_of([&] { serial_rep = classify_serial(corpus); });
    const double t_parallel = time_of([&] { parallel_rep = classify(corpus); });
    const bool same = emit_csv(serial_rep) == emit_csv(parallel_rep);
    std::cout << "classify " << corpus_size << " tables of order 16: serial " << t_serial
              << " s, parallel " << t_parallel << " s, speedup " << t_serial / t_parallel
              << "x" << (same ? "" : " MISMATCH") << "\n";
    if (!same) return 1;
  }
  return 0;
}
