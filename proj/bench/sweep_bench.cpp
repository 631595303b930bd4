// Compares the serial and OpenMP sweep kernels on identical workloads and
// checks they produce the same spectra.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "maglap/generate.hpp"
#include "maglap/sweep.hpp"

using namespace maglap;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void bench_case(const char* label, const Graph& g, int grid) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult serial = sweep_single_chord(g, 0, grid, ExecutionPolicy::serial);
  auto t1 = std::chrono::steady_clock::now();
  SweepResult parallel = sweep_single_chord(g, 0, grid, ExecutionPolicy::parallel);
  auto t2 = std::chrono::steady_clock::now();

  double max_diff = 0.0;
  for (std::size_t i = 0; i < serial.spectra.size(); ++i)
    for (int k = 1; k <= serial.spectra[i].size(); ++k)
      max_diff = std::max(max_diff,
                          std::abs(serial.spectra[i].lambda(k) - parallel.spectra[i].lambda(k)));

  double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("%-28s grid=%4d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  max|diff| %.3g\n",
              label, grid, ts, tp, ts / tp, max_diff);
}

} // namespace

int main() {
  Rng rng(7);
  Graph small = random_connected_graph(24, 30, rng);
  Graph medium = random_connected_graph(48, 60, rng);
  Graph large = random_connected_graph(96, 110, rng);

  std::printf("sweep kernel: serial reference vs OpenMP\n");
  bench_case("random n=24 m=30", small, 512);
  bench_case("random n=48 m=60", medium, 256);
  bench_case("random n=96 m=110", large, 128);
  return 0;
}
