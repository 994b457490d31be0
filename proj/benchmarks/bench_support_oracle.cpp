// Compares the serial support-function sweep against the OpenMP kernel and
// checks they return identical boundary points.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jordanlens/linalg.hpp"
#include "jordanlens/numrange.hpp"

using namespace jordanlens;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const double t =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (t < best) best = t;
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif
  std::printf("%6s %8s %12s %12s %9s\n", "n", "angles", "serial[s]",
              "parallel[s]", "speedup");

  for (const Index n : {16, 48, 96}) {
    const Matrix a =
        seeded_unitary(n, 1) + Complex(0.0, 0.7) * seeded_unitary(n, 2);
    for (const int angles : {512, 2048}) {
      const auto serial = numrange::support_boundary_points_serial(a, angles);
      const auto parallel = numrange::support_boundary_points(a, angles);
      bool identical = serial.size() == parallel.size();
      for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i] == parallel[i];
      if (!identical) {
        std::printf("MISMATCH at n=%ld angles=%d\n", static_cast<long>(n), angles);
        return 1;
      }

      const int reps = angles <= 512 ? 5 : 3;
      const double ts = best_of(reps, [&] {
        numrange::support_boundary_points_serial(a, angles);
      });
      const double tp =
          best_of(reps, [&] { numrange::support_boundary_points(a, angles); });
      std::printf("%6ld %8d %12.4f %12.4f %8.2fx\n", static_cast<long>(n), angles,
                  ts, tp, ts / tp);
    }
  }
  return 0;
}
