// Compares the OpenMP point-enumeration kernel against the serial
// reference, and measures verification fan-out scaling, on fixed
// mid-size instances.

#include <chrono>
#include <cstdio>

#include "scrolls/points.hpp"
#include "scrolls/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace scrolls;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_points(const char* label, const GeneratorSet& gens, std::uint32_t q) {
  Budget budget;
  auto t0 = Clock::now();
  PointSet serial = points_vanishing_serial(gens, q, budget);
  const double ts = seconds(t0);
  t0 = Clock::now();
  PointSet parallel = points_vanishing(gens, q, budget);
  const double tp = seconds(t0);
  std::printf("%-28s q=%u  points=%zu  serial %.3fs  openmp %.3fs  speedup %.2fx  %s\n",
              label, q, serial.points.size(), ts, tp, ts / tp,
              serial == parallel ? "match" : "MISMATCH");
}

void bench_fanout() {
  const FieldSpec f3 = FieldSpec::prime(3);
  ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, f3);
  GeneratorSet full = minors_full(m);
  GeneratorSet reduced = minors_reduced(m);
  Budget budget;
#ifdef _OPENMP
  for (int jobs : {1, omp_get_num_procs()}) {
    omp_set_num_threads(jobs);
    auto t0 = Clock::now();
    Report r = radical_contains(full, reduced, budget, "bench");
    std::printf("radical_contains(3,3)/F3   jobs=%d  records=%zu  %.3fs  verdict=%s\n", jobs,
                r.records.size(), seconds(t0), verdict_str(r.overall()).c_str());
  }
#else
  auto t0 = Clock::now();
  Report r = radical_contains(full, reduced, budget, "bench");
  std::printf("radical_contains(3,3)/F3   records=%zu  %.3fs\n", r.records.size(), seconds(t0));
#endif
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#endif
  const FieldSpec f5 = FieldSpec::prime(5);
  const FieldSpec f7 = FieldSpec::prime(7);
  {
    ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f5);
    bench_points("full(2,2) / F5^6", minors_full(m), 5);
  }
  {
    ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, f5);
    bench_points("full(3,3) / F5^8", minors_full(m), 5);
  }
  {
    ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, f7);
    bench_points("full(3,3) / F7^8", minors_full(m), 7);
  }
  bench_fanout();
  return 0;
}
