// Benchmark comparing the serial reference implementations with the
// OpenMP kernels on sizable inputs. Values are cross-checked as they are
// timed; a mismatch aborts the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "modnet/cover.hpp"
#include "modnet/graph.hpp"
#include "modnet/kernels.hpp"
#include "modnet/mle.hpp"
#include "modnet/score.hpp"
#include "modnet/search.hpp"

using namespace modnet;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = clock_type::now();
  fn();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void set_threads(int k) {
#ifdef _OPENMP
  omp_set_num_threads(k);
#else
  (void)k;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void report(const char* name, double serial_ms, double one_ms, double par_ms) {
  std::printf("%-28s serial %9.2f ms   kernel@1 %9.2f ms   kernel@%d %9.2f ms   speedup %5.2fx\n",
              name, serial_ms, one_ms, max_threads(), par_ms,
              par_ms > 0 ? one_ms / par_ms : 0.0);
}

void check(bool ok, const char* what) {
  if (!ok) {
    std::printf("MISMATCH: %s\n", what);
    std::exit(1);
  }
}

}  // namespace

int main() {
  int threads = max_threads();
  std::printf("modnet benchmark (max threads: %d)\n\n", threads);

  // exact search, n = 11 (Bell(11) = 678570 partitions)
  {
    Partition planted(11, {NodeSet::of({0, 1, 2, 3}), NodeSet::of({4, 5, 6}),
                           NodeSet::of({7, 8, 9, 10})});
    WeightedGraph g = noisy_partition_graph(planted, 0.15, 0.1, 7);
    ClusterScore s = dual_weight_score(g);
    BruteForceResult ref{Partition::whole(1), 0, 0}, one{Partition::whole(1), 0, 0},
        par{Partition::whole(1), 0, 0};
    double t_ref = time_ms([&] { ref = serial::brute_force(s, value_tol); });
    set_threads(1);
    double t_one = time_ms([&] { one = kernels::brute_force(s, value_tol); });
    set_threads(threads);
    double t_par = time_ms([&] { par = kernels::brute_force(s, value_tol); });
    check(std::abs(ref.value - par.value) < 1e-9 && ref.partition == par.partition &&
              one.value == par.value && one.partition == par.partition,
          "brute force results differ");
    report("brute force n=11", t_ref, t_one, t_par);
  }

  // objective sum over a dense support (uniform cover, n = 14, cubic score)
  {
    WeightedGraph g = half_regular(14);
    ClusterScore s = cubic_triangle_score(g, 0.5);
    FuzzyCover q = uniform_cover(14);
    SupportMap sup = q.support();
    std::vector<const SupportEntry*> entries;
    entries.reserve(sup.size());
    for (const auto& [a, entry] : sup) entries.push_back(&entry);

    double v_ref = 0, v_one = 0, v_par = 0;
    double t_ref = time_ms([&] { v_ref = serial::support_sum(s, entries); });
    set_threads(1);
    double t_one = time_ms([&] { v_one = kernels::support_sum(s, entries); });
    set_threads(threads);
    double t_par = time_ms([&] { v_par = kernels::support_sum(s, entries); });
    check(std::abs(v_ref - v_par) < 1e-9 && v_one == v_par, "support sums differ");
    report("objective sum n=14", t_ref, t_one, t_par);
  }

  // average-derivative scan over every support subset (n = 14)
  {
    WeightedGraph g = half_regular(14);
    ClusterScore s = modularity_score(g);
    FuzzyCover q = uniform_cover(14);
    SupportMap sup = q.support();
    std::vector<ScanItem> items;
    items.reserve(sup.size());
    for (const auto& [a, entry] : sup) items.push_back({&a, &entry});

    std::vector<double> v_ref, v_one, v_par;
    double t_ref = time_ms([&] { v_ref = serial::average_derivative_scan(s, items); });
    set_threads(1);
    double t_one = time_ms([&] { v_one = kernels::average_derivative_scan(s, items); });
    set_threads(threads);
    double t_par = time_ms([&] { v_par = kernels::average_derivative_scan(s, items); });
    check(v_ref == v_par && v_one == v_par, "derivative scans differ");
    report("derivative scan n=14", t_ref, t_one, t_par);
  }

  // merge-gain matrix over 80 blocks of 20 nodes (n = 1600)
  {
    Partition planted(1600, [] {
      std::vector<NodeSet> blocks;
      for (int b = 0; b < 80; ++b) {
        NodeSet a;
        for (int i = 0; i < 20; ++i) a.add(b * 20 + i);
        blocks.push_back(a);
      }
      return blocks;
    }());
    WeightedGraph g = noisy_partition_graph(planted, 0.005, 0.1, 3);
    ClusterScore s = dual_weight_score(g);
    const std::vector<NodeSet>& blocks = planted.blocks();

    std::vector<double> v_ref, v_one, v_par;
    double t_ref = time_ms([&] { v_ref = serial::pair_gains(s, blocks); });
    set_threads(1);
    double t_one = time_ms([&] { v_one = kernels::pair_gains(s, blocks); });
    set_threads(threads);
    double t_par = time_ms([&] { v_par = kernels::pair_gains(s, blocks); });
    check(v_ref == v_par && v_one == v_par, "gain matrices differ");
    report("merge gains 80 blocks", t_ref, t_one, t_par);
  }

  std::printf("\nall kernel results matched the serial reference\n");
  return 0;
}
