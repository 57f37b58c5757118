#include <doctest.h>

#include <cmath>

#include "modnet/mle.hpp"
#include "modnet/mobius.hpp"
#include "modnet/score.hpp"
#include "helpers.hpp"

using namespace modnet;
using doctest::Approx;

namespace {

WeightedGraph k2() { return partition_graph(Partition::whole(2)); }

std::vector<double> indicator(int n, const NodeSet& a) {
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  a.for_each([&](int i) { x[static_cast<std::size_t>(i)] = 1.0; });
  return x;
}

}  // namespace

TEST_CASE("mle extends the set function to the cube") {
  // f(chi_A) = v(A) exhaustively, all four score kinds
  WeightedGraph g = half_regular(6);
  std::vector<ClusterScore> scores{modularity_score(g), dual_weight_score(g),
                                   common_neighbor_score(g), cubic_triangle_score(g, 0.7)};
  for (const ClusterScore& s : scores)
    for (std::uint64_t mask = 0; mask < (1ull << 6); ++mask) {
      NodeSet a = NodeSet::from_mask(mask);
      CHECK(mle_point(s, indicator(6, a)) == Approx(s.eval_set(a)).epsilon(1e-9));
    }

  ClusterScore s = dual_weight_score(k2());
  CHECK(mle_point(s, {0.0, 0.0}) == 0.0);
  CHECK(mle_point(s, {0.5, 0.5}) == Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(mle_point(s, {0.5, 1.5}), std::out_of_range);
  CHECK_THROWS_AS(mle_point(s, {0.5}), std::invalid_argument);
}

TEST_CASE("mle is affine in each coordinate") {
  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 6;
    ClusterScore s = testutil::random_score(n, seed % 2 == 1, seed);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& xi : x) xi = rng.uniform01();
    for (int i = 0; i < n; ++i) {
      double t = x[static_cast<std::size_t>(i)];
      std::vector<double> x0 = x, x1 = x;
      x0[static_cast<std::size_t>(i)] = 0.0;
      x1[static_cast<std::size_t>(i)] = 1.0;
      double expect = (1.0 - t) * mle_point(s, x0) + t * mle_point(s, x1);
      CHECK(mle_point(s, x) == Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("objective value of partition covers") {
  // exhaustive over every partition of a 7-node random graph
  WeightedGraph g = testutil::random_simple_graph(7, 0.5, 21);
  ClusterScore s = dual_weight_score(g);
  for (const Partition& p : all_partitions(7))
    CHECK(big_f(s, partition_to_cover(p)) ==
          Approx(s.eval_partition(p)).epsilon(1e-9));

  ClusterScore q = modularity_score(half_regular(6));
  Partition halves(6, {NodeSet::of({0, 1, 2}), NodeSet::of({3, 4, 5})});
  CHECK(big_f(q, partition_to_cover(halves)) == Approx(1.0 / 6).epsilon(1e-12));
}

TEST_CASE("objective worked example on one edge") {
  // both nodes split between their singleton and the pair
  ClusterScore s = dual_weight_score(k2());
  std::vector<MembershipDistribution> dists;
  for (int i = 0; i < 2; ++i)
    dists.emplace_back(i, std::map<NodeSet, double>{{NodeSet::single(i), 0.5},
                                                    {NodeSet::of({0, 1}), 0.5}});
  FuzzyCover q(std::move(dists));
  CHECK(big_f(s, q) == Approx(0.25).epsilon(1e-14));  // 0 + 1 * (0.5 * 0.5)
}

TEST_CASE("pairwise route agrees with the support sum") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);  // up to 8
    ClusterScore s = testutil::random_score(n, false, seed);
    FuzzyCover q = testutil::random_cover(n, 500 + seed);
    CHECK(big_f(s, q) == Approx(big_f_pairwise(s, q)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(
      big_f_pairwise(cubic_triangle_score(half_regular(6), 0.5), uniform_cover(6)),
      std::invalid_argument);
}

TEST_CASE("conditional scores") {
  ClusterScore s = dual_weight_score(k2());
  std::vector<MembershipDistribution> dists;
  dists.emplace_back(0, std::map<NodeSet, double>{{NodeSet::single(0), 1.0}});
  dists.emplace_back(1, std::map<NodeSet, double>{{NodeSet::of({0, 1}), 0.5},
                                                  {NodeSet::single(1), 0.5}});
  FuzzyCover q(std::move(dists));
  CHECK(conditional_score(s, q, 0, NodeSet::of({0, 1})) == Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(conditional_score(s, q, 0, NodeSet::of({1})), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 6;
    ClusterScore r = testutil::random_score(n, seed % 2 == 1, seed);
    FuzzyCover cover = testutil::random_cover(n, 40 + seed);
    // on the own singleton the conditional score is v({i}), whatever q is
    for (int i = 0; i < n; ++i)
      CHECK(conditional_score(r, cover, i, NodeSet::single(i)) ==
            Approx(r.singleton_value(i)).epsilon(1e-12));
    // with A\i crisp on A it is v(A) - v(A\i)
    NodeSet a = NodeSet::of({0, 1, 2, 3});
    FuzzyCover crisp = partition_to_cover(
        Partition(n, {NodeSet::of({0, 1, 2, 3}), NodeSet::of({4}), NodeSet::of({5})}));
    for (int i : a.members()) {
      NodeSet rest = a;
      rest.remove(i);
      CHECK(conditional_score(r, crisp, i, a) ==
            Approx(r.eval_set(a) - r.eval_set(rest)).epsilon(1e-9));
    }
  }
}

TEST_CASE("directional derivative identity") {
  // derivative equals the objective at a point mass minus the objective
  // with the node's mass removed entirely
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 4 + static_cast<int>(seed % 3);  // up to 6
    ClusterScore s = testutil::random_score(n, seed % 2 == 1, seed);
    FuzzyCover q = testutil::random_cover(n, 300 + seed);
    Rng rng(seed);
    int i = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    NodeSet a = NodeSet::single(i);
    for (int j = 0; j < n; ++j)
      if (j != i && rng.uniform01() < 0.5) a.add(j);

    testutil::RawCover point = testutil::to_raw(q);
    point[static_cast<std::size_t>(i)] = {{a, 1.0}};
    testutil::RawCover zero = testutil::to_raw(q);
    zero[static_cast<std::size_t>(i)].clear();
    double expect = testutil::big_f_raw(s, point) - testutil::big_f_raw(s, zero);
    CHECK(derivative_iA(s, q, i, a) == Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("scalar product decomposition of the objective") {
  // F = <q_i, conditional scores> + F of everyone else
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 4 + static_cast<int>(seed % 3);
    ClusterScore s = testutil::random_score(n, seed % 2 == 1, 77 + seed);
    FuzzyCover q = testutil::random_cover(n, 600 + seed);
    for (int i = 0; i < n; ++i) {
      testutil::RawCover rest = testutil::to_raw(q);
      rest[static_cast<std::size_t>(i)].clear();
      double f_rest = testutil::big_f_raw(s, rest);
      double dot = 0.0;
      for (const auto& [a, m] : q.dist(i).mass()) dot += m * conditional_score(s, q, i, a);
      CHECK(big_f(s, q) == Approx(f_rest + dot).epsilon(1e-9));
    }
  }
}

TEST_CASE("fuzzy clusterings score between the partition extremes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 4 + static_cast<int>(seed % 3);  // up to 6
    ClusterScore s = testutil::random_score(n, false, 900 + seed);
    FuzzyCover q = testutil::random_fuzzy_clustering(n, seed);
    testutil::PartitionExtremes ex = testutil::partition_extremes(s);
    double f = big_f(s, q);
    CHECK(f <= ex.best + 1e-9);
    CHECK(f >= ex.worst - 1e-9);
  }
}

TEST_CASE("average derivative closed forms on the half-regular graph") {
  for (int n : {6, 8}) {
    ClusterScore s = modularity_score(half_regular(n));
    FuzzyCover q0 = uniform_cover(n);
    double pot = std::ldexp(1.0, n - 2);  // 2^(n-2)

    // matching edge
    NodeSet match = NodeSet::of({0, n / 2});
    double expect_match = -(1.0 / (n * n)) * (1.0 - 1.0 / pot);
    CHECK(average_derivative(s, q0, match) == Approx(expect_match).epsilon(1e-12));

    // subsets inside one half
    for (int size : {2, 3, n / 2}) {
      NodeSet a;
      for (int i = 0; i < size; ++i) a.add(i);
      double expect = -(1.0 / (n * n)) * (1.0 - (size - 1) / pot);
      CHECK(average_derivative(s, q0, a) == Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("average derivative basics") {
  ClusterScore s = testutil::random_score(6, false, 5);
  FuzzyCover q = testutil::random_cover(6, 15);
  for (int i = 0; i < 6; ++i)
    CHECK(average_derivative(s, q, NodeSet::single(i)) ==
          Approx(s.singleton_value(i)).epsilon(1e-12));
  CHECK_THROWS_AS(average_derivative(s, q, NodeSet()), std::invalid_argument);

  // mean of the conditional scores, and the quadratic closed form
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FuzzyCover cover = testutil::random_cover(6, 100 + seed);
    NodeSet a = NodeSet::of({0, 2, 3, 5});
    double mean = 0.0;
    for (int i : a.members()) mean += conditional_score(s, cover, i, a);
    mean /= a.size();
    CHECK(average_derivative(s, cover, a) == Approx(mean).epsilon(1e-12));

    double closed = 0.0;
    for (int i : a.members()) closed += s.singleton_value(i);
    auto mem = a.members();
    for (std::size_t x = 0; x < mem.size(); ++x)
      for (std::size_t y = x + 1; y < mem.size(); ++y)
        closed += (cover.dist(mem[x]).mass_on(a) + cover.dist(mem[y]).mass_on(a)) *
                  s.mu2(mem[x], mem[y]);
    closed /= a.size();
    CHECK(average_derivative(s, cover, a) == Approx(closed).epsilon(1e-12));
  }
}
