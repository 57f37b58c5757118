#include <doctest.h>

#include <algorithm>
#include <set>

#include "modnet/nodeset.hpp"
#include "modnet/rng.hpp"

using namespace modnet;

TEST_CASE("nodeset basics") {
  NodeSet a = NodeSet::of({2, 0, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(0));
  CHECK(a.contains(2));
  CHECK(!a.contains(1));
  CHECK(a.front() == 0);
  CHECK(a.back() == 5);
  CHECK(a.members() == std::vector<int>{0, 2, 5});
  CHECK(a.to_string() == "{0 2 5}");

  a.remove(5);
  CHECK(a == NodeSet::of({0, 2}));
  CHECK(NodeSet().empty());
  CHECK(NodeSet().front() == -1);
  CHECK(NodeSet::full(4).members() == std::vector<int>{0, 1, 2, 3});
  CHECK(NodeSet::full(70).size() == 70);
  CHECK(NodeSet::from_mask(0b1011).members() == std::vector<int>{0, 1, 3});
  CHECK(NodeSet::of({1, 3}).mask64() == 0b1010);
}

TEST_CASE("nodeset set operations") {
  NodeSet a = NodeSet::of({0, 1, 2});
  NodeSet b = NodeSet::of({2, 3});
  CHECK(a.set_union(b) == NodeSet::of({0, 1, 2, 3}));
  CHECK(a.set_intersection(b) == NodeSet::of({2}));
  CHECK(a.set_minus(b) == NodeSet::of({0, 1}));
  CHECK(a.set_symmetric_difference(b) == NodeSet::of({0, 1, 3}));
  CHECK(a.intersects(b));
  CHECK(!a.intersects(NodeSet::of({3, 4})));
  CHECK(a.contains_all(NodeSet::of({0, 2})));
  CHECK(!a.contains_all(b));
  CHECK(a.contains_all(NodeSet()));

  // across word boundaries
  NodeSet wide = NodeSet::of({1, 63, 64, 130});
  CHECK(wide.size() == 4);
  CHECK(wide.set_minus(NodeSet::of({64})).members() == std::vector<int>{1, 63, 130});
  CHECK(wide.intersects(NodeSet::of({130})));
}

TEST_CASE("nodeset ordering is lexicographic on member lists") {
  CHECK(NodeSet::of({0, 3}) < NodeSet::of({1, 2}));
  CHECK(NodeSet::of({0, 1}) < NodeSet::of({0, 1, 2}));
  CHECK(NodeSet::of({0, 1, 2}) < NodeSet::of({0, 3}));
  CHECK(NodeSet() < NodeSet::of({0}));
  CHECK(!(NodeSet::of({1}) < NodeSet::of({1})));

  // agreement with std::lexicographical_compare on random pairs
  Rng rng(411);
  for (int trial = 0; trial < 500; ++trial) {
    NodeSet x, y;
    for (int i = 0; i < 90; ++i) {
      if (rng.uniform01() < 0.2) x.add(i);
      if (rng.uniform01() < 0.2) y.add(i);
    }
    auto xm = x.members(), ym = y.members();
    bool expect = std::lexicographical_compare(xm.begin(), xm.end(), ym.begin(), ym.end());
    CHECK((x < y) == expect);
  }
}

TEST_CASE("nodeset equality and hashing by member set") {
  NodeSet a = NodeSet::of({0, 64});
  NodeSet b;
  b.add(64);
  b.add(0);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  b.remove(64);  // trailing word trimmed, so {0} built differently still matches
  CHECK(b == NodeSet::single(0));
  CHECK(b.hash() == NodeSet::single(0).hash());

  std::set<NodeSet> pool;
  pool.insert(NodeSet::of({0, 1}));
  pool.insert(NodeSet::of({1, 0}));
  CHECK(pool.size() == 1);
}
