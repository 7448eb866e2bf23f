#include <vector>

#include "doctest.h"
#include "dcq/errors.hpp"
#include "dcq/generate.hpp"
#include "dcq/oracle.hpp"
#include "dcq/range_tables.hpp"
#include "test_support.hpp"

using namespace dcq;
using dcq::testing::disk;
using dcq::testing::disks_from;
using dcq::testing::q;

namespace {

IntersectionGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  IntersectionGraph g(n);
  for (auto [a, b] : edges) g.connect(a, b);
  return g;
}

}  // namespace

TEST_CASE("intersection_graph") {
  const auto tangent = disks_from(
      {disk("a", "0", "0", "1"), disk("b", "2", "0", "1"), disk("c", "1", "1.5", "1")});
  const auto g = intersection_graph(tangent);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 0));

  const auto far = disks_from({disk("a", "0", "0", "1"), disk("b", "9", "0", "1")});
  CHECK(intersection_graph(far).row(0) == 0);

  DiskGenOptions o;
  o.n = 10;
  o.k = 3;
  o.seed = 21;
  const auto inst = generate_disks(o);
  const auto rg = intersection_graph(inst);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = 0; j < inst.size(); ++j) {
      if (i == j) continue;
      CHECK(rg.adjacent(i, j) == disks_intersect(inst.disks[i], inst.disks[j]));
    }
  }
}

TEST_CASE("bron_kerbosch examples") {
  const auto tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(bron_kerbosch_max_clique(tri).size() == 3);
  CHECK(bron_kerbosch_max_clique(IntersectionGraph(5)).size() == 1);
  CHECK(bron_kerbosch_max_clique(IntersectionGraph(5)) == std::vector<Index>{0});
  // Complement of C5 is again a 5-cycle.
  const auto c5c = from_edges(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(bron_kerbosch_max_clique(c5c, Pivoting::None) == std::vector<Index>{0, 2});
  CHECK(bron_kerbosch_max_clique(c5c, Pivoting::Degeneracy) == std::vector<Index>{0, 2});
  CHECK(bron_kerbosch_max_clique(IntersectionGraph(0)).empty());
}

TEST_CASE("pivoting and plain enumeration agree with subset search") {
  dcq::testing::RationalRng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.index(16);
    IntersectionGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.coin(0.5)) g.connect(i, j);
      }
    }
    const auto plain = bron_kerbosch_max_clique(g, Pivoting::None);
    const auto pivot = bron_kerbosch_max_clique(g, Pivoting::Degeneracy);
    CHECK(plain == pivot);
    CHECK(plain.size() == dcq::testing::brute_force_clique(
                              n, [&](std::size_t a, std::size_t b) { return g.adjacent(a, b); }));
  }
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(bron_kerbosch_max_clique(IntersectionGraph(26), Pivoting::None),
                  PreconditionError);
  CHECK_NOTHROW(bron_kerbosch_max_clique(IntersectionGraph(60), Pivoting::Degeneracy));
  CHECK_THROWS_AS(bron_kerbosch_max_clique(IntersectionGraph(61)), PreconditionError);
  CHECK_THROWS_AS(IntersectionGraph(65), PreconditionError);
}

TEST_CASE("naive_rect_clique") {
  const UnitInstance inst(disks_from(
      {disk("a", "0", "0", "1"), disk("b", "1", "0.5", "1"), disk("c", "5", "5", "1")}));
  CHECK(naive_rect_clique(inst, Rect{q("10"), q("10"), q("11"), q("11")}) == 0);
  CHECK(naive_rect_clique(inst, Rect{q("4"), q("4"), q("6"), q("6")}) == 1);
  CHECK(naive_rect_clique(inst, Rect{q("-1"), q("-1"), q("6"), q("6")}) == 2);
  CHECK(naive_rect_clique(inst, 0, 1, 1, 0) == 2);
  CHECK(naive_rect_clique(inst, 1, 2, 2, 2) == 1);
}
