#include <string>
#include <vector>

#include "doctest.h"
#include "dcq/errors.hpp"
#include "dcq/generate.hpp"
#include "dcq/kradii.hpp"
#include "test_support.hpp"

using namespace dcq;
using dcq::testing::disk;
using dcq::testing::disks_from;

namespace {

std::size_t exhaustive(const DiskInstance& inst) {
  return dcq::testing::brute_force_clique(inst.size(), [&](std::size_t i, std::size_t j) {
    return disks_intersect(inst.disks[i], inst.disks[j]);
  });
}

}  // namespace

TEST_CASE("max_clique_kradii small cases") {
  const auto single = disks_from({disk("x", "1", "1", "3")});
  const auto one = max_clique_kradii(single);
  CHECK(one.ids == std::vector<Index>{0});

  const auto tri = disks_from(
      {disk("p", "0", "0", "1"), disk("q", "1", "0", "1"), disk("r", "0.5", "0.5", "1")});
  CHECK(max_clique_kradii(tri).size() == 3);

  const auto five = disks_from({disk("a", "0", "0", "1"), disk("b", "0.5", "0", "1"),
                                disk("c", "1", "0", "1"), disk("d", "10", "0", "1"),
                                disk("e", "10.5", "0", "1")});
  const auto res = max_clique_kradii(five);
  CHECK(res.ids == std::vector<Index>{0, 1, 2});
  CHECK(res.size() == exhaustive(five));

  CHECK_THROWS_AS(max_clique_kradii(DiskInstance{}), PreconditionError);
}

TEST_CASE("mixed radii: a big disk joins two small cliques") {
  const auto inst = disks_from({disk("s1", "-3", "0", "1"), disk("s2", "-2.5", "0", "1"),
                                disk("s3", "3", "0", "1"), disk("s4", "3.5", "0", "1"),
                                disk("big", "0", "0", "3.5")});
  CHECK(max_clique_kradii(inst).size() == exhaustive(inst));
}

TEST_CASE("max_clique_kradii matches exhaustive search on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    DiskGenOptions o;
    o.n = 4 + seed % 9;
    o.k = 1 + seed % 3;
    o.seed = seed;
    o.extent = Scalar(5 + static_cast<long>(seed % 4));
    const auto inst = generate_disks(o);
    SearchOptions opts;
    opts.verify_sides = true;
    const auto res = max_clique_kradii(inst, opts);
    CAPTURE(seed);
    CHECK(res.size() == exhaustive(inst));
    CHECK(dcq::testing::is_clique(inst.disks, res.ids, disks_intersect));
  }
}

TEST_CASE("threads do not change the answer") {
  DiskGenOptions o;
  o.n = 14;
  o.k = 2;
  o.seed = 5;
  o.extent = Scalar(5);
  const auto inst = generate_disks(o);
  SearchOptions one;
  SearchOptions four;
  four.threads = 4;
  SearchStats s1;
  SearchStats s4;
  const auto a = max_clique_kradii(inst, one, &s1);
  const auto b = max_clique_kradii(inst, four, &s4);
  CHECK(a.ids == b.ids);
  CHECK(a.witness_guess == b.witness_guess);
  CHECK(s1.guesses_solved == s4.guesses_solved);
  CHECK(s1.guess_estimate == s4.guess_estimate);
}

TEST_CASE("budget warns by default and fails when enforced") {
  DiskGenOptions o;
  o.n = 10;
  o.seed = 2;
  const auto inst = generate_disks(o);
  SearchOptions warn_only;
  warn_only.budget = 5;
  std::vector<std::string> warnings;
  warn_only.warn = [&](std::string_view w) { warnings.emplace_back(w); };
  CHECK_NOTHROW(max_clique_kradii(inst, warn_only));
  CHECK(warnings.size() == 1);

  SearchOptions strict = warn_only;
  strict.enforce_budget = true;
  CHECK_THROWS_AS(max_clique_kradii(inst, strict), BudgetExceeded);
}

TEST_CASE("ties resolve to the smallest index list") {
  // Two disjoint pairs; the pair with smaller ids wins.
  const auto inst = disks_from({disk("1", "10", "0", "1"), disk("2", "11", "0", "1"),
                                disk("3", "0", "0", "1"), disk("4", "1", "0", "1")});
  CHECK(max_clique_kradii(inst).ids == std::vector<Index>{0, 1});
}
