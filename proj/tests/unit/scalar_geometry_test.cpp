#include <algorithm>

#include "doctest.h"
#include "dcq/errors.hpp"
#include "dcq/geometry.hpp"
#include "test_support.hpp"

using namespace dcq;
using dcq::testing::disk;
using dcq::testing::pt;
using dcq::testing::q;

TEST_CASE("parse_scalar reads decimals, exponents and fractions exactly") {
  CHECK(q("12") == Scalar(12));
  CHECK(q("-0.125") == Scalar(-1, 8));
  CHECK(q("3.5e-2") == Scalar(7, 200));
  CHECK(q("1E3") == Scalar(1000));
  CHECK(q("7/3") == Scalar(7, 3));
  CHECK(q("+.5") == Scalar(1, 2));
  CHECK(q("0.1") + q("0.2") == q("0.3"));
  for (const char* bad : {"", "abc", "1.2.3", "1/0", "--1", "1e", "nan", "inf", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
  }
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(q("-0.125")) == "-0.125");
  CHECK(to_string(q("3.000")) == "3");
  CHECK(to_string(q("7/3")) == "7/3");
  CHECK(to_string(q("14/6")) == "7/3");
  CHECK(to_string(q("0")) == "0");
  dcq::testing::RationalRng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Scalar v = rng.uniform(-50, 50, 1 + static_cast<std::int64_t>(rng.index(97)));
    CHECK(parse_scalar(to_string(v)) == v);
  }
}

TEST_CASE("dist_sq") {
  CHECK(dist_sq(pt("0", "0"), pt("0", "0")) == 0);
  CHECK(dist_sq(pt("0", "0"), pt("3", "4")) == 25);
  CHECK(dist_sq(pt("1", "2", "2"), pt("0", "0", "0")) == 9);
  CHECK(dist_sq(pt("3", "4"), pt("0", "0")) == dist_sq(pt("0", "0"), pt("3", "4")));
}

TEST_CASE("disks_intersect uses closed disks") {
  CHECK(disks_intersect(disk("a", "0", "0", "1"), disk("b", "2", "0", "1")));
  CHECK_FALSE(disks_intersect(disk("a", "0", "0", "1"), disk("b", "3", "0", "1")));
  CHECK(disks_intersect(disk("a", "0", "0", "2"), disk("b", "1", "0", "1")));
  CHECK_FALSE(disks_intersect(disk("a", "0", "0", "1"), disk("b", "2.0000001", "0", "1")));
}

TEST_CASE("balls_intersect uses closed balls") {
  auto ball = [](const char* x, const char* y, const char* z, const char* r) {
    return Ball{"b", pt(x, y, z), q(r), 0};
  };
  CHECK(balls_intersect(ball("0", "0", "0", "1"), ball("0", "0", "2", "1")));
  CHECK_FALSE(balls_intersect(ball("0", "0", "0", "1"), ball("2", "2", "1", "1")));
  CHECK(balls_intersect(ball("0", "0", "0", "3"), ball("1", "1", "1", "1")));
}

TEST_CASE("in_slab for a non-vertical segment") {
  const Point2 a = pt("0", "0");
  const Point2 b = pt("4", "0");
  CHECK(in_slab(a, b, pt("2", "1"), Side::Upper));
  CHECK_FALSE(in_slab(a, b, pt("5", "1"), Side::Upper));
  CHECK(in_slab(a, b, pt("2", "0"), Side::Lower));
  CHECK(in_slab(a, b, pt("2", "0"), Side::Upper));
  CHECK_FALSE(in_slab(a, b, pt("2", "1"), Side::Lower));
  CHECK(in_slab(a, b, pt("4", "-3"), Side::Lower));
  // Slanted segment, argument order irrelevant.
  const Point2 c = pt("0", "0");
  const Point2 d = pt("2", "2");
  CHECK(in_slab(c, d, pt("1", "1"), Side::Upper));
  CHECK(in_slab(d, c, pt("1", "1.5"), Side::Upper));
  CHECK_FALSE(in_slab(d, c, pt("1", "0.5"), Side::Upper));
  CHECK(in_slab(d, c, pt("1", "0.5"), Side::Lower));
}

TEST_CASE("in_slab for vertical and degenerate segments covers the line") {
  const Point2 a = pt("1", "0");
  const Point2 b = pt("1", "3");
  CHECK(in_slab(a, b, pt("1", "5"), Side::Upper));
  CHECK(in_slab(a, b, pt("1", "1"), Side::Upper));
  CHECK(in_slab(a, b, pt("1", "1"), Side::Lower));
  CHECK_FALSE(in_slab(a, b, pt("1", "-1"), Side::Upper));
  CHECK(in_slab(a, b, pt("1", "-1"), Side::Lower));
  CHECK_FALSE(in_slab(a, b, pt("1", "4"), Side::Lower));
  CHECK_FALSE(in_slab(a, b, pt("2", "1"), Side::Upper));

  const Point2 c = pt("2", "2");
  CHECK(in_slab(c, c, pt("2", "2"), Side::Upper));
  CHECK(in_slab(c, c, pt("2", "2"), Side::Lower));
  CHECK(in_slab(c, c, pt("2", "9"), Side::Upper));
  CHECK_FALSE(in_slab(c, c, pt("2", "9"), Side::Lower));
  CHECK_FALSE(in_slab(c, c, pt("2.5", "9"), Side::Upper));
}

TEST_CASE("upper and lower slabs cover the vertical strip") {
  dcq::testing::RationalRng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Point2 a{rng.uniform(-4, 4, 2), rng.uniform(-4, 4, 2)};
    const Point2 b = rng.coin(0.2) ? Point2{a.x, rng.uniform(-4, 4, 2)}
                                   : Point2{rng.uniform(-4, 4, 2), rng.uniform(-4, 4, 2)};
    const Scalar lo = std::min(a.x, b.x);
    const Scalar hi = std::max(a.x, b.x);
    const Point2 p{lo + (hi - lo) * rng.uniform(0, 1, 8), rng.uniform(-6, 6, 4)};
    const bool up = in_slab(a, b, p, Side::Upper);
    const bool down = in_slab(a, b, p, Side::Lower);
    CHECK((up || down));
  }
}

TEST_CASE("in_slab_on_plane") {
  CHECK(in_slab_on_plane(pt("0", "0", "5"), pt("4", "0", "5"), pt("2", "1", "5"), Side::Upper));
  CHECK_FALSE(
      in_slab_on_plane(pt("0", "0", "5"), pt("4", "0", "5"), pt("2", "-1", "5"), Side::Upper));
  CHECK_THROWS_AS(
      in_slab_on_plane(pt("0", "0", "5"), pt("4", "0", "5"), pt("2", "1", "6"), Side::Upper),
      PreconditionError);
}

TEST_CASE("slab_bound_holds examples and preconditions") {
  CHECK(slab_bound_holds(pt("0", "0"), pt("4", "0"), pt("2", "1"), pt("2", "3")));
  CHECK(slab_bound_holds(pt("0", "0"), pt("4", "0"), pt("4", "0"), pt("0", "5")));
  CHECK_THROWS_AS(slab_bound_holds(pt("0", "0"), pt("4", "0"), pt("2", "-1"), pt("2", "3")),
                  PreconditionError);
  CHECK_THROWS_AS(slab_bound_holds(pt("0", "0"), pt("4", "0"), pt("2", "1"), pt("2", "0")),
                  PreconditionError);
  CHECK(slab_bound_holds(pt("0", "0", "1"), pt("4", "0", "1"), pt("2", "1", "1"),
                         pt("9", "2", "-4")));
}

TEST_CASE("slab_bound_holds on random configurations") {
  dcq::testing::RationalRng rng(99);
  int checked = 0;
  while (checked < 3000) {
    const Point2 a{rng.uniform(-5, 5, 3), rng.uniform(-5, 5, 3)};
    const Point2 b{rng.uniform(-5, 5, 3), rng.uniform(-5, 5, 3)};
    const Point2 qq{rng.uniform(-5, 5, 3), rng.uniform(-5, 8, 3)};
    if (!in_slab(a, b, qq, Side::Upper)) continue;
    const Point2 p{rng.uniform(-20, 20, 3), qq.y + rng.uniform(0, 10, 3)};
    REQUIRE(slab_bound_holds(a, b, qq, p));
    ++checked;
  }
}

TEST_CASE("project_xz") {
  CHECK(project_xz(pt("1", "7", "2")) == pt("1", "2"));
  CHECK(project_xz(pt("0", "0", "0")) == pt("0", "0"));
  CHECK(project_xz(pt("-3", "5", "-3")) == pt("-3", "-3"));
}

TEST_CASE("planes") {
  const Plane flat = Plane::parallel_xy(q("2"));
  CHECK(flat.contains(pt("5", "-1", "2")));
  CHECK_FALSE(flat.contains(pt("5", "-1", "2.5")));
  CHECK(flat.axis_position(pt("5", "-1", "2")) == 5);

  const Plane tilted = Plane::perp_to_xz(q("-1"), q("-1"), q("-2"));
  CHECK(tilted == Plane::perp_to_xz(q("1"), q("1"), q("2")));
  CHECK(tilted.contains(pt("1", "100", "1")));
  CHECK(tilted.contains(pt("2", "-3", "0")));
  CHECK_FALSE(tilted.contains(pt("2", "-3", "1")));
  // Trace direction (1, -1): positions increase with x along the trace.
  CHECK(tilted.axis_position(pt("2", "0", "0")) > tilted.axis_position(pt("1", "7", "1")));
  CHECK_THROWS_AS(Plane::perp_to_xz(q("0"), q("0"), q("1")), ValidationError);
}
