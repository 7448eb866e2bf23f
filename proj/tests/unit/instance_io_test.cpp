#include <string>

#include "doctest.h"
#include "dcq/errors.hpp"
#include "dcq/generate.hpp"
#include "dcq/instance_io.hpp"
#include "dcq/range_tables.hpp"
#include "test_support.hpp"

using namespace dcq;

TEST_CASE("id_less is natural order") {
  CHECK(id_less("2", "10"));
  CHECK_FALSE(id_less("10", "2"));
  CHECK(id_less("99", "a"));
  CHECK(id_less("a", "b"));
  CHECK(id_less("007", "8"));
  CHECK_FALSE(id_less("x", "x"));
}

TEST_CASE("parse_disk_instance") {
  const std::string text = R"({"type":"disks","disks":[
    {"id":"10","x":"0.5","y":"-1","r":"2"},
    {"id":"2","x":3,"y":"7/2","r":"1"}]})";
  CHECK(instance_kind(text) == InstanceKind::Disks);
  const auto inst = parse_disk_instance(text);
  REQUIRE(inst.size() == 2);
  CHECK(inst.disks[0].id == "2");
  CHECK(inst.disks[0].center.y == Scalar(7, 2));
  CHECK(inst.disks[1].center.x == Scalar(1, 2));

  CHECK_THROWS_AS(parse_disk_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_disk_instance(R"({"type":"disks","disks":[{"id":"a","x":0.5,"y":"0","r":"1"}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_disk_instance(R"({"type":"disks","disks":[{"id":"a","x":"zz","y":"0","r":"1"}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_disk_instance(R"({"type":"disks","disks":[{"id":"a","x":"0","y":"0"}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_disk_instance(
          R"({"type":"disks","disks":[{"id":"a","x":"0","y":"0","r":"1"},{"id":"a","x":"1","y":"0","r":"1"}]})"),
      ValidationError);
  CHECK_THROWS_AS(parse_disk_instance(R"({"type":"disks","disks":[{"id":"a","x":"0","y":"0","r":"-1"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(instance_kind(R"({"type":"cubes"})"), ParseError);
}

TEST_CASE("parse_ball_instance") {
  const std::string text = R"({"type":"balls","plane_kind":"perp",
    "planes":[{"id":7,"alpha":"1","gamma":"1","delta":"2"}],
    "balls":[{"id":"a","x":"1","y":"5","z":"1","r":"2","plane":7}]})";
  CHECK(instance_kind(text) == InstanceKind::Balls);
  const auto inst = parse_ball_instance(text);
  CHECK(inst.plane_kind == PlaneKind::PerpToXZ);
  CHECK(inst.plane_labels == std::vector<std::int64_t>{7});
  CHECK(inst.balls[0].plane == 0);

  const std::string off_plane = R"({"type":"balls","plane_kind":"parallel",
    "planes":[{"id":0,"z":"1"}],
    "balls":[{"id":"a","x":"1","y":"5","z":"1.5","r":"2","plane":0}]})";
  CHECK_THROWS_AS(parse_ball_instance(off_plane), ValidationError);
  const std::string unknown_plane = R"({"type":"balls","plane_kind":"parallel",
    "planes":[{"id":0,"z":"1"}],
    "balls":[{"id":"a","x":"1","y":"5","z":"1","r":"2","plane":3}]})";
  CHECK_THROWS_AS(parse_ball_instance(unknown_plane), ValidationError);
}

TEST_CASE("serialize and parse round-trip exactly") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    DiskGenOptions d;
    d.seed = seed;
    d.k = 3;
    d.decimals = 3;
    const auto disks = generate_disks(d);
    const auto back = parse_disk_instance(serialize_instance(disks));
    CHECK(canonical_form(back) == canonical_form(disks));
    CHECK(serialize_instance(back) == serialize_instance(disks));

    BallGenOptions b;
    b.seed = seed;
    b.kind = seed % 2 ? PlaneKind::ParallelXY : PlaneKind::PerpToXZ;
    const auto balls = generate_balls(b);
    const auto bback = parse_ball_instance(serialize_instance(balls));
    CHECK(canonical_form(bback) == canonical_form(balls));
  }
  auto fraction = make_disk_instance({Disk{"a", {Scalar(1, 3), Scalar(0)}, Scalar(1)}});
  CHECK(parse_disk_instance(serialize_instance(fraction)).disks[0].center.x == Scalar(1, 3));
}

TEST_CASE("digests") {
  DiskGenOptions d;
  d.seed = 3;
  const auto a = generate_disks(d);
  auto b = a;
  CHECK(instance_digest(a) == instance_digest(b));
  b.disks[0].radius += 1;
  CHECK(instance_digest(a) != instance_digest(b));
  CHECK(digest_hex(0xabcULL) == "0000000000000abc");
  CHECK(digest_hex(instance_digest(a)).size() == 16);
}

TEST_CASE("generators are deterministic and validated") {
  DiskGenOptions d;
  d.n = 5;
  d.seed = 7;
  CHECK(serialize_instance(generate_disks(d)) == serialize_instance(generate_disks(d)));
  d.n = 0;
  CHECK_THROWS_AS(generate_disks(d), PreconditionError);
  d.n = 5;
  d.k = 4;
  CHECK_THROWS_AS(generate_disks(d), PreconditionError);

  DiskGenOptions gp;
  gp.n = 30;
  gp.general_position = true;
  gp.decimals = 2;
  CHECK(in_general_position(generate_disks(gp)));

  BallGenOptions b;
  b.planes = 2;
  b.seed = 1;
  for (PlaneKind kind : {PlaneKind::ParallelXY, PlaneKind::PerpToXZ}) {
    b.kind = kind;
    const auto balls = generate_balls(b);
    for (const auto& ball : balls.balls) CHECK(balls.planes[ball.plane].contains(ball.center));
  }
}
