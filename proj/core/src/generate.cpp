#include "dcq/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "dcq/errors.hpp"

namespace dcq {
namespace {

Scalar pow10(unsigned e) {
  Scalar v(1);
  for (unsigned i = 0; i < e; ++i) v *= 10;
  return v;
}

class Grid {
 public:
  Grid(const Scalar& extent, unsigned decimals) : unit_(1 / pow10(decimals)) {
    Scalar steps = extent * pow10(decimals);
    if (steps < 0 || steps.get_den() != 1) {
      throw PreconditionError("generator extent must be a nonnegative multiple of the grid step");
    }
    steps_ = steps.get_num().get_ui();
  }

  std::uint64_t steps() const { return steps_; }
  Scalar value(std::uint64_t step) const { return unit_ * Scalar(mpz_class(std::to_string(step))); }

  template <typename Rng>
  Scalar draw(Rng& rng) const {
    return value(std::uniform_int_distribution<std::uint64_t>(0, steps_)(rng));
  }

  template <typename Rng>
  std::vector<Scalar> draw_distinct(Rng& rng, std::size_t count) const {
    if (steps_ + 1 < count) throw PreconditionError("grid too coarse for distinct coordinates");
    std::vector<std::uint64_t> picked;
    while (picked.size() < count) {
      std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(0, steps_)(rng);
      if (std::find(picked.begin(), picked.end(), s) == picked.end()) picked.push_back(s);
    }
    std::vector<Scalar> out;
    for (auto s : picked) out.push_back(value(s));
    return out;
  }

 private:
  Scalar unit_;
  std::uint64_t steps_ = 0;
};

}  // namespace

DiskInstance generate_disks(const DiskGenOptions& o) {
  if (o.n == 0) throw PreconditionError("generate_disks: n must be positive");
  if (o.k == 0 || o.k > o.radii.size()) {
    throw PreconditionError("generate_disks: k must be in [1, number of radii]");
  }
  if (o.general_position && o.k != 1) {
    throw PreconditionError("generate_disks: general-position instances are unit-disk (k = 1)");
  }
  std::mt19937_64 rng(o.seed);
  const Grid grid(o.extent, o.decimals);
  std::vector<Scalar> xs;
  std::vector<Scalar> ys;
  if (o.general_position) {
    xs = grid.draw_distinct(rng, o.n);
    ys = grid.draw_distinct(rng, o.n);
  }
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < o.n; ++i) {
    Disk d;
    d.id = std::to_string(i);
    if (o.general_position) {
      d.center = Point2{xs[i], ys[i]};
    } else {
      Scalar x = grid.draw(rng);
      d.center = Point2{x, grid.draw(rng)};
    }
    const std::size_t cls = std::uniform_int_distribution<std::size_t>(0, o.k - 1)(rng);
    d.radius = o.radii[cls];
    disks.push_back(std::move(d));
  }
  return make_disk_instance(std::move(disks));
}

BallInstance generate_balls(const BallGenOptions& o) {
  if (o.n == 0) throw PreconditionError("generate_balls: n must be positive");
  if (o.planes == 0) throw PreconditionError("generate_balls: need at least one plane");
  if (o.k == 0 || o.k > o.radii.size()) {
    throw PreconditionError("generate_balls: k must be in [1, number of radii]");
  }
  std::mt19937_64 rng(o.seed);
  const Grid grid(o.extent, o.decimals);

  std::vector<Plane> planes;
  std::vector<std::int64_t> labels;
  for (std::size_t j = 0; j < o.planes; ++j) {
    labels.push_back(static_cast<std::int64_t>(j));
    if (o.kind == PlaneKind::ParallelXY) {
      planes.push_back(Plane::parallel_xy(Scalar(static_cast<long>(j))));
      continue;
    }
    static constexpr int kGammas[] = {0, 1, 2, 4, 5};
    const int gamma = kGammas[std::uniform_int_distribution<int>(0, 4)(rng)];
    const int alpha = gamma == 0 ? 1 : std::uniform_int_distribution<int>(-2, 2)(rng);
    const int delta = std::uniform_int_distribution<int>(0, 4)(rng);
    planes.push_back(Plane::perp_to_xz(Scalar(alpha), Scalar(gamma), Scalar(delta)));
  }

  std::vector<Ball> balls;
  for (std::size_t i = 0; i < o.n; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, o.planes - 1)(rng);
    const Plane& plane = planes[j];
    Point3 c;
    c.y = grid.draw(rng);
    if (plane.kind() == PlaneKind::ParallelXY) {
      c.x = grid.draw(rng);
      c.z = plane.z0();
    } else if (plane.gamma() == 0) {
      c.x = plane.delta() / plane.alpha();
      c.z = grid.draw(rng);
    } else {
      c.x = grid.draw(rng);
      c.z = (plane.delta() - plane.alpha() * c.x) / plane.gamma();
    }
    const std::size_t cls = std::uniform_int_distribution<std::size_t>(0, o.k - 1)(rng);
    balls.push_back(Ball{std::to_string(i), std::move(c), o.radii[cls], j});
  }
  return make_ball_instance(o.kind, std::move(planes), std::move(labels), std::move(balls));
}

}  // namespace dcq
