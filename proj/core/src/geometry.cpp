#include "dcq/geometry.hpp"

#include <algorithm>

#include "dcq/errors.hpp"

namespace dcq {

Plane Plane::parallel_xy(Scalar z0) {
  Plane p;
  p.kind_ = PlaneKind::ParallelXY;
  p.z0_ = std::move(z0);
  return p;
}

Plane Plane::perp_to_xz(Scalar alpha, Scalar gamma, Scalar delta) {
  if (alpha == 0 && gamma == 0) {
    throw ValidationError("perpendicular plane needs (alpha, gamma) != (0, 0)");
  }
  const Scalar& lead = alpha != 0 ? alpha : gamma;
  if (lead < 0) {
    alpha = -alpha;
    gamma = -gamma;
    delta = -delta;
  }
  Plane p;
  p.kind_ = PlaneKind::PerpToXZ;
  p.alpha_ = std::move(alpha);
  p.gamma_ = std::move(gamma);
  p.delta_ = std::move(delta);
  return p;
}

bool Plane::contains(const Point3& p) const {
  if (kind_ == PlaneKind::ParallelXY) return p.z == z0_;
  return alpha_ * p.x + gamma_ * p.z == delta_;
}

Scalar Plane::axis_position(const Point3& p) const {
  if (kind_ == PlaneKind::ParallelXY) return p.x;
  // Trace direction (gamma, -alpha), first nonzero component made positive.
  Scalar dx = gamma_;
  Scalar dz = -alpha_;
  if (dx < 0 || (dx == 0 && dz < 0)) {
    dx = -dx;
    dz = -dz;
  }
  return dx * p.x + dz * p.z;
}

bool operator==(const Plane& a, const Plane& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == PlaneKind::ParallelXY) return a.z0_ == b.z0_;
  return a.alpha_ == b.alpha_ && a.gamma_ == b.gamma_ && a.delta_ == b.delta_;
}

Scalar dist_sq(const Point2& p, const Point2& q) {
  Scalar dx = p.x - q.x;
  Scalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Scalar dist_sq(const Point3& p, const Point3& q) {
  Scalar dx = p.x - q.x;
  Scalar dy = p.y - q.y;
  Scalar dz = p.z - q.z;
  return dx * dx + dy * dy + dz * dz;
}

bool disks_intersect(const Disk& a, const Disk& b) {
  Scalar reach = a.radius + b.radius;
  return dist_sq(a.center, b.center) <= reach * reach;
}

bool balls_intersect(const Ball& a, const Ball& b) {
  Scalar reach = a.radius + b.radius;
  return dist_sq(a.center, b.center) <= reach * reach;
}

bool in_slab(const Point2& a, const Point2& b, const Point2& q, Side side) {
  if (a.x == b.x) {
    if (q.x != a.x) return false;
    if (side == Side::Upper) return q.y >= std::min(a.y, b.y);
    return q.y <= std::max(a.y, b.y);
  }
  const Point2& left = a.x < b.x ? a : b;
  const Point2& right = a.x < b.x ? b : a;
  if (q.x < left.x || q.x > right.x) return false;
  // Positive when q is strictly above the line through left and right.
  Scalar orient = (right.x - left.x) * (q.y - left.y) - (right.y - left.y) * (q.x - left.x);
  return side == Side::Upper ? orient >= 0 : orient <= 0;
}

bool in_slab_on_plane(const Point3& a, const Point3& b, const Point3& q, Side side) {
  if (a.z != b.z || a.z != q.z) {
    throw PreconditionError("in_slab_on_plane: points do not share a plane z = const");
  }
  return in_slab(Point2{a.x, a.y}, Point2{b.x, b.y}, Point2{q.x, q.y}, side);
}

bool slab_bound_holds(const Point2& a, const Point2& b, const Point2& q, const Point2& p) {
  if (!in_slab(a, b, q, Side::Upper)) {
    throw PreconditionError("slab_bound_holds: q is not in the upper slab of ab");
  }
  if (p.y < q.y) throw PreconditionError("slab_bound_holds: y_p < y_q");
  return dist_sq(p, q) <= std::max(dist_sq(p, a), dist_sq(p, b));
}

bool slab_bound_holds(const Point3& a, const Point3& b, const Point3& q, const Point3& p) {
  if (!in_slab_on_plane(a, b, q, Side::Upper)) {
    throw PreconditionError("slab_bound_holds: q is not in the upper slab of ab");
  }
  if (p.y < q.y) throw PreconditionError("slab_bound_holds: y_p < y_q");
  return dist_sq(p, q) <= std::max(dist_sq(p, a), dist_sq(p, b));
}

}  // namespace dcq
