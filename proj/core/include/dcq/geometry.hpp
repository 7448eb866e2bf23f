#pragma once

#include <cstddef>
#include <string>

#include "dcq/scalar.hpp"

namespace dcq {

struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct Point3 {
  Scalar x;
  Scalar y;
  Scalar z;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// Closed disk with a caller-provided label.
struct Disk {
  std::string id;
  Point2 center;
  Scalar radius;
};

/// Closed ball whose center lies on plane `plane` of its instance.
struct Ball {
  std::string id;
  Point3 center;
  Scalar radius;
  std::size_t plane = 0;
};

enum class Side { Upper, Lower };

enum class PlaneKind { ParallelXY, PerpToXZ };

/// Either z = z0 (parallel to the xy-plane) or alpha*x + gamma*z = delta
/// (contains the y-direction, hence perpendicular to the xz-plane).
class Plane {
 public:
  static Plane parallel_xy(Scalar z0);
  /// Normalizes so the first nonzero of (alpha, gamma) is positive.
  /// Throws ValidationError if alpha == gamma == 0.
  static Plane perp_to_xz(Scalar alpha, Scalar gamma, Scalar delta);

  PlaneKind kind() const { return kind_; }
  const Scalar& z0() const { return z0_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& gamma() const { return gamma_; }
  const Scalar& delta() const { return delta_; }

  bool contains(const Point3& p) const;

  /// Coordinate of p along the plane's sweep axis: x for ParallelXY, and for
  /// PerpToXZ the projection of (x, z) onto the trace direction (gamma, -alpha)
  /// oriented so its first nonzero component is positive. Order-preserving
  /// along the plane's xz-trace line.
  Scalar axis_position(const Point3& p) const;

  friend bool operator==(const Plane& a, const Plane& b);

 private:
  PlaneKind kind_ = PlaneKind::ParallelXY;
  Scalar z0_;
  Scalar alpha_;
  Scalar gamma_;
  Scalar delta_;
};

Scalar dist_sq(const Point2& p, const Point2& q);
Scalar dist_sq(const Point3& p, const Point3& q);

/// Closed semantics: tangent objects intersect.
bool disks_intersect(const Disk& a, const Disk& b);
bool balls_intersect(const Ball& a, const Ball& b);

/// Membership of q in the closed upper (lower) slab of segment ab.
///
/// For non-vertical ab the slab is bounded by the vertical lines through a
/// and b and lies on or above (below) the line through them. For vertical ab,
/// and for a == b, the slab collapses onto the vertical line x = x_a: Upper
/// keeps y_q >= min(y_a, y_b) and Lower keeps y_q <= max(y_a, y_b), so the
/// two slabs still cover the strip and meet on the segment itself.
bool in_slab(const Point2& a, const Point2& b, const Point2& q, Side side);

/// in_slab on the (x, y) coordinates of three points sharing a z-coordinate.
/// Throws PreconditionError if the points are not on one plane z = const.
bool in_slab_on_plane(const Point3& a, const Point3& b, const Point3& q, Side side);

/// Checks |pq|^2 <= max(|pa|^2, |pb|^2). Requires q in the upper slab of ab
/// and y_p >= y_q (throws PreconditionError otherwise); under those
/// conditions the inequality always holds.
bool slab_bound_holds(const Point2& a, const Point2& b, const Point2& q, const Point2& p);

/// 3D variant: a, b, q lie on one plane parallel to the xy-plane, p is free.
bool slab_bound_holds(const Point3& a, const Point3& b, const Point3& q, const Point3& p);

inline Point2 project_xz(const Point3& p) { return Point2{p.x, p.z}; }

}  // namespace dcq
