#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcq/geometry.hpp"

namespace dcq {

/// Position of an object inside its (id-sorted) instance.
using Index = std::uint32_t;

/// Natural id order: all-digit ids compare numerically and precede other
/// ids, which compare lexicographically. Total and strict.
bool id_less(std::string_view a, std::string_view b);

/// Disks sorted by id_less; every algorithm reports cliques as indices into
/// `disks`, so ascending index order is ascending id order.
struct DiskInstance {
  std::vector<Disk> disks;

  std::size_t size() const { return disks.size(); }
};

/// Sorts by id and validates: ids unique and nonempty, radii positive.
/// Throws ValidationError.
DiskInstance make_disk_instance(std::vector<Disk> disks);

struct BallInstance {
  PlaneKind plane_kind = PlaneKind::ParallelXY;
  std::vector<Plane> planes;
  /// Caller-facing plane labels, parallel to `planes`.
  std::vector<std::int64_t> plane_labels;
  /// Sorted by id; Ball::plane indexes `planes`.
  std::vector<Ball> balls;

  std::size_t size() const { return balls.size(); }
};

/// Validates a ball instance: planes nonempty and all of `kind`, unique
/// plane labels, ball ids unique, radii positive, plane index in range and
/// every center exactly on its plane. Sorts balls by id.
/// Throws ValidationError.
BallInstance make_ball_instance(PlaneKind kind, std::vector<Plane> planes,
                                std::vector<std::int64_t> plane_labels,
                                std::vector<Ball> balls);

/// Distinct radii in increasing order (exact equality grouping).
std::vector<Scalar> radius_classes(std::span<const Disk> disks);
std::vector<Scalar> radius_classes(std::span<const Ball> balls);

}  // namespace dcq
