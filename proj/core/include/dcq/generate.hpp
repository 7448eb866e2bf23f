#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcq/instance.hpp"

namespace dcq {

/// Seeded random instances. Coordinates are multiples of 10^-decimals in
/// [0, extent], so every value is an exact short decimal. Output is a pure
/// function of the options.
struct DiskGenOptions {
  std::size_t n = 10;
  std::size_t k = 1;  ///< uses the first k entries of radii
  std::uint64_t seed = 1;
  Scalar extent{10};
  std::vector<Scalar> radii{Scalar(1), Scalar(2), Scalar(7, 2)};
  unsigned decimals = 1;
  /// Draw pairwise distinct x and pairwise distinct y (unit-disk tables).
  bool general_position = false;
};

/// Throws PreconditionError for n == 0, k == 0, k > radii.size(), or a
/// grid too small for general position.
DiskInstance generate_disks(const DiskGenOptions& options);

struct BallGenOptions {
  std::size_t n = 8;
  std::size_t planes = 2;
  std::size_t k = 1;
  std::uint64_t seed = 1;
  PlaneKind kind = PlaneKind::ParallelXY;
  Scalar extent{4};
  std::vector<Scalar> radii{Scalar(1), Scalar(2), Scalar(7, 2)};
  unsigned decimals = 1;
};

/// Parallel planes sit at z = 0, 1, ..., planes-1. Perpendicular planes are
/// alpha*x + gamma*z = delta with gamma in {0, 1, 2, 4, 5} so every center
/// stays a terminating decimal. Every center lies exactly on its plane.
BallInstance generate_balls(const BallGenOptions& options);

}  // namespace dcq
