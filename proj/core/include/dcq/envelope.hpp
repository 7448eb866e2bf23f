#pragma once

#include <optional>
#include <span>

#include "dcq/geometry.hpp"

namespace dcq {

enum class Envelope {
  Lower,  ///< conv(Q) swept along +y: points on or above the lower hull surface
  Upper,  ///< conv(Q) swept along -y: points on or below the upper hull surface
};

/// Height of the lower (upper) hull surface of Q over the xz-point (x, z),
/// or nullopt when (x, z) lies outside the projected hull of Q.
///
/// Evaluated exactly by enumerating the subsets that can carry an optimal
/// basic solution: single points, pairs with distinct projections and
/// triples with non-collinear projections whose projected hull contains
/// (x, z). Each such subset has unique barycentric weights; the envelope is
/// the min (max) of the weighted y over them. O(|Q|^3).
std::optional<Scalar> envelope_height(std::span<const Point3> hull_points,
                                      const Point2& xz, Envelope which);

/// q lies in conv(Q) plus the +y ray (Lower) or the -y ray (Upper).
/// Throws PreconditionError when Q is empty.
bool in_extended_envelope(std::span<const Point3> hull_points, const Point3& q,
                          Envelope which);

}  // namespace dcq
