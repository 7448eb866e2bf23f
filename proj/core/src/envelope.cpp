#include "dcq/envelope.hpp"

#include <cstddef>

#include "dcq/errors.hpp"

namespace dcq {
namespace {

Scalar cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Weight t of b in (1-t)*a + t*b == p, if p lies on the closed segment ab.
// Requires a != b.
std::optional<Scalar> segment_weight(const Point2& a, const Point2& b, const Point2& p) {
  if (cross(a, b, p) != 0) return std::nullopt;
  Scalar dx = b.x - a.x;
  Scalar dy = b.y - a.y;
  Scalar t = dx != 0 ? Scalar((p.x - a.x) / dx) : Scalar((p.y - a.y) / dy);
  if (t < 0 || t > 1) return std::nullopt;
  return t;
}

void take(std::optional<Scalar>& best, const Scalar& candidate, Envelope which) {
  if (!best || (which == Envelope::Lower ? candidate < *best : candidate > *best)) {
    best = candidate;
  }
}

}  // namespace

std::optional<Scalar> envelope_height(std::span<const Point3> pts, const Point2& xz,
                                      Envelope which) {
  const std::size_t n = pts.size();
  std::optional<Scalar> best;

  for (std::size_t i = 0; i < n; ++i) {
    if (project_xz(pts[i]) == xz) take(best, pts[i].y, which);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point2 pi = project_xz(pts[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 pj = project_xz(pts[j]);
      if (pi == pj) continue;
      if (auto t = segment_weight(pi, pj, xz)) {
        take(best, (1 - *t) * pts[i].y + *t * pts[j].y, which);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point2 pi = project_xz(pts[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 pj = project_xz(pts[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point2 pk = project_xz(pts[k]);
        Scalar area = cross(pi, pj, pk);
        if (area == 0) continue;
        Scalar wi = cross(xz, pj, pk) / area;
        Scalar wj = cross(pi, xz, pk) / area;
        Scalar wk = cross(pi, pj, xz) / area;
        if (wi < 0 || wj < 0 || wk < 0) continue;
        take(best, wi * pts[i].y + wj * pts[j].y + wk * pts[k].y, which);
      }
    }
  }
  return best;
}

bool in_extended_envelope(std::span<const Point3> pts, const Point3& q, Envelope which) {
  if (pts.empty()) throw PreconditionError("in_extended_envelope: empty point set");
  auto height = envelope_height(pts, project_xz(q), which);
  if (!height) return false;
  return which == Envelope::Lower ? q.y >= *height : q.y <= *height;
}

}  // namespace dcq
