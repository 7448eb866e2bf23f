#include "dcq/instance.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dcq/errors.hpp"

namespace dcq {
namespace {

bool is_numeric(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

template <typename T>
void check_ids(const std::vector<T>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].id.empty()) throw ValidationError("empty object id");
    if (items[i].radius <= 0) {
      throw ValidationError("object '" + items[i].id + "' has nonpositive radius");
    }
    if (i > 0 && items[i - 1].id == items[i].id) {
      throw ValidationError("duplicate object id '" + items[i].id + "'");
    }
  }
}

template <typename T>
std::vector<Scalar> classes_of(std::span<const T> items) {
  std::vector<Scalar> radii;
  radii.reserve(items.size());
  for (const auto& item : items) radii.push_back(item.radius);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  const bool na = is_numeric(a);
  const bool nb = is_numeric(b);
  if (na != nb) return na;
  if (na) {
    auto sa = strip_zeros(a);
    auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

DiskInstance make_disk_instance(std::vector<Disk> disks) {
  std::sort(disks.begin(), disks.end(),
            [](const Disk& a, const Disk& b) { return id_less(a.id, b.id); });
  check_ids(disks);
  return DiskInstance{std::move(disks)};
}

BallInstance make_ball_instance(PlaneKind kind, std::vector<Plane> planes,
                                std::vector<std::int64_t> plane_labels,
                                std::vector<Ball> balls) {
  if (planes.empty()) throw ValidationError("ball instance has no planes");
  if (plane_labels.size() != planes.size()) {
    throw ValidationError("plane label count does not match plane count");
  }
  std::set<std::int64_t> seen(plane_labels.begin(), plane_labels.end());
  if (seen.size() != plane_labels.size()) throw ValidationError("duplicate plane id");
  for (const auto& plane : planes) {
    if (plane.kind() != kind) throw ValidationError("planes of mixed kind");
  }
  std::sort(balls.begin(), balls.end(),
            [](const Ball& a, const Ball& b) { return id_less(a.id, b.id); });
  check_ids(balls);
  for (const auto& ball : balls) {
    if (ball.plane >= planes.size()) {
      throw ValidationError("ball '" + ball.id + "' references an unknown plane");
    }
    if (!planes[ball.plane].contains(ball.center)) {
      throw ValidationError("ball '" + ball.id + "' center is not on its plane");
    }
  }
  return BallInstance{kind, std::move(planes), std::move(plane_labels), std::move(balls)};
}

std::vector<Scalar> radius_classes(std::span<const Disk> disks) { return classes_of(disks); }
std::vector<Scalar> radius_classes(std::span<const Ball> balls) { return classes_of(balls); }

}  // namespace dcq
