#include "dcq/ball_clique.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcq/envelope.hpp"
#include "dcq/errors.hpp"

namespace dcq {
namespace {

void check_psi(const AdjacencyMatrix& adj, const Guess& guess) {
  if (!guess_is_consistent(guess, adj)) {
    throw PreconditionError("assemble: guessed balls are not pairwise intersecting");
  }
}

bool hits_all(const AdjacencyMatrix& adj, Index m, const std::vector<Index>& psi) {
  return std::all_of(psi.begin(), psi.end(), [&](Index p) { return adj.adjacent(m, p); });
}

CliqueResult run(const BallInstance& instance, PlaneKind expected, const SearchOptions& options,
                 SearchStats* stats,
                 Candidates (*assemble)(const BallArrangement&, const Guess&)) {
  if (instance.balls.empty()) throw PreconditionError("ball instance is empty");
  if (instance.plane_kind != expected) {
    throw PreconditionError(expected == PlaneKind::ParallelXY
                                ? "parallel-plane solver needs planes parallel to the xy-plane"
                                : "perpendicular-plane solver needs planes perpendicular to the xz-plane");
  }
  const BallArrangement arrangement(instance);
  CliqueResult best = maximize_over_guesses(
      arrangement.guess_space(), arrangement.adjacency(),
      [&](const Guess& g) { return assemble(arrangement, g); }, options, stats);
  if (best.ids.empty()) throw std::logic_error("ball solver: no guess produced a clique");
  return best;
}

}  // namespace

BallArrangement::BallArrangement(const BallInstance& instance)
    : instance_(&instance),
      adjacency_(AdjacencyMatrix::build(instance.size(),
                                        [&](Index a, Index b) {
                                          return balls_intersect(instance.balls[a],
                                                                 instance.balls[b]);
                                        })),
      classes_(radius_classes(instance.balls)) {
  const auto& balls = instance.balls;
  const std::size_t planes = instance.planes.size();
  class_of_.resize(balls.size());
  space_.resize(classes_.size() * planes);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t j = 0; j < planes; ++j) space_[c * planes + j].key = SlotKey{c, j};
  }
  for (Index i = 0; i < balls.size(); ++i) {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), balls[i].radius);
    class_of_[i] = static_cast<std::size_t>(it - classes_.begin());
    space_[class_of_[i] * planes + balls[i].plane].members.push_back(i);
  }
  for (auto& domain : space_) {
    const Plane& plane = instance.planes[domain.key.plane];
    std::vector<std::pair<Scalar, Index>> keyed;
    for (Index m : domain.members) keyed.emplace_back(plane.axis_position(balls[m].center), m);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    for (std::size_t i = 0; i < keyed.size(); ++i) domain.members[i] = keyed[i].second;
  }
}

std::vector<Guess> enumerate_ball_guesses(const BallArrangement& arrangement) {
  return enumerate_guesses(arrangement.guess_space(), arrangement.adjacency());
}

Candidates assemble_parallel_candidates(const BallArrangement& arrangement, const Guess& guess) {
  const auto& adj = arrangement.adjacency();
  check_psi(adj, guess);
  const auto psi = guess.psi();
  const auto& balls = arrangement.instance().balls;
  const std::size_t planes = arrangement.instance().planes.size();
  Candidates out;
  for (const auto& slot : guess.slots) {
    if (slot.absent()) continue;
    const Point3& a = balls[slot.pair->first].center;
    const Point3& b = balls[slot.pair->second].center;
    const auto& domain = arrangement.guess_space()[slot.key.radius_class * planes + slot.key.plane];
    for (Index m : domain.members) {
      if (!hits_all(adj, m, psi)) continue;
      const Point3& q = balls[m].center;
      if (in_slab_on_plane(a, b, q, Side::Upper)) {
        out.side_x.push_back(m);
      } else if (in_slab_on_plane(a, b, q, Side::Lower)) {
        out.side_y.push_back(m);
      }
    }
  }
  std::sort(out.side_x.begin(), out.side_x.end());
  std::sort(out.side_y.begin(), out.side_y.end());
  return out;
}

Candidates assemble_perp_candidates(const BallArrangement& arrangement, const Guess& guess) {
  const auto& adj = arrangement.adjacency();
  check_psi(adj, guess);
  const auto psi = guess.psi();
  const auto& balls = arrangement.instance().balls;

  std::vector<std::vector<Point3>> hull_points(arrangement.classes().size());
  for (const auto& slot : guess.slots) {
    if (slot.absent()) continue;
    auto& q = hull_points[slot.key.radius_class];
    for (Index v : {slot.pair->first, slot.pair->second}) {
      if (std::find(q.begin(), q.end(), balls[v].center) == q.end()) q.push_back(balls[v].center);
    }
  }

  Candidates out;
  for (Index m = 0; m < balls.size(); ++m) {
    const auto& q = hull_points[arrangement.class_of(m)];
    if (q.empty() || !hits_all(adj, m, psi)) continue;
    if (in_extended_envelope(q, balls[m].center, Envelope::Lower)) {
      out.side_x.push_back(m);
    } else if (in_extended_envelope(q, balls[m].center, Envelope::Upper)) {
      out.side_y.push_back(m);
    }
  }
  return out;
}

CliqueResult max_clique_balls_parallel(const BallInstance& instance, const SearchOptions& options,
                                       SearchStats* stats) {
  return run(instance, PlaneKind::ParallelXY, options, stats, &assemble_parallel_candidates);
}

CliqueResult max_clique_balls_perp(const BallInstance& instance, const SearchOptions& options,
                                   SearchStats* stats) {
  return run(instance, PlaneKind::PerpToXZ, options, stats, &assemble_perp_candidates);
}

}  // namespace dcq
