#pragma once

#include <vector>

#include "dcq/cobipartite.hpp"
#include "dcq/instance.hpp"

namespace dcq {

/// A ball instance prepared for guessing. One slot per (radius class,
/// plane), class-major; each slot's members are that class's balls on that
/// plane sorted by Plane::axis_position (ties by index).
class BallArrangement {
 public:
  explicit BallArrangement(const BallInstance& instance);

  const BallInstance& instance() const { return *instance_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  const std::vector<Scalar>& classes() const { return classes_; }
  std::size_t class_of(Index i) const { return class_of_[i]; }
  const GuessSpace& guess_space() const { return space_; }

 private:
  const BallInstance* instance_;
  AdjacencyMatrix adjacency_;
  std::vector<Scalar> classes_;
  std::vector<std::size_t> class_of_;
  GuessSpace space_;
};

std::vector<Guess> enumerate_ball_guesses(const BallArrangement& arrangement);

/// Parallel planes: X collects, per present slot (i, j), the type-i balls on
/// plane j inside the upper in-plane slab of the slot's pair that intersect
/// every guessed ball; Y likewise with lower slabs.
Candidates assemble_parallel_candidates(const BallArrangement& arrangement, const Guess& guess);

/// Planes perpendicular to the xz-plane: with Q_i the guessed centers of
/// type i, X collects type-i balls inside the extended lower envelope of
/// Q_i that intersect every guessed ball; Y uses extended upper envelopes.
/// Centers in both go to X.
Candidates assemble_perp_candidates(const BallArrangement& arrangement, const Guess& guess);

/// Throws PreconditionError on an empty instance or planes of the wrong kind.
CliqueResult max_clique_balls_parallel(const BallInstance& instance,
                                       const SearchOptions& options = {},
                                       SearchStats* stats = nullptr);

CliqueResult max_clique_balls_perp(const BallInstance& instance,
                                   const SearchOptions& options = {},
                                   SearchStats* stats = nullptr);

}  // namespace dcq
