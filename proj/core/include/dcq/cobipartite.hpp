#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "dcq/guess.hpp"
#include "dcq/instance.hpp"

namespace dcq {

/// The two candidate cliques of one guess: X (upper slabs / lower
/// envelopes) and Y (lower slabs / upper envelopes). Disjoint, sorted.
struct Candidates {
  std::vector<Index> side_x;
  std::vector<Index> side_y;
};

struct CliqueResult {
  std::vector<Index> ids;  ///< sorted
  Guess witness_guess;

  std::size_t size() const { return ids.size(); }
};

/// Total order used for every max-reduction: larger size first, then the
/// lexicographically smaller sorted id list.
bool better_result(const CliqueResult& a, const CliqueResult& b);

/// Pairwise check that `side` is a clique. Assembled sides are always
/// cliques by the slab and envelope distance bounds, so false means a bug.
bool assert_side_clique(const AdjacencyMatrix& adj, std::span<const Index> side);

/// Maximum clique inside X u Y: builds the bipartite conflict graph of
/// non-intersecting cross pairs and returns its maximum independent set.
CliqueResult solve_candidates(const AdjacencyMatrix& adj, const Candidates& candidates,
                              const Guess& guess);

/// A disk instance prepared for guessing: radius classes, adjacency, and
/// per-class members sorted by (x, index).
class DiskArrangement {
 public:
  explicit DiskArrangement(const DiskInstance& instance);

  const DiskInstance& instance() const { return *instance_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  const std::vector<Scalar>& classes() const { return classes_; }
  std::size_t class_of(Index i) const { return class_of_[i]; }
  /// One slot per radius class, in increasing radius order.
  const GuessSpace& guess_space() const { return space_; }

 private:
  const DiskInstance* instance_;
  AdjacencyMatrix adjacency_;
  std::vector<Scalar> classes_;
  std::vector<std::size_t> class_of_;
  GuessSpace space_;
};

/// X = type-i disks in the upper slab of slot i's pair that intersect every
/// guessed disk, over all present slots; Y likewise with lower slabs. Disks
/// on a pair's segment go to X. Throws PreconditionError if the guessed
/// disks are not pairwise intersecting.
Candidates assemble_candidates(const DiskArrangement& arrangement, const Guess& guess);

CliqueResult solve_guess(const DiskArrangement& arrangement, const Guess& guess);

struct SearchOptions {
  std::size_t threads = 1;
  /// Guess-count estimate above which the search warns (or fails when
  /// enforce_budget is set).
  std::uint64_t budget = 100'000'000;
  bool enforce_budget = false;
  /// Run assert_side_clique on every assembled side; a violation throws
  /// std::logic_error.
  bool verify_sides = false;
  std::function<void(std::string_view)> warn;
};

struct SearchStats {
  std::uint64_t guess_estimate = 0;  ///< closed-form count before pruning
  std::uint64_t guesses_solved = 0;  ///< consistent guesses actually solved
  std::uint64_t sides_verified = 0;
};

using CandidateAssembler = std::function<Candidates(const Guess&)>;

/// Solves every consistent guess of `space` and returns the best result
/// under better_result. Work is split round-robin over guesses between
/// `threads` workers; the reduction order is irrelevant because the
/// comparison is a total order. Returns an empty result if no guess exists.
CliqueResult maximize_over_guesses(const GuessSpace& space, const AdjacencyMatrix& adj,
                                   const CandidateAssembler& assemble,
                                   const SearchOptions& options, SearchStats* stats = nullptr);

}  // namespace dcq
