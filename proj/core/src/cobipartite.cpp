#include "dcq/cobipartite.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "dcq/conflict_graph.hpp"
#include "dcq/errors.hpp"

namespace dcq {

bool better_result(const CliqueResult& a, const CliqueResult& b) {
  if (a.ids.size() != b.ids.size()) return a.ids.size() > b.ids.size();
  return a.ids < b.ids;
}

bool assert_side_clique(const AdjacencyMatrix& adj, std::span<const Index> side) {
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      if (!adj.adjacent(side[i], side[j])) return false;
    }
  }
  return true;
}

CliqueResult solve_candidates(const AdjacencyMatrix& adj, const Candidates& candidates,
                              const Guess& guess) {
  ConflictGraph graph = build_conflict_graph(
      candidates.side_x, candidates.side_y,
      [&](VertexId u, VertexId v) { return adj.adjacent(u, v); });
  graph.max_matching();
  return CliqueResult{graph.max_independent_set(), guess};
}

DiskArrangement::DiskArrangement(const DiskInstance& instance)
    : instance_(&instance),
      adjacency_(AdjacencyMatrix::build(instance.size(),
                                        [&](Index a, Index b) {
                                          return disks_intersect(instance.disks[a],
                                                                 instance.disks[b]);
                                        })),
      classes_(radius_classes(instance.disks)) {
  const auto& disks = instance.disks;
  class_of_.resize(disks.size());
  space_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) space_[c].key = SlotKey{c, 0};
  for (Index i = 0; i < disks.size(); ++i) {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), disks[i].radius);
    class_of_[i] = static_cast<std::size_t>(it - classes_.begin());
    space_[class_of_[i]].members.push_back(i);
  }
  for (auto& domain : space_) {
    std::stable_sort(domain.members.begin(), domain.members.end(), [&](Index a, Index b) {
      return disks[a].center.x < disks[b].center.x;
    });
  }
}

Candidates assemble_candidates(const DiskArrangement& arrangement, const Guess& guess) {
  const auto& adj = arrangement.adjacency();
  if (!guess_is_consistent(guess, adj)) {
    throw PreconditionError("assemble_candidates: guessed disks are not pairwise intersecting");
  }
  const auto psi = guess.psi();
  const auto& disks = arrangement.instance().disks;
  Candidates out;
  for (const auto& slot : guess.slots) {
    if (slot.absent()) continue;
    const Point2& a = disks[slot.pair->first].center;
    const Point2& b = disks[slot.pair->second].center;
    for (Index m : arrangement.guess_space()[slot.key.radius_class].members) {
      const bool hits_all = std::all_of(psi.begin(), psi.end(),
                                        [&](Index p) { return adj.adjacent(m, p); });
      if (!hits_all) continue;
      const Point2& q = disks[m].center;
      if (in_slab(a, b, q, Side::Upper)) {
        out.side_x.push_back(m);
      } else if (in_slab(a, b, q, Side::Lower)) {
        out.side_y.push_back(m);
      }
    }
  }
  std::sort(out.side_x.begin(), out.side_x.end());
  std::sort(out.side_y.begin(), out.side_y.end());
  return out;
}

CliqueResult solve_guess(const DiskArrangement& arrangement, const Guess& guess) {
  return solve_candidates(arrangement.adjacency(), assemble_candidates(arrangement, guess),
                          guess);
}

CliqueResult maximize_over_guesses(const GuessSpace& space, const AdjacencyMatrix& adj,
                                   const CandidateAssembler& assemble,
                                   const SearchOptions& options, SearchStats* stats) {
  const std::uint64_t estimate = closed_form_guess_count(space);
  if (estimate > options.budget) {
    const std::string message = "estimated " + std::to_string(estimate) +
                                " guesses exceeds the budget of " +
                                std::to_string(options.budget);
    if (options.enforce_budget) throw BudgetExceeded(message);
    if (options.warn) options.warn(message);
  }

  const std::size_t workers = std::max<std::size_t>(1, options.threads);
  std::vector<CliqueResult> best(workers);
  std::vector<char> found(workers, 0);
  std::vector<std::uint64_t> solved(workers, 0);
  std::vector<std::uint64_t> verified(workers, 0);

  auto work = [&](std::size_t worker) {
    std::uint64_t ordinal = 0;
    for_each_guess(space, adj, [&](const Guess& guess) {
      if (ordinal++ % workers != worker) return;
      Candidates candidates = assemble(guess);
      if (options.verify_sides) {
        if (!assert_side_clique(adj, candidates.side_x) ||
            !assert_side_clique(adj, candidates.side_y)) {
          throw std::logic_error("assembled candidate side is not a clique");
        }
        verified[worker] += 2;
      }
      CliqueResult result = solve_candidates(adj, candidates, guess);
      ++solved[worker];
      if (!found[worker] || better_result(result, best[worker])) {
        best[worker] = std::move(result);
        found[worker] = 1;
      }
    });
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CliqueResult overall;
  bool any = false;
  for (std::size_t w = 0; w < workers; ++w) {
    if (found[w] && (!any || better_result(best[w], overall))) {
      overall = best[w];
      any = true;
    }
  }
  if (stats) {
    stats->guess_estimate = estimate;
    stats->guesses_solved = 0;
    stats->sides_verified = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      stats->guesses_solved += solved[w];
      stats->sides_verified += verified[w];
    }
  }
  return overall;
}

}  // namespace dcq
