#pragma once

#include <vector>

#include "dcq/cobipartite.hpp"
#include "dcq/instance.hpp"

namespace dcq {

/// All consistent guesses for a disk instance: per radius class, Absent or
/// an x-ordered pair (a, b) of that class, a == b allowed.
std::vector<Guess> enumerate_guesses(const DiskArrangement& arrangement);

/// Maximum clique of the disk graph, maximizing over every consistent guess.
/// With k radius classes this solves O(n^{2k}) cobipartite subproblems.
/// Ties resolve to the lexicographically smallest sorted index list.
/// Throws PreconditionError on an empty instance and BudgetExceeded when the
/// guess estimate is over an enforced budget.
CliqueResult max_clique_kradii(const DiskInstance& instance, const SearchOptions& options = {},
                               SearchStats* stats = nullptr);

}  // namespace dcq
