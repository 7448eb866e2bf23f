#include "dcq/kradii.hpp"

#include <stdexcept>

#include "dcq/errors.hpp"

namespace dcq {

std::vector<Guess> enumerate_guesses(const DiskArrangement& arrangement) {
  return enumerate_guesses(arrangement.guess_space(), arrangement.adjacency());
}

CliqueResult max_clique_kradii(const DiskInstance& instance, const SearchOptions& options,
                               SearchStats* stats) {
  if (instance.disks.empty()) throw PreconditionError("max_clique_kradii: empty instance");
  const DiskArrangement arrangement(instance);
  CliqueResult best = maximize_over_guesses(
      arrangement.guess_space(), arrangement.adjacency(),
      [&](const Guess& g) { return assemble_candidates(arrangement, g); }, options, stats);
  if (best.ids.empty()) throw std::logic_error("max_clique_kradii: no guess produced a clique");
  return best;
}

}  // namespace dcq
