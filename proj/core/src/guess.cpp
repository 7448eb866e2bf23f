#include "dcq/guess.hpp"

#include <algorithm>
#include <limits>

namespace dcq {

std::vector<Index> Guess::psi() const {
  std::vector<Index> out;
  for (const auto& slot : slots) {
    if (slot.absent()) continue;
    out.push_back(slot.pair->first);
    out.push_back(slot.pair->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Guess::all_absent() const {
  return std::all_of(slots.begin(), slots.end(), [](const Slot& s) { return s.absent(); });
}

bool guess_is_consistent(const Guess& g, const AdjacencyMatrix& adj) {
  const auto psi = g.psi();
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.size(); ++j) {
      if (!adj.adjacent(psi[i], psi[j])) return false;
    }
  }
  return true;
}

std::uint64_t closed_form_guess_count(const GuessSpace& space) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t product = 1;
  for (const auto& domain : space) {
    const std::uint64_t m = domain.members.size();
    const std::uint64_t options = 1 + m + m * (m - (m > 0 ? 1 : 0)) / 2;
    if (product > kMax / options) return kMax;
    product *= options;
  }
  return product - 1;
}

namespace {

class GuessWalker {
 public:
  GuessWalker(const GuessSpace& space, const AdjacencyMatrix& adj,
              const std::function<void(const Guess&)>& visit)
      : space_(space), adj_(adj), visit_(visit) {
    guess_.slots.reserve(space.size());
    for (const auto& d : space) guess_.slots.push_back(Slot{d.key, std::nullopt});
  }

  void run() { descend(0); }

 private:
  bool fits(Index v) const {
    return std::all_of(chosen_.begin(), chosen_.end(),
                       [&](Index u) { return adj_.adjacent(u, v); });
  }

  void descend(std::size_t slot) {
    if (slot == space_.size()) {
      if (!chosen_.empty()) visit_(guess_);
      return;
    }
    descend(slot + 1);

    const auto& members = space_[slot].members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Index a = members[i];
      if (!fits(a)) continue;
      chosen_.push_back(a);
      for (std::size_t j = i; j < members.size(); ++j) {
        const Index b = members[j];
        if (j != i) {
          if (!adj_.adjacent(a, b) || !fits(b)) continue;
          chosen_.push_back(b);
        }
        guess_.slots[slot].pair = std::make_pair(a, b);
        descend(slot + 1);
        if (j != i) chosen_.pop_back();
      }
      chosen_.pop_back();
    }
    guess_.slots[slot].pair.reset();
  }

  const GuessSpace& space_;
  const AdjacencyMatrix& adj_;
  const std::function<void(const Guess&)>& visit_;
  Guess guess_;
  std::vector<Index> chosen_;
};

}  // namespace

void for_each_guess(const GuessSpace& space, const AdjacencyMatrix& adj,
                    const std::function<void(const Guess&)>& visit) {
  GuessWalker(space, adj, visit).run();
}

std::vector<Guess> enumerate_guesses(const GuessSpace& space, const AdjacencyMatrix& adj) {
  std::vector<Guess> out;
  for_each_guess(space, adj, [&](const Guess& g) { out.push_back(g); });
  return out;
}

}  // namespace dcq
