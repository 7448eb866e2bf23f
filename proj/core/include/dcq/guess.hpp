#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dcq/instance.hpp"

namespace dcq {

/// Dense symmetric adjacency of an instance's intersection graph, computed
/// once from the exact predicates. Every object is adjacent to itself.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;

  template <typename Pred>
  static AdjacencyMatrix build(std::size_t n, Pred&& intersects) {
    AdjacencyMatrix m;
    m.n_ = n;
    m.bits_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      m.bits_[i * n + i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool hit = intersects(static_cast<Index>(i), static_cast<Index>(j));
        m.bits_[i * n + j] = m.bits_[j * n + i] = hit ? 1 : 0;
      }
    }
    return m;
  }

  std::size_t size() const { return n_; }
  bool adjacent(Index a, Index b) const { return bits_[std::size_t{a} * n_ + b] != 0; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Identifies one guess slot: a radius class and, for balls, a plane.
struct SlotKey {
  std::size_t radius_class = 0;
  std::size_t plane = 0;

  friend bool operator==(const SlotKey&, const SlotKey&) = default;
};

/// The objects a slot may pick from, ordered along the slot's sweep axis
/// (ties broken by index).
struct SlotDomain {
  SlotKey key;
  std::vector<Index> members;
};

using GuessSpace = std::vector<SlotDomain>;

/// Absent, or the (first, last) extreme members along the sweep axis of one
/// class (and plane) of a hypothesized maximum clique. first may equal last.
struct Slot {
  SlotKey key;
  std::optional<std::pair<Index, Index>> pair;

  bool absent() const { return !pair.has_value(); }
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Guess {
  std::vector<Slot> slots;

  /// Distinct objects referenced by the guess, sorted.
  std::vector<Index> psi() const;
  bool all_absent() const;
  friend bool operator==(const Guess&, const Guess&) = default;
};

/// True iff every pair of objects referenced by g intersects.
bool guess_is_consistent(const Guess& g, const AdjacencyMatrix& adj);

/// Product over slots of (1 + m + m(m-1)/2), minus the all-Absent guess:
/// the number of guesses before any pruning. Saturates at UINT64_MAX.
std::uint64_t closed_form_guess_count(const GuessSpace& space);

/// Streams every consistent guess in a fixed order: slots in space order,
/// each slot trying Absent first and then pairs (i <= j) of its member list.
/// Pairs whose endpoints do not intersect, and extensions that would make
/// the referenced objects not pairwise intersecting, are pruned before
/// descending. The all-Absent guess is skipped.
void for_each_guess(const GuessSpace& space, const AdjacencyMatrix& adj,
                    const std::function<void(const Guess&)>& visit);

std::vector<Guess> enumerate_guesses(const GuessSpace& space, const AdjacencyMatrix& adj);

}  // namespace dcq
