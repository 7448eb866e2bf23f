#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcq/instance.hpp"
#include "dcq/range_tables.hpp"

namespace dcq {

/// Brute-force reference implementations. They share only the exact
/// intersection predicates with the slab algorithms.

inline constexpr std::size_t kOracleCapPlain = 25;
inline constexpr std::size_t kOracleCapPivot = 60;

/// Symmetric adjacency over at most 64 vertices, one bit row per vertex.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return (rows_[a] >> b) & 1u; }
  std::uint64_t row(std::size_t a) const { return rows_[a]; }
  void connect(std::size_t a, std::size_t b);

 private:
  std::vector<std::uint64_t> rows_;
};

/// Edge iff the two objects intersect (loops excluded). Throws
/// PreconditionError above 64 objects.
IntersectionGraph intersection_graph(const DiskInstance& instance);
IntersectionGraph intersection_graph(const BallInstance& instance);

enum class Pivoting { None, Degeneracy };

/// Maximum clique by exhaustive Bron-Kerbosch enumeration of maximal
/// cliques restricted to `allowed` (bit i = vertex i). Ties go to the
/// lexicographically smallest sorted list. Throws PreconditionError above
/// kOracleCapPlain (None) or kOracleCapPivot (Degeneracy) vertices.
std::vector<Index> bron_kerbosch_max_clique(const IntersectionGraph& graph,
                                            Pivoting pivoting = Pivoting::Degeneracy,
                                            std::uint64_t allowed = ~std::uint64_t{0});

/// Maximum clique size among disks whose centers lie in the closed rect.
std::size_t naive_rect_clique(const UnitInstance& instance, const Rect& rect);

/// Same, with the rectangle given by x-ranks [l, r] and y-ranks [b, t].
std::size_t naive_rect_clique(const UnitInstance& instance, std::size_t l, std::size_t r,
                              std::size_t t, std::size_t b);

/// Overloads reusing a prebuilt intersection_graph(instance.disks()).
std::size_t naive_rect_clique(const IntersectionGraph& graph, const UnitInstance& instance,
                              const Rect& rect);
std::size_t naive_rect_clique(const IntersectionGraph& graph, const UnitInstance& instance,
                              std::size_t l, std::size_t r, std::size_t t, std::size_t b);

}  // namespace dcq
