#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace dcq {

using VertexId = std::uint32_t;

enum class Part : std::uint8_t { Left, Right };

/// Bipartite graph of conflicts (non-intersecting cross pairs) between two
/// candidate cliques, together with a matching that every public mutator
/// leaves maximum.
///
/// Vertex ids are small non-negative integers (object indices); storage is
/// dense in the largest id seen. Neighbor lists are kept sorted and every
/// search scans vertices and neighbors in increasing id order, so results
/// depend only on the inputs and the operation sequence.
///
/// Not thread-safe for writers; distinct instances are independent.
class ConflictGraph {
 public:
  ConflictGraph() = default;

  bool contains(VertexId v) const { return v < present_.size() && present_[v]; }
  Part part_of(VertexId v) const;
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t matching_size() const { return matching_size_; }
  std::optional<VertexId> mate(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Present vertices of one part in increasing id order.
  std::vector<VertexId> vertices(Part part) const;

  /// Adds v with the given conflict edges, then runs one augmenting-path
  /// search from v. Throws PreconditionError if v is already present or a
  /// neighbor is absent or on the same part.
  void insert_vertex(VertexId v, Part part, std::span<const VertexId> conflict_neighbors);

  /// Removes v and its edges; if v was matched its partner is freed and one
  /// augmenting-path search from the partner restores maximality.
  /// Throws PreconditionError if v is absent.
  void delete_vertex(VertexId v);

  /// Hopcroft-Karp phases from the current matching; returns its size.
  std::size_t max_matching();

  /// Maximum independent set via Konig's theorem: alternating reachability
  /// Z from the free left vertices gives (Left & Z) | (Right \ Z), of size
  /// vertex_count() - matching_size(). Sorted by id. Throws std::logic_error
  /// if the stored matching is not maximum.
  std::vector<VertexId> max_independent_set() const;

  /// True if the stored pairs form a matching of the current edge set.
  bool matching_is_valid() const;

 private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  friend ConflictGraph build_conflict_graph(
      std::span<const VertexId>, std::span<const VertexId>,
      const std::function<bool(VertexId, VertexId)>&);

  void ensure_capacity(VertexId v);
  void add_vertex(VertexId v, Part part, std::span<const VertexId> conflict_neighbors);
  bool augment_from(VertexId source);
  bool hk_bfs(std::vector<std::uint32_t>& dist) const;
  bool hk_dfs(VertexId left, std::vector<std::uint32_t>& dist);

  std::vector<bool> present_;
  std::vector<Part> part_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> mate_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t matching_size_ = 0;
};

/// Conflict graph on left x right with an edge (u, v) iff !intersects(u, v).
/// The matching starts empty. Throws PreconditionError if an id appears twice.
ConflictGraph build_conflict_graph(std::span<const VertexId> left,
                                   std::span<const VertexId> right,
                                   const std::function<bool(VertexId, VertexId)>& intersects);

}  // namespace dcq
