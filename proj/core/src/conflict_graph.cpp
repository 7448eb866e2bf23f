#include "dcq/conflict_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "dcq/errors.hpp"

namespace dcq {
namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

}  // namespace

Part ConflictGraph::part_of(VertexId v) const {
  if (!contains(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  return part_[v];
}

std::optional<VertexId> ConflictGraph::mate(VertexId v) const {
  if (!contains(v) || mate_[v] == kNone) return std::nullopt;
  return mate_[v];
}

bool ConflictGraph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::span<const VertexId> ConflictGraph::neighbors(VertexId v) const {
  if (!contains(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  return adj_[v];
}

std::vector<VertexId> ConflictGraph::vertices(Part part) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v] && part_[v] == part) out.push_back(v);
  }
  return out;
}

void ConflictGraph::ensure_capacity(VertexId v) {
  if (v < present_.size()) return;
  const std::size_t size = static_cast<std::size_t>(v) + 1;
  present_.resize(size, false);
  part_.resize(size, Part::Left);
  adj_.resize(size);
  mate_.resize(size, kNone);
}

void ConflictGraph::insert_vertex(VertexId v, Part part,
                                  std::span<const VertexId> conflict_neighbors) {
  add_vertex(v, part, conflict_neighbors);
  if (augment_from(v)) ++matching_size_;
}

void ConflictGraph::add_vertex(VertexId v, Part part,
                               std::span<const VertexId> conflict_neighbors) {
  if (contains(v)) throw PreconditionError("duplicate vertex " + std::to_string(v));
  for (VertexId w : conflict_neighbors) {
    if (!contains(w) || part_[w] == part) {
      throw PreconditionError("conflict neighbor " + std::to_string(w) +
                              " is not present on the opposite part");
    }
  }
  std::vector<VertexId> sorted(conflict_neighbors.begin(), conflict_neighbors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("repeated conflict neighbor for vertex " + std::to_string(v));
  }

  ensure_capacity(v);
  present_[v] = true;
  part_[v] = part;
  mate_[v] = kNone;
  for (VertexId w : sorted) {
    auto& list = adj_[w];
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }
  edge_count_ += sorted.size();
  adj_[v] = std::move(sorted);
  ++vertex_count_;
}

void ConflictGraph::delete_vertex(VertexId v) {
  if (!contains(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  for (VertexId w : adj_[v]) {
    auto& list = adj_[w];
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }
  edge_count_ -= adj_[v].size();
  adj_[v].clear();
  present_[v] = false;
  --vertex_count_;

  const VertexId partner = mate_[v];
  mate_[v] = kNone;
  if (partner != kNone) {
    mate_[partner] = kNone;
    --matching_size_;
    if (augment_from(partner)) ++matching_size_;
  }
}

// Breadth-first alternating search from a free vertex. On success the path
// is flipped and true is returned.
bool ConflictGraph::augment_from(VertexId source) {
  if (mate_[source] != kNone) return false;
  std::vector<VertexId> parent(present_.size(), kNone);
  std::vector<bool> seen(present_.size(), false);
  std::deque<VertexId> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj_[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = u;
      if (mate_[w] == kNone) {
        VertexId tip = w;
        while (true) {
          const VertexId from = parent[tip];
          const VertexId next = mate_[from];
          mate_[from] = tip;
          mate_[tip] = from;
          if (from == source) return true;
          tip = next;
        }
      }
      const VertexId back = mate_[w];
      if (!seen[back]) {
        seen[back] = true;
        queue.push_back(back);
      }
    }
  }
  return false;
}

bool ConflictGraph::hk_bfs(std::vector<std::uint32_t>& dist) const {
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (!present_[v] || part_[v] != Part::Left) continue;
    if (mate_[v] == kNone) {
      dist[v] = 0;
      queue.push_back(v);
    } else {
      dist[v] = kInf;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj_[u]) {
      const VertexId back = mate_[w];
      if (back == kNone) {
        found = true;
      } else if (dist[back] == kInf) {
        dist[back] = dist[u] + 1;
        queue.push_back(back);
      }
    }
  }
  return found;
}

bool ConflictGraph::hk_dfs(VertexId u, std::vector<std::uint32_t>& dist) {
  for (VertexId w : adj_[u]) {
    const VertexId back = mate_[w];
    if (back == kNone || (dist[back] == dist[u] + 1 && hk_dfs(back, dist))) {
      mate_[u] = w;
      mate_[w] = u;
      return true;
    }
  }
  dist[u] = kInf;
  return false;
}

std::size_t ConflictGraph::max_matching() {
  std::vector<std::uint32_t> dist(present_.size(), kInf);
  while (hk_bfs(dist)) {
    for (VertexId v = 0; v < present_.size(); ++v) {
      if (present_[v] && part_[v] == Part::Left && mate_[v] == kNone && hk_dfs(v, dist)) {
        ++matching_size_;
      }
    }
  }
  return matching_size_;
}

std::vector<VertexId> ConflictGraph::max_independent_set() const {
  std::vector<bool> reached(present_.size(), false);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v] && part_[v] == Part::Left && mate_[v] == kNone) {
      reached[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj_[u]) {
      if (reached[w]) continue;
      reached[w] = true;
      const VertexId back = mate_[w];
      if (back == kNone) {
        throw std::logic_error("max_independent_set: matching is not maximum");
      }
      if (!reached[back]) {
        reached[back] = true;
        queue.push_back(back);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (!present_[v]) continue;
    const bool keep = part_[v] == Part::Left ? reached[v] : !reached[v];
    if (keep) out.push_back(v);
  }
  return out;
}

bool ConflictGraph::matching_is_valid() const {
  std::size_t pairs = 0;
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (!present_[v] || mate_[v] == kNone) continue;
    const VertexId w = mate_[v];
    if (!contains(w) || mate_[w] != v || part_[w] == part_[v] || !has_edge(v, w)) return false;
    if (part_[v] == Part::Left) ++pairs;
  }
  return pairs == matching_size_;
}

ConflictGraph build_conflict_graph(std::span<const VertexId> left,
                                   std::span<const VertexId> right,
                                   const std::function<bool(VertexId, VertexId)>& intersects) {
  ConflictGraph g;
  std::vector<VertexId> l(left.begin(), left.end());
  std::vector<VertexId> r(right.begin(), right.end());
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  std::vector<VertexId> all;
  std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(all));
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PreconditionError("build_conflict_graph: an id appears twice");
  }
  for (VertexId u : l) g.add_vertex(u, Part::Left, {});
  std::vector<VertexId> nbrs;
  for (VertexId v : r) {
    nbrs.clear();
    for (VertexId u : l) {
      if (!intersects(u, v)) nbrs.push_back(u);
    }
    g.add_vertex(v, Part::Right, nbrs);
  }
  return g;
}

}  // namespace dcq
