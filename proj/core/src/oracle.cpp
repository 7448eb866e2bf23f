#include "dcq/oracle.hpp"

#include <bit>

#include "dcq/errors.hpp"

namespace dcq {

IntersectionGraph::IntersectionGraph(std::size_t n) {
  if (n > 64) throw PreconditionError("oracle graphs hold at most 64 vertices");
  rows_.assign(n, 0);
}

void IntersectionGraph::connect(std::size_t a, std::size_t b) {
  if (a == b) return;
  rows_[a] |= std::uint64_t{1} << b;
  rows_[b] |= std::uint64_t{1} << a;
}

IntersectionGraph intersection_graph(const DiskInstance& instance) {
  IntersectionGraph g(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    for (std::size_t j = i + 1; j < instance.size(); ++j) {
      if (disks_intersect(instance.disks[i], instance.disks[j])) g.connect(i, j);
    }
  }
  return g;
}

IntersectionGraph intersection_graph(const BallInstance& instance) {
  IntersectionGraph g(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    for (std::size_t j = i + 1; j < instance.size(); ++j) {
      if (balls_intersect(instance.balls[i], instance.balls[j])) g.connect(i, j);
    }
  }
  return g;
}

namespace {

std::vector<Index> to_list(std::uint64_t mask) {
  std::vector<Index> out;
  while (mask) {
    out.push_back(static_cast<Index>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const IntersectionGraph& g, bool pivot) : g_(g), pivot_(pivot) {}

  void expand(std::uint64_t clique, std::uint64_t cand, std::uint64_t excluded) {
    if (cand == 0) {
      if (excluded == 0) offer(clique);
      return;
    }
    std::uint64_t branch = cand;
    if (pivot_) {
      // Pivot maximizing |cand & N(u)| over cand | excluded.
      std::uint64_t pool = cand | excluded;
      int best = -1;
      std::uint64_t best_row = 0;
      while (pool) {
        const int u = std::countr_zero(pool);
        pool &= pool - 1;
        const int score = std::popcount(cand & g_.row(u));
        if (score > best) {
          best = score;
          best_row = g_.row(u);
        }
      }
      branch = cand & ~best_row;
    }
    while (branch) {
      const int v = std::countr_zero(branch);
      const std::uint64_t bit = std::uint64_t{1} << v;
      branch &= branch - 1;
      expand(clique | bit, cand & g_.row(v), excluded & g_.row(v));
      cand &= ~bit;
      excluded |= bit;
    }
  }

  const std::vector<Index>& best() const { return best_; }

 private:
  void offer(std::uint64_t clique) {
    auto list = to_list(clique);
    if (list.size() > best_.size() || (list.size() == best_.size() && list < best_)) {
      best_ = std::move(list);
    }
  }

  const IntersectionGraph& g_;
  bool pivot_;
  std::vector<Index> best_;
};

}  // namespace

std::vector<Index> bron_kerbosch_max_clique(const IntersectionGraph& graph, Pivoting pivoting,
                                            std::uint64_t allowed) {
  const std::size_t n = graph.size();
  const std::size_t cap = pivoting == Pivoting::None ? kOracleCapPlain : kOracleCapPivot;
  if (n > cap) {
    throw PreconditionError("oracle: " + std::to_string(n) + " vertices exceeds the cap of " +
                            std::to_string(cap));
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t vertices = all & allowed;
  Enumerator e(graph, pivoting == Pivoting::Degeneracy);
  if (pivoting == Pivoting::None) {
    e.expand(0, vertices, 0);
    return e.best();
  }

  // Degeneracy order: repeatedly peel a minimum-degree vertex.
  std::vector<int> order;
  std::uint64_t remaining = vertices;
  while (remaining) {
    int pick = -1;
    int pick_degree = 0;
    std::uint64_t scan = remaining;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int degree = std::popcount(graph.row(v) & remaining);
      if (pick < 0 || degree < pick_degree) {
        pick = v;
        pick_degree = degree;
      }
    }
    order.push_back(pick);
    remaining &= ~(std::uint64_t{1} << pick);
  }
  std::uint64_t later = vertices;
  std::uint64_t earlier = 0;
  for (int v : order) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    later &= ~bit;
    e.expand(bit, later & graph.row(v), earlier & graph.row(v));
    earlier |= bit;
  }
  return e.best();
}

std::size_t naive_rect_clique(const IntersectionGraph& g, const UnitInstance& instance,
                              const Rect& rect) {
  std::uint64_t inside = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Point2& c = instance.center(static_cast<Index>(i));
    if (rect.x1 <= c.x && c.x <= rect.x2 && rect.y1 <= c.y && c.y <= rect.y2) {
      inside |= std::uint64_t{1} << i;
    }
  }
  if (!inside) return 0;
  return bron_kerbosch_max_clique(g, Pivoting::Degeneracy, inside).size();
}

std::size_t naive_rect_clique(const IntersectionGraph& g, const UnitInstance& instance,
                              std::size_t l, std::size_t r, std::size_t t, std::size_t b) {
  if (l > r || b > t) return 0;
  std::uint64_t inside = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const std::size_t xr = instance.x_rank(static_cast<Index>(i));
    const std::size_t yr = instance.y_rank(static_cast<Index>(i));
    if (l <= xr && xr <= r && b <= yr && yr <= t) inside |= std::uint64_t{1} << i;
  }
  if (!inside) return 0;
  return bron_kerbosch_max_clique(g, Pivoting::Degeneracy, inside).size();
}

std::size_t naive_rect_clique(const UnitInstance& instance, const Rect& rect) {
  return naive_rect_clique(intersection_graph(instance.disks()), instance, rect);
}

std::size_t naive_rect_clique(const UnitInstance& instance, std::size_t l, std::size_t r,
                              std::size_t t, std::size_t b) {
  return naive_rect_clique(intersection_graph(instance.disks()), instance, l, r, t, b);
}

}  // namespace dcq
