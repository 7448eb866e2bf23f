#include "dcq/range_tables.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "dcq/conflict_graph.hpp"
#include "dcq/errors.hpp"

namespace dcq {

UnitInstance::UnitInstance(DiskInstance disks) : disks_(std::move(disks)) {
  const auto& d = disks_.disks;
  if (d.empty()) throw ValidationError("unit-disk instance is empty");
  for (const auto& disk : d) {
    if (disk.radius != d.front().radius) {
      throw ValidationError("unit-disk instance needs equal radii; '" + disk.id + "' differs");
    }
  }
  if (!in_general_position(disks_)) {
    throw ValidationError("centers are not in general position (repeated x or y coordinate)");
  }
  adjacency_ = AdjacencyMatrix::build(d.size(), [&](Index a, Index b) {
    return disks_intersect(d[a], d[b]);
  });
  x_order_.resize(d.size());
  y_order_.resize(d.size());
  for (Index i = 0; i < d.size(); ++i) x_order_[i] = y_order_[i] = i;
  std::sort(x_order_.begin(), x_order_.end(),
            [&](Index a, Index b) { return d[a].center.x < d[b].center.x; });
  std::sort(y_order_.begin(), y_order_.end(),
            [&](Index a, Index b) { return d[a].center.y < d[b].center.y; });
  x_rank_.resize(d.size());
  y_rank_.resize(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    x_rank_[x_order_[k]] = k;
    y_rank_[y_order_[k]] = k;
  }
}

namespace {

std::vector<Scalar> sorted_coordinates(const DiskInstance& disks, bool use_x) {
  std::vector<Scalar> values;
  for (const auto& d : disks.disks) values.push_back(use_x ? d.center.x : d.center.y);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

bool in_general_position(const DiskInstance& disks) {
  for (bool use_x : {true, false}) {
    const auto values = sorted_coordinates(disks, use_x);
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) return false;
  }
  return true;
}

DiskInstance perturb_to_general_position(const DiskInstance& disks, bool* changed) {
  if (changed) *changed = false;
  if (in_general_position(disks)) return disks;

  std::optional<Scalar> gap;
  for (bool use_x : {true, false}) {
    const auto values = sorted_coordinates(disks, use_x);
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] == values[i - 1]) continue;
      Scalar g = values[i] - values[i - 1];
      if (!gap || g < *gap) gap = g;
    }
  }
  const Scalar bound = gap.value_or(Scalar(1)) / (2 * (disks.size() + 1));
  Scalar step(1);
  while (step >= bound) step /= 10;

  DiskInstance out = disks;
  for (std::size_t i = 0; i < out.disks.size(); ++i) {
    Scalar nudge = step * static_cast<unsigned long>(i + 1);
    out.disks[i].center.x += nudge;
    out.disks[i].center.y += nudge;
  }
  if (changed) *changed = true;
  return out;
}

namespace {

// Incrementally maintained conflict graph for one slab (p_l, p_r) while the
// horizontal strip [b, t] moves over the y-ranks.
class SlabSweep {
 public:
  SlabSweep(const UnitInstance& inst, std::size_t l, std::size_t r, bool verify)
      : inst_(inst), verify_(verify), by_y_(inst.size()) {
    const Index pl = inst.x_order()[l];
    const Index pr = inst.x_order()[r];
    for (std::size_t q = l; q <= r; ++q) {
      const Index v = inst.x_order()[q];
      if (!inst.adjacent(v, pl) || !inst.adjacent(v, pr)) continue;
      const Part part = in_slab(inst.center(pl), inst.center(pr), inst.center(v), Side::Upper)
                            ? Part::Left
                            : Part::Right;
      by_y_[inst.y_rank(v)] = Member{v, part};
      members_.push_back(Member{v, part});
    }
    present_.assign(inst.size(), false);
  }

  /// Moves the strip to [b, t] (t >= b).
  void move_to(std::size_t b, std::size_t t) {
    if (has_strip_) {
      for (std::size_t y = lo_; y <= hi_; ++y) {
        if (y < b || y > t) remove_rank(y);
      }
      for (std::size_t y = b; y <= t; ++y) {
        if (y < lo_ || y > hi_) add_rank(y);
      }
    } else {
      for (std::size_t y = b; y <= t; ++y) add_rank(y);
    }
    lo_ = b;
    hi_ = t;
    has_strip_ = true;
    if (verify_) check_against_rebuild();
  }

  std::uint32_t clique_size() const {
    return static_cast<std::uint32_t>(graph_.vertex_count() - graph_.matching_size());
  }

 private:
  struct Member {
    Index id;
    Part part;
  };

  void add_rank(std::size_t y) {
    const auto& m = by_y_[y];
    if (!m) return;
    std::vector<VertexId> conflicts;
    for (const auto& other : members_) {
      if (present_[other.id] && other.part != m->part && !inst_.adjacent(other.id, m->id)) {
        conflicts.push_back(other.id);
      }
    }
    graph_.insert_vertex(m->id, m->part, conflicts);
    present_[m->id] = true;
  }

  void remove_rank(std::size_t y) {
    const auto& m = by_y_[y];
    if (!m) return;
    graph_.delete_vertex(m->id);
    present_[m->id] = false;
  }

  void check_against_rebuild() const {
    std::vector<VertexId> left;
    std::vector<VertexId> right;
    for (const auto& m : members_) {
      if (!present_[m.id]) continue;
      (m.part == Part::Left ? left : right).push_back(m.id);
    }
    ConflictGraph fresh = build_conflict_graph(
        left, right, [&](VertexId a, VertexId b) { return inst_.adjacent(a, b); });
    if (fresh.max_matching() != graph_.matching_size() || !graph_.matching_is_valid()) {
      throw std::logic_error("slab sweep: incremental matching diverged from rebuild");
    }
  }

  const UnitInstance& inst_;
  bool verify_;
  std::vector<std::optional<Member>> by_y_;
  std::vector<Member> members_;
  std::vector<bool> present_;
  ConflictGraph graph_;
  bool has_strip_ = false;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
};

void sweep_slab(const UnitInstance& inst, std::size_t l, std::size_t r, bool verify,
                Table4& s) {
  const std::size_t n = inst.size();
  const Index pl = inst.x_order()[l];
  const Index pr = inst.x_order()[r];
  const std::size_t need_lo = std::min(inst.y_rank(pl), inst.y_rank(pr));
  const std::size_t need_hi = std::max(inst.y_rank(pl), inst.y_rank(pr));

  SlabSweep sweep(inst, l, r, verify);
  auto visit = [&](std::size_t b, std::size_t t) {
    sweep.move_to(b, t);
    if (b <= need_lo && need_hi <= t) s.at(l, r, t, b) = sweep.clique_size();
  };
  // Strips with b > need_lo never record, so the sweep stops there.
  for (std::size_t b = 0; b <= need_lo; ++b) {
    if (b % 2 == 0) {
      for (std::size_t t = b; t < n; ++t) visit(b, t);
    } else {
      for (std::size_t t = n; t-- > b;) visit(b, t);
    }
  }
}

}  // namespace

STable build_s_table(const UnitInstance& inst, const RangeBuildOptions& options) {
  const std::size_t n = inst.size();
  if (n > options.max_n) {
    throw PreconditionError("range tables: n = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(options.max_n));
  }
  STable s{Table4(n)};
  std::vector<std::pair<std::size_t, std::size_t>> slabs;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = l; r < n; ++r) {
      if (inst.adjacent(inst.x_order()[l], inst.x_order()[r])) slabs.emplace_back(l, r);
    }
  }

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, slabs.size()));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < slabs.size(); i += workers) {
      sweep_slab(inst, slabs[i].first, slabs[i].second, options.verify_incremental, s.sizes);
    }
  };
  if (workers <= 1) {
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
  return s;
}

MTable build_m_table(const UnitInstance& inst, const STable& s) {
  const std::size_t n = inst.size();
  if (s.sizes.n != n) throw PreconditionError("build_m_table: S table size mismatch");
  MTable m{Table4(n), Table4(n)};
  for (std::size_t l = n; l-- > 0;) {
    for (std::size_t r = l; r < n; ++r) {
      const std::size_t yl = inst.y_rank(inst.x_order()[l]);
      const std::size_t yr = inst.y_rank(inst.x_order()[r]);
      for (std::size_t b = n; b-- > 0;) {
        for (std::size_t t = b; t < n; ++t) {
          std::uint32_t best = 0;
          MWitness code = MWitness::SBranch;
          if (b <= yl && yl <= t && b <= yr && yr <= t) best = s.sizes.at(l, r, t, b);
          auto consider = [&](bool valid, std::uint32_t value, MWitness why) {
            if (valid && value > best) {
              best = value;
              code = why;
            }
          };
          consider(l < r, l < r ? m.sizes.at(l + 1, r, t, b) : 0, MWitness::ShrinkLeft);
          consider(l < r, l < r ? m.sizes.at(l, r - 1, t, b) : 0, MWitness::ShrinkRight);
          consider(b < t, b < t ? m.sizes.at(l, r, t - 1, b) : 0, MWitness::ShrinkTop);
          consider(b < t, b < t ? m.sizes.at(l, r, t, b + 1) : 0, MWitness::ShrinkBottom);
          m.sizes.at(l, r, t, b) = best;
          m.witness.at(l, r, t, b) = static_cast<std::uint32_t>(code);
        }
      }
    }
  }
  return m;
}

std::vector<Index> slab_rect_clique(const UnitInstance& inst, std::size_t l, std::size_t r,
                                    std::size_t t, std::size_t b) {
  const Index pl = inst.x_order()[l];
  const Index pr = inst.x_order()[r];
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  for (std::size_t q = l; q <= r; ++q) {
    const Index v = inst.x_order()[q];
    const std::size_t y = inst.y_rank(v);
    if (y < b || y > t || !inst.adjacent(v, pl) || !inst.adjacent(v, pr)) continue;
    const bool upper = in_slab(inst.center(pl), inst.center(pr), inst.center(v), Side::Upper);
    (upper ? left : right).push_back(v);
  }
  ConflictGraph g = build_conflict_graph(
      left, right, [&](VertexId a, VertexId c) { return inst.adjacent(a, c); });
  g.max_matching();
  return g.max_independent_set();
}

RangeAnswer query_rect(const UnitInstance& inst, const MTable& m, const Rect& rect) {
  if (rect.x1 > rect.x2 || rect.y1 > rect.y2) {
    throw PreconditionError("query_rect: malformed rectangle (x1 > x2 or y1 > y2)");
  }
  const std::size_t n = inst.size();
  if (m.sizes.n != n) throw PreconditionError("query_rect: table size mismatch");

  auto first_at_least = [&](std::span<const Index> order, const Scalar& v, bool use_x) {
    auto it = std::partition_point(order.begin(), order.end(), [&](Index i) {
      return (use_x ? inst.center(i).x : inst.center(i).y) < v;
    });
    return static_cast<std::size_t>(it - order.begin());
  };
  auto first_above = [&](std::span<const Index> order, const Scalar& v, bool use_x) {
    auto it = std::partition_point(order.begin(), order.end(), [&](Index i) {
      return (use_x ? inst.center(i).x : inst.center(i).y) <= v;
    });
    return static_cast<std::size_t>(it - order.begin());
  };
  std::size_t l = first_at_least(inst.x_order(), rect.x1, true);
  std::size_t r_end = first_above(inst.x_order(), rect.x2, true);
  std::size_t b = first_at_least(inst.y_order(), rect.y1, false);
  std::size_t t_end = first_above(inst.y_order(), rect.y2, false);
  if (l >= r_end || b >= t_end) return {};
  std::size_t r = r_end - 1;
  std::size_t t = t_end - 1;

  RangeAnswer answer;
  answer.size = m.sizes.at(l, r, t, b);
  if (answer.size == 0) return answer;
  while (true) {
    const auto code = static_cast<MWitness>(m.witness.at(l, r, t, b));
    if (code == MWitness::SBranch) break;
    switch (code) {
      case MWitness::ShrinkLeft: ++l; break;
      case MWitness::ShrinkRight: --r; break;
      case MWitness::ShrinkTop: --t; break;
      case MWitness::ShrinkBottom: ++b; break;
      default: throw std::logic_error("query_rect: corrupt witness code");
    }
  }
  answer.ids = slab_rect_clique(inst, l, r, t, b);
  if (answer.ids.size() != answer.size) {
    throw std::logic_error("query_rect: witness size disagrees with the table");
  }
  return answer;
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> bytes;
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(bytes.data(), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(bytes.data(), 8);
}

std::uint64_t get_le(std::istream& in, int width) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), width);
  if (in.gcount() != width) throw ParseError("range table file is truncated");
  std::uint64_t v = 0;
  for (int i = width - 1; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

void put_table(std::ostream& out, const Table4& t) {
  for (std::uint32_t v : t.values) put_u32(out, v);
}

void get_table(std::istream& in, Table4& t) {
  for (auto& v : t.values) v = static_cast<std::uint32_t>(get_le(in, 4));
}

constexpr std::string_view kMagic = "DCRQ1";

}  // namespace

void write_range_tables(std::ostream& out, const RangeTableFile& file) {
  const std::size_t n = file.x_order.size();
  if (file.y_order.size() != n || file.s.sizes.n != n || file.m.sizes.n != n ||
      file.m.witness.n != n) {
    throw PreconditionError("write_range_tables: inconsistent table dimensions");
  }
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  out.put(static_cast<char>(kRangeFileVersion));
  put_u32(out, static_cast<std::uint32_t>(n));
  for (Index i : file.x_order) put_u32(out, i);
  for (Index i : file.y_order) put_u32(out, i);
  put_u64(out, file.digest);
  put_table(out, file.s.sizes);
  put_table(out, file.m.sizes);
  put_table(out, file.m.witness);
  if (!out) throw Error("write_range_tables: stream write failed");
}

RangeTableFile read_range_tables(std::istream& in) {
  std::string magic(kMagic.size(), '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kMagic) {
    throw ParseError("not a DCRQ1 range table file");
  }
  const auto version = static_cast<std::uint8_t>(get_le(in, 1));
  if (version != kRangeFileVersion) {
    throw ParseError("unsupported range table version " + std::to_string(version));
  }
  const std::size_t n = get_le(in, 4);
  if (n > 1024) throw ParseError("range table file declares an implausible n");

  RangeTableFile file;
  file.x_order.resize(n);
  file.y_order.resize(n);
  for (auto& i : file.x_order) i = static_cast<Index>(get_le(in, 4));
  for (auto& i : file.y_order) i = static_cast<Index>(get_le(in, 4));
  file.digest = get_le(in, 8);
  file.s = STable{Table4(n)};
  file.m = MTable{Table4(n), Table4(n)};
  get_table(in, file.s.sizes);
  get_table(in, file.m.sizes);
  get_table(in, file.m.witness);
  for (std::uint32_t w : file.m.witness.values) {
    if (w > static_cast<std::uint32_t>(MWitness::ShrinkBottom)) {
      throw ParseError("range table file has an invalid witness code");
    }
  }
  return file;
}

}  // namespace dcq
