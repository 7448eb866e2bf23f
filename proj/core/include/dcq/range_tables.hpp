#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcq/guess.hpp"
#include "dcq/instance.hpp"

namespace dcq {

/// Closed axis-aligned query rectangle [x1, x2] x [y1, y2].
struct Rect {
  Scalar x1;
  Scalar y1;
  Scalar x2;
  Scalar y2;
};

inline constexpr std::size_t kDefaultRangeMaxN = 64;

/// Equal-radius disks in general position (pairwise distinct x and pairwise
/// distinct y), with both sorted orders precomputed. Table indices l, r are
/// ranks in x order and t, b ranks in y order.
class UnitInstance {
 public:
  /// Throws ValidationError when empty, radii differ, or two centers share
  /// an x- or a y-coordinate.
  explicit UnitInstance(DiskInstance disks);

  const DiskInstance& disks() const { return disks_; }
  std::size_t size() const { return disks_.size(); }
  const Point2& center(Index i) const { return disks_.disks[i].center; }
  bool adjacent(Index a, Index b) const { return adjacency_.adjacent(a, b); }

  std::span<const Index> x_order() const { return x_order_; }
  std::span<const Index> y_order() const { return y_order_; }
  std::size_t x_rank(Index i) const { return x_rank_[i]; }
  std::size_t y_rank(Index i) const { return y_rank_[i]; }

 private:
  DiskInstance disks_;
  AdjacencyMatrix adjacency_;
  std::vector<Index> x_order_;
  std::vector<Index> y_order_;
  std::vector<std::size_t> x_rank_;
  std::vector<std::size_t> y_rank_;
};

/// True when every x and every y coordinate is distinct.
bool in_general_position(const DiskInstance& disks);

/// Returns the instance unchanged if it is already in general position.
/// Otherwise moves disk i (id order) by ((i+1)e, (i+1)e) where e is a power
/// of ten below g / (2(n+1)) and g the smallest nonzero gap between two x or
/// two y coordinates. Sorted orders of distinct coordinates are preserved;
/// only pairs at exact tangency can change adjacency. Sets *changed.
DiskInstance perturb_to_general_position(const DiskInstance& disks, bool* changed = nullptr);

/// Dense row-major table over (l, r, t, b) of 32-bit clique sizes.
struct Table4 {
  std::size_t n = 0;
  std::vector<std::uint32_t> values;

  explicit Table4(std::size_t n_ = 0) : n(n_), values(n_ * n_ * n_ * n_, 0) {}
  std::size_t offset(std::size_t l, std::size_t r, std::size_t t, std::size_t b) const {
    return ((l * n + r) * n + t) * n + b;
  }
  std::uint32_t at(std::size_t l, std::size_t r, std::size_t t, std::size_t b) const {
    return values[offset(l, r, t, b)];
  }
  std::uint32_t& at(std::size_t l, std::size_t r, std::size_t t, std::size_t b) {
    return values[offset(l, r, t, b)];
  }
};

/// S[l, r, t, b]: largest clique among disks adjacent to both p_l and p_r
/// with centers in [x_l, x_r] x [y_b, y_t], provided p_l and p_r are
/// adjacent and both inside the y-range; 0 otherwise.
struct STable {
  Table4 sizes;
};

enum class MWitness : std::uint32_t {
  SBranch = 0,
  ShrinkLeft = 1,    ///< l + 1
  ShrinkRight = 2,   ///< r - 1
  ShrinkTop = 3,     ///< t - 1
  ShrinkBottom = 4,  ///< b + 1
};

/// M[l, r, t, b]: maximum clique among centers in [x_l, x_r] x [y_b, y_t],
/// with the branch of the recurrence that attained it.
struct MTable {
  Table4 sizes;
  Table4 witness;
};

struct RangeBuildOptions {
  std::size_t threads = 1;
  std::size_t max_n = kDefaultRangeMaxN;
  /// After every sweep step, rebuild the slab's conflict graph from scratch
  /// and compare matching sizes (throws std::logic_error on mismatch).
  bool verify_incremental = false;
};

/// One conflict graph per adjacent slab (p_l, p_r), swept over the y-ranks
/// in boustrophedon order: phase 1 fixes the bottom at the lowest center and
/// inserts upward; afterwards each bottom advance deletes one center and the
/// top alternately walks down (deleting) or up (inserting). Every visited
/// (t, b) strip containing p_l and p_r records members - matching.
/// Throws PreconditionError when n exceeds options.max_n.
STable build_s_table(const UnitInstance& instance, const RangeBuildOptions& options = {});

MTable build_m_table(const UnitInstance& instance, const STable& s);

/// Maximum clique of the members of one S entry, recovered by re-solving the
/// slab rectangle. Sorted indices.
std::vector<Index> slab_rect_clique(const UnitInstance& instance, std::size_t l, std::size_t r,
                                    std::size_t t, std::size_t b);

struct RangeAnswer {
  std::uint32_t size = 0;
  std::vector<Index> ids;  ///< sorted; empty iff size == 0
};

/// Locates the extreme center ranks inside rect by binary search, reads M and
/// follows witness pointers to an S entry to recover the clique.
/// Throws PreconditionError when x1 > x2 or y1 > y2.
RangeAnswer query_rect(const UnitInstance& instance, const MTable& m, const Rect& rect);

/// Contents of a DCRQ1 table file.
struct RangeTableFile {
  std::vector<Index> x_order;
  std::vector<Index> y_order;
  std::uint64_t digest = 0;
  STable s;
  MTable m;
};

inline constexpr std::uint8_t kRangeFileVersion = 1;

/// Layout, all integers little-endian: "DCRQ1", version byte, u32 n,
/// x_order[n] u32, y_order[n] u32, u64 digest, S[n^4] u32, M[n^4] u32,
/// witness[n^4] u32, each table row-major in (l, r, t, b).
void write_range_tables(std::ostream& out, const RangeTableFile& file);

/// Throws ParseError on a bad magic, version or truncated stream.
RangeTableFile read_range_tables(std::istream& in);

}  // namespace dcq
