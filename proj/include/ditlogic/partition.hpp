#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ditlogic/pair_relation.hpp"

namespace ditlogic {

/// The finite carrier {0, ..., size-1}.
class Universe {
 public:
  explicit Universe(std::size_t size);
  std::size_t size() const noexcept { return size_; }
  friend bool operator==(Universe, Universe) = default;

 private:
  std::size_t size_;
};

using Block = std::vector<std::size_t>;

/// A set partition of a Universe, held in canonical form: elements ascending
/// within each block and blocks ordered by least element. Structural equality
/// is therefore equality of partitions.
class Partition {
 public:
  /// Builds the partition whose blocks are the classes of equal labels.
  /// Any labelling is accepted; the result is canonical.
  static Partition from_labels(std::span<const std::size_t> labels);

  /// 1: all singletons.
  static Partition discrete(std::size_t n);
  /// 0: a single block.
  static Partition indiscrete(std::size_t n);

  Universe universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Index into blocks() of the block holding u.
  std::size_t block_of(std::size_t u) const { return block_index_.at(u); }

  bool is_discrete() const noexcept { return blocks_.size() == size(); }
  bool is_indiscrete() const noexcept { return blocks_.size() == 1; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }

 private:
  explicit Partition(std::vector<std::size_t> canonical_labels);

  Universe universe_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_index_;
};

/// Validates blocks against {0..n-1}. Errors: overlap, coverage, empty_block,
/// element_out_of_range.
Partition make_partition(const std::vector<Block>& blocks, std::size_t n);

/// Ordered pairs lying in different blocks.
PairRelation dit_set(const Partition& pi);
/// Ordered pairs lying in a common block; U x U minus dit_set(pi).
PairRelation indit_set(const Partition& pi);

/// Inverse of indit_set. Throws Error{not_an_equivalence}.
Partition partition_from_equivalence(const PairRelation& e);
/// Partition whose dit set is r. Throws Error{not_an_equivalence} when r is
/// not a partition relation.
Partition partition_from_dit_set(const PairRelation& r);

/// Blocks are the non-empty intersections of a block of pi with a block of sigma.
Partition join(const Partition& pi, const Partition& sigma);
/// Union-find over the union of the two indistinction relations.
Partition meet(const Partition& pi, const Partition& sigma);
/// The meet as the partition with dit set int(dit(pi) & dit(sigma)).
Partition meet_via_interior(const Partition& pi, const Partition& sigma);

/// sigma => pi: pi with every block that lies inside some block of sigma
/// replaced by singletons.
Partition implication(const Partition& sigma, const Partition& pi);
/// sigma => pi as the partition with dit set int(indit(sigma) | dit(pi)).
Partition implication_via_interior(const Partition& sigma, const Partition& pi);

/// sigma <= pi in the refinement order: every block of pi lies in a block of sigma.
bool refines(const Partition& sigma, const Partition& pi);

/// dit(pi) & dit(sigma).
PairRelation mutual_dit_set(const Partition& pi, const Partition& sigma);
/// The union over blocks B of pi and C of sigma of (B - C) x (C - B).
PairRelation mutual_dit_set_structural(const Partition& pi, const Partition& sigma);

inline constexpr std::size_t default_enumeration_limit = 12;

/// Visits every partition of {0..n-1} once, in lexicographic order of
/// restricted-growth strings (so 0 comes first and 1 last).
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit,
                        std::size_t limit = default_enumeration_limit);

std::vector<Partition> enumerate_partitions(std::size_t n,
                                            std::size_t limit = default_enumeration_limit);

/// Bell number B(n) from the Bell triangle. Exact for n <= 25.
std::uint64_t bell_number(std::size_t n);

/// Pairs (i, j) of indices into `partitions` where partitions[j] covers
/// partitions[i] in the refinement order (the Hasse diagram edges).
std::vector<std::pair<std::size_t, std::size_t>> refinement_covers(
    std::span<const Partition> partitions);

}  // namespace ditlogic
