#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ditlogic {

class Partition;
class PairRelation;

PairRelation dit_set(const Partition& pi);
PairRelation interior(const PairRelation& r);

/// A subset of U x U stored densely, one 64-bit row mask per element:
/// bit v of row u is set iff (u, v) is a member.
class PairRelation {
 public:
  static constexpr std::size_t max_size = 64;

  /// The empty relation on n elements.
  explicit PairRelation(std::size_t n);

  static PairRelation full(std::size_t n);
  static PairRelation diagonal(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool contains(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u] >> v) & 1u;
  }
  void insert(std::size_t u, std::size_t v) noexcept { rows_[u] |= bit(v); }
  void erase(std::size_t u, std::size_t v) noexcept { rows_[u] &= ~bit(v); }

  std::uint64_t row(std::size_t u) const noexcept { return rows_[u]; }

  std::size_t cardinality() const noexcept;
  bool empty() const noexcept { return cardinality() == 0; }

  PairRelation complement() const;
  PairRelation operator|(const PairRelation& o) const;
  PairRelation operator&(const PairRelation& o) const;
  /// Set difference.
  PairRelation operator-(const PairRelation& o) const;

  bool subset_of(const PairRelation& o) const;

  bool is_reflexive() const noexcept;
  bool is_irreflexive() const noexcept;
  bool is_symmetric() const noexcept;
  bool is_transitive() const noexcept;
  /// (u,w) in R implies (u,v) in R or (v,w) in R for every v.
  bool is_anti_transitive() const noexcept;
  bool is_equivalence() const noexcept {
    return is_reflexive() && is_symmetric() && is_transitive();
  }
  bool is_partition_relation() const noexcept {
    return is_irreflexive() && is_symmetric() && is_anti_transitive();
  }

  /// True only for values produced by dit_set / interior, which are
  /// partition relations by construction.
  bool flagged_partition_relation() const noexcept { return open_flag_; }

  template <class F>
  void for_each_pair(F&& f) const {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::uint64_t m = rows_[u]; m != 0; m &= m - 1) {
        f(u, static_cast<std::size_t>(std::countr_zero(m)));
      }
    }
  }

  /// Equality of member sets; the partition-relation flag is ignored.
  friend bool operator==(const PairRelation& a, const PairRelation& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend PairRelation dit_set(const Partition& pi);
  friend PairRelation interior(const PairRelation& r);

  static std::uint64_t bit(std::size_t v) noexcept { return std::uint64_t{1} << v; }
  std::uint64_t all_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }
  void check_same_size(const PairRelation& o) const;

  std::size_t n_;
  std::vector<std::uint64_t> rows_;
  bool open_flag_ = false;
};

/// Smallest equivalence relation containing r: reflexive and symmetric
/// closure followed by Warshall transitive closure over the row masks.
PairRelation rst_closure(const PairRelation& r);

/// Largest partition relation contained in r: the complement of the
/// rst-closure of the complement.
PairRelation interior(const PairRelation& r);

}  // namespace ditlogic
