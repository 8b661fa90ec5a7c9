#include "ditlogic/pair_relation.hpp"

#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

PairRelation::PairRelation(std::size_t n) : n_(n), rows_(n, 0) {
  if (n == 0) throw Error(ErrorKind::empty_universe, "relation universe must be non-empty");
  if (n > max_size) {
    throw Error(ErrorKind::limit_exceeded,
                "relation universe size " + std::to_string(n) + " exceeds " +
                    std::to_string(max_size));
  }
}

PairRelation PairRelation::full(std::size_t n) {
  PairRelation r(n);
  for (auto& row : r.rows_) row = r.all_mask();
  return r;
}

PairRelation PairRelation::diagonal(std::size_t n) {
  PairRelation r(n);
  for (std::size_t u = 0; u < n; ++u) r.rows_[u] = bit(u);
  return r;
}

void PairRelation::check_same_size(const PairRelation& o) const {
  if (n_ != o.n_) {
    throw Error(ErrorKind::universe_mismatch, "relations on universes of size " +
                                                  std::to_string(n_) + " and " +
                                                  std::to_string(o.n_));
  }
}

std::size_t PairRelation::cardinality() const noexcept {
  std::size_t c = 0;
  for (auto row : rows_) c += static_cast<std::size_t>(std::popcount(row));
  return c;
}

PairRelation PairRelation::complement() const {
  PairRelation r(n_);
  for (std::size_t u = 0; u < n_; ++u) r.rows_[u] = ~rows_[u] & all_mask();
  return r;
}

PairRelation PairRelation::operator|(const PairRelation& o) const {
  check_same_size(o);
  PairRelation r(n_);
  for (std::size_t u = 0; u < n_; ++u) r.rows_[u] = rows_[u] | o.rows_[u];
  return r;
}

PairRelation PairRelation::operator&(const PairRelation& o) const {
  check_same_size(o);
  PairRelation r(n_);
  for (std::size_t u = 0; u < n_; ++u) r.rows_[u] = rows_[u] & o.rows_[u];
  return r;
}

PairRelation PairRelation::operator-(const PairRelation& o) const {
  check_same_size(o);
  PairRelation r(n_);
  for (std::size_t u = 0; u < n_; ++u) r.rows_[u] = rows_[u] & ~o.rows_[u];
  return r;
}

bool PairRelation::subset_of(const PairRelation& o) const {
  check_same_size(o);
  for (std::size_t u = 0; u < n_; ++u) {
    if ((rows_[u] & ~o.rows_[u]) != 0) return false;
  }
  return true;
}

bool PairRelation::is_reflexive() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    if (!contains(u, u)) return false;
  }
  return true;
}

bool PairRelation::is_irreflexive() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    if (contains(u, u)) return false;
  }
  return true;
}

bool PairRelation::is_symmetric() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (contains(u, v) != contains(v, u)) return false;
    }
  }
  return true;
}

bool PairRelation::is_transitive() const noexcept {
  // (u,v) and (v,w) in R imply row(v) is a subset of row(u).
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::uint64_t m = rows_[u]; m != 0; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if ((rows_[v] & ~rows_[u]) != 0) return false;
    }
  }
  return true;
}

bool PairRelation::is_anti_transitive() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t w = 0; w < n_; ++w) {
      if (!contains(u, w)) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!contains(u, v) && !contains(v, w)) return false;
      }
    }
  }
  return true;
}

PairRelation rst_closure(const PairRelation& r) {
  const std::size_t n = r.size();
  std::vector<std::uint64_t> rows(n);
  for (std::size_t u = 0; u < n; ++u) rows[u] = r.row(u) | (std::uint64_t{1} << u);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint64_t m = r.row(u); m != 0; m &= m - 1) {
      rows[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint64_t{1} << u;
    }
  }
  // Warshall: after step k, paths through intermediates 0..k are closed.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
    }
  }
  PairRelation out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint64_t m = rows[u]; m != 0; m &= m - 1) {
      out.insert(u, static_cast<std::size_t>(std::countr_zero(m)));
    }
  }
  return out;
}

PairRelation interior(const PairRelation& r) {
  PairRelation out = rst_closure(r.complement()).complement();
  out.open_flag_ = true;
  return out;
}

}  // namespace ditlogic
