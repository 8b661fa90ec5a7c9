#include "ditlogic/partition.hpp"

#include <numeric>
#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

void check_same_universe(const Partition& a, const Partition& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorKind::universe_mismatch, "partitions on universes of size " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  }
}

// True when every element of `block` shares one block of `sigma`.
bool inside_one_block(const Block& block, const Partition& sigma) {
  const std::size_t c = sigma.block_of(block.front());
  for (auto u : block) {
    if (sigma.block_of(u) != c) return false;
  }
  return true;
}

}  // namespace

Universe::Universe(std::size_t size) : size_(size) {
  if (size == 0) throw Error(ErrorKind::empty_universe, "universe must be non-empty");
}

Partition::Partition(std::vector<std::size_t> labels)
    : universe_(labels.size()), block_index_(std::move(labels)) {
  std::size_t count = 0;
  for (auto l : block_index_) count = std::max(count, l + 1);
  blocks_.resize(count);
  for (std::size_t u = 0; u < block_index_.size(); ++u) blocks_[block_index_[u]].push_back(u);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  if (labels.empty()) throw Error(ErrorKind::empty_universe, "universe must be non-empty");
  // Renumber labels in order of first appearance so blocks sort by least element.
  std::vector<std::size_t> canonical(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    std::size_t id = seen.size();
    for (const auto& [label, assigned] : seen) {
      if (label == labels[u]) {
        id = assigned;
        break;
      }
    }
    if (id == seen.size()) seen.emplace_back(labels[u], id);
    canonical[u] = id;
  }
  return Partition(std::move(canonical));
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(Universe(n).size());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return Partition(std::move(labels));
}

Partition Partition::indiscrete(std::size_t n) {
  return Partition(std::vector<std::size_t>(Universe(n).size(), 0));
}

Partition make_partition(const std::vector<Block>& blocks, std::size_t n) {
  const Universe universe(n);
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(universe.size(), unassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorKind::empty_block, "block " + std::to_string(b) + " is empty");
    }
    for (auto u : blocks[b]) {
      if (u >= n) {
        throw Error(ErrorKind::element_out_of_range,
                    "element " + std::to_string(u) + " outside universe of size " +
                        std::to_string(n));
      }
      if (labels[u] != unassigned) {
        throw Error(ErrorKind::overlap, "element " + std::to_string(u) +
                                            " appears in more than one block");
      }
      labels[u] = b;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (labels[u] == unassigned) {
      throw Error(ErrorKind::coverage, "element " + std::to_string(u) + " is in no block");
    }
  }
  return Partition::from_labels(labels);
}

PairRelation dit_set(const Partition& pi) {
  PairRelation r = indit_set(pi).complement();
  r.open_flag_ = true;
  return r;
}

PairRelation indit_set(const Partition& pi) {
  PairRelation r(pi.size());
  for (const auto& block : pi.blocks()) {
    for (auto u : block) {
      for (auto v : block) r.insert(u, v);
    }
  }
  return r;
}

Partition partition_from_equivalence(const PairRelation& e) {
  if (!e.is_equivalence()) {
    throw Error(ErrorKind::not_an_equivalence,
                "relation is not reflexive, symmetric and transitive");
  }
  std::vector<std::size_t> labels(e.size());
  for (std::size_t u = 0; u < e.size(); ++u) {
    labels[u] = static_cast<std::size_t>(std::countr_zero(e.row(u)));
  }
  return Partition::from_labels(labels);
}

Partition partition_from_dit_set(const PairRelation& r) {
  return partition_from_equivalence(r.complement());
}

Partition join(const Partition& pi, const Partition& sigma) {
  check_same_universe(pi, sigma);
  std::vector<std::size_t> labels(pi.size());
  for (std::size_t u = 0; u < pi.size(); ++u) {
    labels[u] = pi.block_of(u) * sigma.block_count() + sigma.block_of(u);
  }
  return Partition::from_labels(labels);
}

Partition meet(const Partition& pi, const Partition& sigma) {
  check_same_universe(pi, sigma);
  DisjointSets sets(pi.size());
  for (const auto* p : {&pi, &sigma}) {
    for (const auto& block : p->blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) sets.unite(block[0], block[i]);
    }
  }
  std::vector<std::size_t> labels(pi.size());
  for (std::size_t u = 0; u < pi.size(); ++u) labels[u] = sets.find(u);
  return Partition::from_labels(labels);
}

Partition meet_via_interior(const Partition& pi, const Partition& sigma) {
  check_same_universe(pi, sigma);
  return partition_from_dit_set(interior(dit_set(pi) & dit_set(sigma)));
}

Partition implication(const Partition& sigma, const Partition& pi) {
  check_same_universe(sigma, pi);
  const std::size_t n = pi.size();
  std::vector<std::size_t> labels(n);
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    const Block& block = pi.blocks()[b];
    const bool discretize = inside_one_block(block, sigma);
    for (auto u : block) labels[u] = discretize ? u : n + b;
  }
  return Partition::from_labels(labels);
}

Partition implication_via_interior(const Partition& sigma, const Partition& pi) {
  check_same_universe(sigma, pi);
  return partition_from_dit_set(interior(indit_set(sigma) | dit_set(pi)));
}

bool refines(const Partition& sigma, const Partition& pi) {
  check_same_universe(sigma, pi);
  for (const auto& block : pi.blocks()) {
    if (!inside_one_block(block, sigma)) return false;
  }
  return true;
}

PairRelation mutual_dit_set(const Partition& pi, const Partition& sigma) {
  check_same_universe(pi, sigma);
  return dit_set(pi) & dit_set(sigma);
}

PairRelation mutual_dit_set_structural(const Partition& pi, const Partition& sigma) {
  check_same_universe(pi, sigma);
  PairRelation r(pi.size());
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    for (std::size_t c = 0; c < sigma.block_count(); ++c) {
      // (B - C) x (C - B)
      for (auto u : pi.blocks()[b]) {
        if (sigma.block_of(u) == c) continue;
        for (auto v : sigma.blocks()[c]) {
          if (pi.block_of(v) != b) r.insert(u, v);
        }
      }
    }
  }
  return r;
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit,
                        std::size_t limit) {
  const Universe universe(n);
  if (n > limit) {
    throw Error(ErrorKind::limit_exceeded, "enumeration of partitions of " + std::to_string(n) +
                                               " elements exceeds limit " +
                                               std::to_string(limit));
  }
  // a is a restricted-growth string: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  // prefix_max[i] = max(a[0..i]).
  std::vector<std::size_t> a(universe.size(), 0);
  std::vector<std::size_t> prefix_max(universe.size(), 0);
  while (true) {
    visit(Partition::from_labels(a));
    std::size_t i = n - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t limit) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limit);
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) {
    throw Error(ErrorKind::limit_exceeded, "Bell number B(" + std::to_string(n) +
                                               ") does not fit in 64 bits");
  }
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<std::pair<std::size_t, std::size_t>> refinement_covers(
    std::span<const Partition> partitions) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t j = 0; j < partitions.size(); ++j) {
      const auto& lower = partitions[i];
      const auto& upper = partitions[j];
      // A cover in the refinement order splits exactly one block in two.
      if (upper.block_count() == lower.block_count() + 1 && refines(lower, upper)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

}  // namespace ditlogic
