#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "schurpos/partition.hpp"

namespace schurpos {

/// Number of cells of lambda whose hook length is at most k.
inline int bounded_cell_count(const Partition& lambda, int k) {
  int n = 0;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      if (hook_length(lambda, r, c) <= k) ++n;
  return n;
}

/// A (k+1)-core with its residue bookkeeping. bounded_weight counts the cells
/// with hook length at most k; it equals the size of the k-bounded partner.
class CorePartition {
 public:
  CorePartition(Partition shape, int k) : shape_(std::move(shape)), k_(k) {
    if (k < 1) throw std::invalid_argument("core parameter k must be positive");
    if (!is_core(shape_, k + 1))
      throw std::invalid_argument(shape_.to_string() + " is not a " + std::to_string(k + 1) + "-core");
    bounded_weight_ = bounded_cell_count(shape_, k);
  }

  const Partition& shape() const { return shape_; }
  int k() const { return k_; }
  int bounded_weight() const { return bounded_weight_; }

 private:
  Partition shape_;
  int k_ = 1;
  int bounded_weight_ = 0;
};

/// Row i of the output counts cells of row i with hook length <= k. The
/// result is the k-bounded partner of the core.
inline Partition core_to_bounded(const CorePartition& kappa) {
  const Partition& shape = kappa.shape();
  std::vector<int> rows;
  rows.reserve(shape.length());
  for (int r = 1; r <= shape.length(); ++r) {
    int cnt = 0;
    for (int c = 1; c <= shape.part(r); ++c)
      if (hook_length(shape, r, c) <= kappa.k()) ++cnt;
    rows.push_back(cnt);
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

/// Lazily grown table of (k+1)-cores, level d holding the cores of
/// bounded_weight d. Levels are generated by breadth-first search from the
/// empty core: for each residue class i mod (k+1) with addable corners, all
/// of them are added simultaneously, which raises bounded_weight by exactly
/// one. Built by a single writer under a lock, then shared read-only.
class CoreTable {
 public:
  // level d: k-bounded partition of d -> its (k+1)-core
  using Level = std::map<Partition, Partition>;

  explicit CoreTable(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("core table needs k >= 1");
    levels_.push_back(std::make_shared<const Level>(Level{{Partition{}, Partition{}}}));
  }

  int k() const { return k_; }

  void extend(int weight) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(levels_.size()) <= weight) grow_one_level();
  }

  /// Cores of bounded_weight d, keyed by their k-bounded partner. Completed
  /// levels are immutable and heap-owned, so the reference stays valid while
  /// other threads extend the table.
  const Level& level(int d) {
    extend(d);
    std::lock_guard<std::mutex> lock(mu_);
    return *levels_[d];
  }

  const Partition& core_of(const Partition& bounded) {
    if (!bounded.bounded_by(k_))
      throw std::invalid_argument("partition has a part exceeding k: " + bounded.to_string());
    const Level& lvl = level(bounded.size());
    auto it = lvl.find(bounded);
    if (it == lvl.end())
      throw std::logic_error("core table is missing " + bounded.to_string());
    return it->second;
  }

 private:
  int k_;
  std::mutex mu_;
  std::vector<std::shared_ptr<const Level>> levels_;

  // Addable corner rows of lambda, as (row, content) pairs.
  static std::vector<std::pair<int, int>> addable_corners(const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
      int col = lambda.part(r) + 1;
      if (r == 1 || lambda.part(r - 1) >= col) out.emplace_back(r, col - r);
    }
    return out;
  }

  // caller holds mu_
  void grow_one_level() {
    int d = static_cast<int>(levels_.size()) - 1;
    const int t = k_ + 1;
    std::set<Partition> seen;
    Level next;
    for (const auto& [bounded, core] : *levels_[d]) {
      auto corners = addable_corners(core);
      for (int residue = 0; residue < t; ++residue) {
        std::vector<int> grown = core.parts();
        grown.resize(core.length() + 1, 0);
        bool any = false;
        for (const auto& [row, content] : corners) {
          if (((content % t) + t) % t == residue) {
            grown[row - 1] += 1;
            any = true;
          }
        }
        if (!any) continue;
        while (!grown.empty() && grown.back() == 0) grown.pop_back();
        Partition child(std::move(grown));
        if (!seen.insert(child).second) continue;
        CorePartition as_core(child, k_);  // certifies the core property
        if (as_core.bounded_weight() != d + 1)
          throw std::logic_error("residue addition did not raise bounded_weight by 1");
        next.emplace(core_to_bounded(as_core), std::move(child));
      }
    }
    if (static_cast<int>(next.size()) != static_cast<int>(partitions_of(d + 1, k_).size()))
      throw std::logic_error("core level size disagrees with k-bounded partition count");
    levels_.push_back(std::make_shared<const Level>(std::move(next)));
  }
};

/// Shared per-k core tables.
inline CoreTable& core_table(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CoreTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[k];
  if (!slot) slot = std::make_unique<CoreTable>(k);
  return *slot;
}

/// The unique (k+1)-core whose k-bounded partner is lambda.
inline Partition bounded_to_core(const Partition& lambda, int k) {
  return core_table(k).core_of(lambda);
}

/// Image of lambda under core conjugation transported through the bijection;
/// an involution on k-bounded partitions of each size.
inline Partition k_conjugate(const Partition& lambda, int k) {
  Partition core = bounded_to_core(lambda, k);
  return core_to_bounded(CorePartition(conjugate(core), k));
}

/// mu/lambda adds at most one cell per column.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!mu.contains(lambda)) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i + 1) > lambda.part(i)) return false;
  return true;
}

/// mu/lambda adds at most one cell per row.
inline bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!mu.contains(lambda)) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) - lambda.part(i) > 1) return false;
  return true;
}

/// Weak Pieri condition: mu/lambda is an r-cell horizontal strip whose
/// k-conjugate skew is a vertical strip.
inline bool is_weak_horizontal_strip(const Partition& lambda, const Partition& mu, int k, int r) {
  if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
  if (!lambda.bounded_by(k))
    throw std::invalid_argument("partition has a part exceeding k: " + lambda.to_string());
  if (!mu.bounded_by(k))
    throw std::invalid_argument("partition has a part exceeding k: " + mu.to_string());
  if (mu.size() - lambda.size() != r) return false;
  if (!is_horizontal_strip(lambda, mu)) return false;
  return is_vertical_strip(k_conjugate(lambda, k), k_conjugate(mu, k));
}

}  // namespace schurpos
