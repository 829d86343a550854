#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurpos {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// 1-based row access; rows past the end read as 0.
  int part(int row) const { return row >= 1 && row <= length() ? parts_[row - 1] : 0; }

  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  bool bounded_by(int k) const { return max_part() <= k; }
  bool is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] >= parts_[i - 1]) return false;
    return true;
  }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
      if (parts_[i] < mu.parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;

  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
};

/// Canonical total order: by size, then lexicographically largest-first.
/// Within a fixed size it refines dominance downward, so every transition
/// matrix indexed by it is triangular. All indices, serialized term lists
/// and map iterations use this order.
inline bool operator<(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}
inline bool operator>(const Partition& a, const Partition& b) { return b < a; }
inline bool operator<=(const Partition& a, const Partition& b) { return !(b < a); }
inline bool operator>=(const Partition& a, const Partition& b) { return !(a < b); }

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  cols.reserve(lambda.max_part());
  for (int c = 1; c <= lambda.max_part(); ++c) {
    int rows = 0;
    for (int p : lambda.parts()) rows += (p >= c) ? 1 : 0;
    cols.push_back(rows);
  }
  return Partition(std::move(cols));
}

enum class Dominance { less_or_equal, greater, incomparable };

/// Prefix-sum comparison of two partitions of the same size.
inline Dominance dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance comparison requires equal sizes");
  bool leq = true, geq = true;
  long long sl = 0, sm = 0;
  int n = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    sl += lambda.part(i);
    sm += mu.part(i);
    if (sl > sm) leq = false;
    if (sl < sm) geq = false;
  }
  if (leq) return Dominance::less_or_equal;
  if (geq) return Dominance::greater;
  return Dominance::incomparable;
}

/// All partitions of n passing the filters, in the canonical order.
inline std::vector<Partition> partitions_of(int n, std::optional<int> max_part = std::nullopt,
                                            bool strict = false, bool odd_parts = false) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      if (odd_parts && p % 2 == 0) continue;
      cur.push_back(p);
      self(self, remaining - p, strict ? p - 1 : p);
      cur.pop_back();
    }
  };
  int bound = max_part.value_or(n);
  if (n == 0) return {Partition{}};
  rec(rec, n, std::min(bound, n));
  return out;
}

/// Index of lambda in partitions_of(lambda.size(), ...) generated with the
/// same filters. The list is sorted in the canonical order, so binary search.
inline int partition_index(const std::vector<Partition>& index, const Partition& lambda) {
  auto it = std::lower_bound(index.begin(), index.end(), lambda);
  if (it == index.end() || !(*it == lambda))
    throw std::invalid_argument("partition not present in index: " + lambda.to_string());
  return static_cast<int>(it - index.begin());
}

// Cell coordinates are 1-based, English notation (row 1 on top).

inline int arm_length(const Partition& lambda, int row, int col) {
  return lambda.part(row) - col;
}

inline int leg_length(const Partition& lambda, int row, int col) {
  int leg = 0;
  for (int r = row + 1; r <= lambda.length(); ++r)
    if (lambda.part(r) >= col) ++leg;
  return leg;
}

inline int hook_length(const Partition& lambda, int row, int col) {
  if (row < 1 || col < 1 || col > lambda.part(row))
    throw std::invalid_argument("cell outside shape");
  return arm_length(lambda, row, col) + leg_length(lambda, row, col) + 1;
}

/// True iff no hook length of lambda is divisible by t.
inline bool is_core(const Partition& lambda, int t) {
  if (t < 2) throw std::invalid_argument("is_core: t must be at least 2");
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      if (hook_length(lambda, r, c) % t == 0) return false;
  return true;
}

/// Strictly decreasing positive parts; labels Schur P/Q functions.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(Partition p) : p_(std::move(p)) {
    if (!p_.is_strict()) throw std::invalid_argument("parts must be strictly decreasing");
  }
  explicit StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(Partition(parts)) {}

  const Partition& partition() const { return p_; }
  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.p_ < b.p_; }

 private:
  Partition p_;
};

/// Finite sequence of positive integers; indexes the monomial quasisymmetric
/// basis.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be at least 1");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  Partition sorted() const {
    std::vector<int> v = parts_;
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Same ordering convention as partitions: size, then largest-first lex.
inline bool operator<(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

inline std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(Composition(cur));
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace schurpos
