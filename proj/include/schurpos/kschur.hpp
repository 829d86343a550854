#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schurpos/core.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

using KCoeffs = std::map<Partition, Rational>;

/// Multiplication by h_r in k-Schur coordinates at t=1: each s^{(k)}_lambda
/// maps to the sum of s^{(k)}_mu over weak horizontal r-strips mu/lambda.
/// h_r with r > k is not a generator of the subalgebra and is rejected.
inline KCoeffs pieri_step(const KCoeffs& coeffs, int r, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
  if (r > k)
    throw std::invalid_argument("h_" + std::to_string(r) + " is not a generator for k = " +
                                std::to_string(k));
  KCoeffs out;
  for (const auto& [lam, c] : coeffs) {
    if (!lam.bounded_by(k))
      throw std::invalid_argument("partition has a part exceeding k: " + lam.to_string());
    if (c == 0) continue;
    for (const auto& mu : partitions_of(lam.size() + r, k))
      if (is_weak_horizontal_strip(lam, mu, k, r)) {
        auto [it, inserted] = out.try_emplace(mu, c);
        if (!inserted) it->second += c;
      }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Per-degree transition matrices between {h_lambda} and the k-Schur basis
/// {s^{(k)}_lambda}, lambda running over k-bounded partitions in the
/// canonical order. Row lambda of h_to_kschur expands h_lambda, built by
/// iterating the weak Pieri rule over the parts of lambda in decreasing
/// order; it is unitriangular with integer entries, and the inverse is
/// computed exactly. Construction is single-writer; built blocks are
/// immutable and shared.
class KSchurBasis {
 public:
  struct Block {
    std::vector<Partition> index;
    std::vector<std::vector<Integer>> h_to_kschur;
    std::vector<std::vector<Integer>> kschur_to_h;
  };

  explicit KSchurBasis(int k, int max_degree = 0) : k_(k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    extend(max_degree);
  }

  int k() const { return k_; }

  int max_degree() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(blocks_.size()) - 1;
  }

  void extend(int degree) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(blocks_.size()) <= degree)
      blocks_.push_back(std::make_shared<const Block>(build_block(static_cast<int>(blocks_.size()))));
  }

  std::shared_ptr<const Block> block(int degree) {
    extend(degree);
    std::lock_guard<std::mutex> lock(mu_);
    return blocks_[degree];
  }

 private:
  int k_;
  mutable std::mutex mu_;
  std::vector<std::shared_ptr<const Block>> blocks_;

  Block build_block(int degree) const {
    Block b;
    b.index = partitions_of(degree, k_);
    int n = static_cast<int>(b.index.size());
    b.h_to_kschur.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) {
      KCoeffs acc{{Partition{}, Rational(1)}};
      for (int part : b.index[i].parts()) acc = pieri_step(acc, part, k_);
      for (const auto& [mu, c] : acc) {
        int j = partition_index(b.index, mu);
        if (!is_integral(c)) throw std::logic_error("weak Pieri iteration produced a non-integer");
        b.h_to_kschur[i][j] = to_integer(c);
      }
      for (int j = i + 1; j < n; ++j)
        if (b.h_to_kschur[i][j] != 0)
          throw std::logic_error("unitriangularity violated at h_" + b.index[i].to_string());
      if (b.h_to_kschur[i][i] != 1)
        throw std::logic_error("unit diagonal violated at h_" + b.index[i].to_string());
    }
    // exact inverse of a lower unitriangular integer matrix
    b.kschur_to_h.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) {
      b.kschur_to_h[i][i] = 1;
      for (int j = i - 1; j >= 0; --j) {
        Integer acc = 0;
        for (int t = j; t < i; ++t) acc += b.h_to_kschur[i][t] * b.kschur_to_h[t][j];
        b.kschur_to_h[i][j] = -acc;
      }
    }
    return b;
  }
};

/// Shared per-k bases.
inline KSchurBasis& kschur_basis(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KSchurBasis>> bases;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = bases[k];
  if (!slot) slot = std::make_unique<KSchurBasis>(k);
  return *slot;
}

namespace detail {
inline void require_bounded(const Partition& lam, int k) {
  if (!lam.bounded_by(k))
    throw std::invalid_argument("partition has a part exceeding k: " + lam.to_string());
}
}  // namespace detail

/// s^{(k)}_lambda written in the h basis; integer coefficients supported on
/// k-bounded partitions.
inline SymFunc kschur_in_h(int k, const Partition& lam) {
  detail::require_bounded(lam, k);
  auto block = kschur_basis(k).block(lam.size());
  int row = partition_index(block->index, lam);
  SymFunc::Terms t;
  for (std::size_t j = 0; j < block->index.size(); ++j)
    if (block->kschur_to_h[row][j] != 0)
      t.emplace(block->index[j], Rational(block->kschur_to_h[row][j]));
  return SymFunc::from_basis(Basis::H, t);
}

/// Schur expansion of s^{(k)}_lambda.
inline SymFunc::Expansion kschur_in_schur(int k, const Partition& lam) {
  return kschur_in_h(k, lam).to_basis(Basis::S);
}

struct KSchurExpansion {
  bool in_subalgebra = false;
  Partition offending;  // first h term with a part exceeding k, when not in the subalgebra
  KCoeffs coords;
};

/// Writes f in k-Schur coordinates. Succeeds exactly when the h expansion of
/// f is supported on k-bounded partitions; otherwise reports the offending
/// h term.
inline KSchurExpansion expand_in_kschur(const SymFunc& f, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (const auto& [lam, c] : f.h_terms())
    if (!lam.bounded_by(k)) return {false, lam, {}};
  KSchurExpansion out;
  out.in_subalgebra = true;
  auto& basis = kschur_basis(k);
  for (int d : f.degrees()) {
    auto block = basis.block(d);
    int n = static_cast<int>(block->index.size());
    std::vector<Rational> coeffs(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      auto it = f.h_terms().find(block->index[i]);
      if (it != f.h_terms().end()) coeffs[i] = it->second;
    }
    for (int j = 0; j < n; ++j) {
      Rational v = 0;
      for (int i = 0; i < n; ++i)
        if (coeffs[i] != 0 && block->h_to_kschur[i][j] != 0)
          v += coeffs[i] * Rational(block->h_to_kschur[i][j]);
      if (v != 0) out.coords.emplace(block->index[j], v);
    }
  }
  return out;
}

/// Coordinates of s^{(k)}_lambda in the (k+1)-Schur basis.
inline KCoeffs branch(int k, const Partition& lam) {
  SymFunc f = kschur_in_h(k, lam);
  auto expansion = expand_in_kschur(f, k + 1);
  if (!expansion.in_subalgebra)
    throw std::logic_error("k-bounded support escaped the (k+1)-bounded subalgebra");
  return std::move(expansion.coords);
}

/// Image of s^{(k)}_lambda under omega, in k-Schur coordinates. The image is
/// a single basis element; returns its index and coefficient.
inline std::pair<Partition, Rational> omega_on_kschur(int k, const Partition& lam) {
  detail::require_bounded(lam, k);
  auto expansion = expand_in_kschur(omega(kschur_in_h(k, lam)), k);
  if (!expansion.in_subalgebra)
    throw std::domain_error("omega image of s^{(" + std::to_string(k) + ")}_" + lam.to_string() +
                            " left the subalgebra at h_" + expansion.offending.to_string());
  if (expansion.coords.size() != 1)
    throw std::domain_error("omega image of s^{(" + std::to_string(k) + ")}_" + lam.to_string() +
                            " is not a single k-Schur term");
  return *expansion.coords.begin();
}

}  // namespace schurpos
