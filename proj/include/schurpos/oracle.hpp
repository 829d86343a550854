#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "schurpos/partition.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

/// Polynomial in a fixed number of variables with exact coefficients, keyed
/// by exponent vectors. Used as the independent reference for every basis
/// conversion: elements are expanded from the defining formulas of each
/// basis, never through transition matrices.
class VarPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  explicit VarPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("need at least one variable");
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<int>& exps, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static VarPoly constant(int nvars, const Rational& c) {
    VarPoly p(nvars);
    p.add(std::vector<int>(nvars, 0), c);
    return p;
  }

  VarPoly& operator+=(const VarPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  friend VarPoly operator*(const VarPoly& a, const VarPoly& b) {
    VarPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }

  friend VarPoly operator*(const Rational& c, VarPoly p) {
    if (c == 0) return VarPoly(p.nvars_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
  }

  friend bool operator==(const VarPoly&, const VarPoly&) = default;

 private:
  int nvars_;
  Terms terms_;
};

namespace detail {

inline VarPoly expand_h_row(int r, int nvars) {
  VarPoly out(nvars);
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[var] = remaining;
      out.add(e, 1);
      e[var] = 0;
      return;
    }
    for (int t = 0; t <= remaining; ++t) {
      e[var] = t;
      self(self, var + 1, remaining - t);
    }
    e[var] = 0;
  };
  rec(rec, 0, r);
  return out;
}

inline VarPoly expand_e_row(int r, int nvars) {
  VarPoly out(nvars);
  if (r > nvars) return out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (remaining == 0) {
      out.add(e, 1);
      return;
    }
    if (var >= nvars || nvars - var < remaining) return;
    e[var] = 1;
    self(self, var + 1, remaining - 1);
    e[var] = 0;
    self(self, var + 1, remaining);
  };
  rec(rec, 0, r);
  return out;
}

inline VarPoly expand_p_row(int r, int nvars) {
  VarPoly out(nvars);
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = r;
    out.add(e, 1);
  }
  return out;
}

inline VarPoly expand_monomial(const Partition& lam, int nvars) {
  VarPoly out(nvars);
  if (lam.length() > nvars) return out;
  std::vector<int> e(lam.parts().begin(), lam.parts().end());
  e.resize(nvars, 0);
  std::sort(e.begin(), e.end());
  do {
    out.add(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// Sum over semistandard tableaux of shape lambda with entries 1..nvars:
/// rows weakly increase, columns strictly increase.
inline VarPoly expand_schur(const Partition& lam, int nvars) {
  VarPoly out(nvars);
  int rows = lam.length();
  if (rows == 0) return VarPoly::constant(nvars, 1);
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lam.parts()[r], 0);
  std::vector<int> counts(nvars, 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      out.add(counts, 1);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lam.parts()[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
      t[r][c] = v;
      ++counts[v - 1];
      self(self, nr, nc);
      --counts[v - 1];
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace detail

/// Definition-based expansion of a single basis element in nvars variables.
inline VarPoly expand_basis_element(Basis b, const Partition& lam, int nvars) {
  switch (b) {
    case Basis::M: return detail::expand_monomial(lam, nvars);
    case Basis::S: return detail::expand_schur(lam, nvars);
    case Basis::H:
    case Basis::E:
    case Basis::P: {
      VarPoly acc = VarPoly::constant(nvars, 1);
      for (int part : lam.parts()) {
        VarPoly g = b == Basis::H   ? detail::expand_h_row(part, nvars)
                    : b == Basis::E ? detail::expand_e_row(part, nvars)
                                    : detail::expand_p_row(part, nvars);
        acc = acc * g;
      }
      return acc;
    }
  }
  throw std::invalid_argument("unknown basis");
}

/// Expands a term list given over basis b by substituting the generator
/// definitions. Requires nvars at least the maximal degree so that distinct
/// symmetric functions cannot alias.
inline VarPoly monomial_eval_oracle(Basis b, const SymFunc::Terms& terms, int nvars) {
  int maxdeg = 0;
  for (const auto& [lam, c] : terms) maxdeg = std::max(maxdeg, lam.size());
  if (nvars < maxdeg)
    throw std::invalid_argument("too few variables: degree " + std::to_string(maxdeg) +
                                " needs at least that many variables");
  VarPoly out(nvars);
  for (const auto& [lam, c] : terms) out += c * expand_basis_element(b, lam, nvars);
  return out;
}

inline VarPoly monomial_eval_oracle(const SymFunc& f, int nvars) {
  return monomial_eval_oracle(Basis::H, f.h_terms(), nvars);
}

}  // namespace schurpos
