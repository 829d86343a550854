#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schurpos/detail/linalg.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

/// Q_r = sum_{j=0}^r e_j h_{r-j}, the doubled one-row Schur P-function;
/// manifestly integral. Q_0 = 1.
inline SymFunc q_row(int r) {
  if (r < 0) throw std::invalid_argument("row index must be nonnegative");
  static std::mutex mu;
  static std::deque<SymFunc> memo;
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(memo.size()); m <= r; ++m) {
    SymFunc::Terms t;
    for (int j = 0; j <= m; ++j) {
      Partition rest = (m - j > 0) ? Partition{m - j} : Partition{};
      for (const auto& [key, c] : detail::e_in_h(j))
        detail::add_term(t, detail::concat_parts(key, rest), c);
    }
    memo.push_back(SymFunc::from_basis(Basis::H, t));
  }
  return memo[r];
}

/// P_r = Q_r / 2 for r >= 1; integral despite the half.
inline SymFunc p_row(int r) {
  if (r < 1) throw std::invalid_argument("one-row P-functions need a positive row");
  return q_row(r) * Rational(1, 2);
}

/// Coefficient of p_r in the power-sum expansion of P_r.
inline Rational p_coefficient_check(int i) {
  if (i < 1) throw std::invalid_argument("row index must be positive");
  auto exp = p_row(i).to_basis(Basis::P);
  auto it = exp.terms.find(Partition{i});
  return it == exp.terms.end() ? Rational(0) : it->second;
}

/// Two-row Q_{(r,s)} for r >= s >= 0:
///   Q_{(r,s)} = Q_r Q_s + 2 sum_{i=1}^{s} (-1)^i Q_{r+i} Q_{s-i},
/// with Q_{(r,0)} = Q_r.
inline SymFunc q_two_rows(int r, int s) {
  if (r < s || s < 0) throw std::invalid_argument("two-row entries need r >= s >= 0");
  if (s == 0) return q_row(r);
  SymFunc out = q_row(r) * q_row(s);
  for (int i = 1; i <= s; ++i) {
    SymFunc term = q_row(r + i) * q_row(s - i);
    term *= Rational(i % 2 == 0 ? 2 : -2);
    out += term;
  }
  return out;
}

namespace detail {

/// Pfaffian over Sym, expanding along the first remaining index.
inline SymFunc pfaffian(const std::vector<std::vector<SymFunc>>& a, const std::vector<int>& idx) {
  if (idx.empty()) return SymFunc::unit();
  SymFunc out;
  int first = idx.front();
  for (std::size_t t = 1; t < idx.size(); ++t) {
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t u = 1; u < idx.size(); ++u)
      if (u != t) rest.push_back(idx[u]);
    SymFunc term = a[first][idx[t]] * pfaffian(a, rest);
    if (t % 2 == 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

}  // namespace detail

/// Multi-row Schur Q-function: the Pfaffian of the antisymmetric matrix with
/// entries Q_{(lambda_i, lambda_j)}, lambda padded with one zero part when
/// its length is odd. Antisymmetry below the diagonal is enforced by
/// construction.
inline SymFunc q_lambda(const StrictPartition& lambda) {
  std::vector<int> rows = lambda.partition().parts();
  if (rows.empty()) return SymFunc::unit();
  if (rows.size() == 1) return q_row(rows[0]);
  if (rows.size() % 2 == 1) rows.push_back(0);
  int n = static_cast<int>(rows.size());
  std::vector<std::vector<SymFunc>> a(n, std::vector<SymFunc>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = q_two_rows(rows[i], rows[j]);
      a[j][i] = -a[i][j];
    }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return detail::pfaffian(a, idx);
}

/// P_lambda = Q_lambda / 2^{length(lambda)}.
inline SymFunc p_lambda(const StrictPartition& lambda) {
  SymFunc q = q_lambda(lambda);
  int len = lambda.partition().length();
  Rational scale(1);
  for (int i = 0; i < len; ++i) scale /= 2;
  return q * scale;
}

/// The ring morphism with p_{2i} -> 0 and p_{2i+1} -> 2 p_{2i+1}; on a
/// power-sum monomial this kills even parts and doubles once per odd part.
/// Satisfies theta(h_i) = Q_i.
inline SymFunc theta(const SymFunc& f) {
  auto exp = f.to_basis(Basis::P);
  SymFunc::Terms out;
  for (const auto& [lam, c] : exp.terms) {
    bool even = false;
    for (int part : lam.parts())
      if (part % 2 == 0) {
        even = true;
        break;
      }
    if (even) continue;
    Rational scaled = c;
    for (int i = 0; i < lam.length(); ++i) scaled *= 2;
    detail::add_term(out, lam, scaled);
  }
  return SymFunc::from_basis(Basis::P, out);
}

enum class GammaError { even_p_support, generator_bound_exceeded, non_integral_expansion };

inline const char* gamma_error_name(GammaError e) {
  switch (e) {
    case GammaError::even_p_support: return "even-p-support";
    case GammaError::generator_bound_exceeded: return "generator-bound-exceeded";
    case GammaError::non_integral_expansion: return "non-integral-expansion";
  }
  return "unknown";
}

/// Expansion in monomials of the odd one-row generators P_1, P_3, P_5, ...
/// The keys are the odd partitions of generator subscripts.
struct GammaExpansion {
  std::optional<GammaError> error;
  Partition witness;  // offending power-sum partition for even-p-support
  std::map<Partition, Integer> terms;

  bool ok() const { return !error.has_value(); }
};

/// Decides membership of f in Z[P_1, P_3, ...] in two stages: the power-sum
/// support must be all-odd, and the exact linear system over the generator
/// monomials (restricted to generators <= generator_bound when given) must
/// have an integral solution. The three failure modes carry distinct codes.
inline GammaExpansion gamma_expand(const SymFunc& f,
                                   std::optional<int> generator_bound = std::nullopt) {
  if (generator_bound && (*generator_bound < 1 || *generator_bound % 2 == 0))
    throw std::invalid_argument("generator bound must be a positive odd integer");
  auto exp = f.to_basis(Basis::P);
  for (const auto& [lam, c] : exp.terms)
    for (int part : lam.parts())
      if (part % 2 == 0) return {GammaError::even_p_support, lam, {}};

  GammaExpansion out;
  for (int d : f.degrees()) {
    if (d == 0) {
      Rational c = exp.terms.at(Partition{});
      if (!is_integral(c)) return {GammaError::non_integral_expansion, {}, {}};
      out.terms.emplace(Partition{}, to_integer(c));
      continue;
    }
    std::vector<Partition> odd = partitions_of(d, std::nullopt, false, true);
    std::vector<Partition> monomials =
        generator_bound ? partitions_of(d, *generator_bound, false, true) : odd;
    if (monomials.empty()) return {GammaError::generator_bound_exceeded, {}, {}};

    // rows: odd power-sum coordinates; columns: generator monomials
    detail::Mat a(odd.size(), detail::Vec(monomials.size(), Rational(0)));
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      SymFunc prod = SymFunc::unit();
      for (int part : monomials[j].parts()) prod = prod * p_row(part);
      auto pexp = prod.to_basis(Basis::P);
      for (const auto& [delta, c] : pexp.terms) a[partition_index(odd, delta)][j] = c;
    }
    detail::Vec b(odd.size(), Rational(0));
    for (std::size_t i = 0; i < odd.size(); ++i) {
      auto it = exp.terms.find(odd[i]);
      if (it != exp.terms.end()) b[i] = it->second;
    }
    auto solution = detail::solve(std::move(a), std::move(b));
    if (!solution) return {GammaError::generator_bound_exceeded, {}, {}};
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if ((*solution)[j] == 0) continue;
      if (!is_integral((*solution)[j])) return {GammaError::non_integral_expansion, {}, {}};
      out.terms.emplace(monomials[j], to_integer((*solution)[j]));
    }
  }
  return out;
}

struct PPositivityItem {
  Partition lambda;
  SymFunc::Terms schur_terms;
  bool integral = false;
  bool schur_nonneg = false;
  bool pass() const { return integral && schur_nonneg; }
};

struct PPositivityReport {
  std::vector<PPositivityItem> items;
  bool pass = true;
};

/// Expands P_lambda in the Schur basis for every strict lambda of size 1 to
/// max_degree and records integrality and nonnegativity.
inline PPositivityReport verify_p_positivity(int max_degree) {
  if (max_degree > 10) throw std::invalid_argument("desk-scale cap is degree 10");
  PPositivityReport report;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& lam : partitions_of(d, std::nullopt, true)) {
      PPositivityItem item;
      item.lambda = lam;
      auto exp = p_lambda(StrictPartition(lam)).to_basis(Basis::S);
      item.schur_terms = exp.terms;
      item.integral = exp.integral;
      item.schur_nonneg = true;
      for (const auto& [mu, c] : exp.terms)
        if (c < 0) item.schur_nonneg = false;
      report.pass = report.pass && item.pass();
      report.items.push_back(std::move(item));
    }
  return report;
}

}  // namespace schurpos
