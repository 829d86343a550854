#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schurpos/hopf.hpp"
#include "schurpos/kschur.hpp"
#include "schurpos/oracle.hpp"
#include "schurpos/schur_pq.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

struct CheckItem {
  std::string input;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<CheckItem> items;
  bool within_budget = true;
  bool pass = true;

  int failures() const {
    int n = 0;
    for (const auto& item : items) n += item.pass ? 0 : 1;
    return n;
  }
};

struct VerifyOptions {
  std::optional<int> max_degree;  // shrinks or widens the sweep where meaningful
  std::optional<int> k;           // restricts positivity sweeps to a single k
};

namespace detail {

inline bool nonneg_integer_terms(const std::map<Partition, Rational>& terms, std::string& note) {
  for (const auto& [lam, c] : terms) {
    if (!is_integral(c)) {
      note = "non-integer coefficient at " + lam.to_string();
      return false;
    }
    if (c < 0) {
      note = "negative coefficient at " + lam.to_string();
      return false;
    }
  }
  return true;
}

inline std::string term_string(const std::map<Partition, Rational>& terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [lam, c] : terms) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << "*";
    out << lam.to_string();
  }
  return first ? "0" : out.str();
}

}  // namespace detail

/// Criterion 1: for k at and above the degree, a k-Schur function is the
/// matching Schur function.
inline void criterion_degeneration(CriterionResult& r, const VerifyOptions& opt) {
  int dmax = opt.max_degree.value_or(6);
  for (int d = 0; d <= dmax; ++d)
    for (const auto& lam : partitions_of(d)) {
      for (int k : {std::max(1, d), std::max(1, d) + 1}) {
        CheckItem item;
        item.input = "k=" + std::to_string(k) + " lambda=" + lam.to_string();
        auto exp = kschur_in_schur(k, lam);
        item.pass = exp.terms == SymFunc::Terms{{lam, Rational(1)}};
        if (!item.pass) item.detail = "expansion " + detail::term_string(exp.terms);
        r.items.push_back(std::move(item));
      }
    }
}

namespace detail {

inline std::vector<int> positivity_ks(const VerifyOptions& opt) {
  if (opt.k) return {*opt.k};
  return {1, 2, 3};
}

inline int positivity_degree(int k, const VerifyOptions& opt) {
  if (opt.max_degree) return *opt.max_degree;
  return k == 3 ? 7 : 8;
}

}  // namespace detail

/// Criterion 2: branching coefficients into the (k+1)-Schur basis are
/// nonnegative integers.
inline void criterion_branch_positivity(CriterionResult& r, const VerifyOptions& opt) {
  for (int k : detail::positivity_ks(opt))
    for (int d = 0; d <= detail::positivity_degree(k, opt); ++d)
      for (const auto& lam : partitions_of(d, k)) {
        CheckItem item;
        item.input = "k=" + std::to_string(k) + " lambda=" + lam.to_string();
        item.pass = detail::nonneg_integer_terms(branch(k, lam), item.detail);
        r.items.push_back(std::move(item));
      }
}

/// Criterion 3: k-Schur functions are Schur positive.
inline void criterion_kschur_positivity(CriterionResult& r, const VerifyOptions& opt) {
  for (int k : detail::positivity_ks(opt))
    for (int d = 0; d <= detail::positivity_degree(k, opt); ++d)
      for (const auto& lam : partitions_of(d, k)) {
        CheckItem item;
        item.input = "k=" + std::to_string(k) + " lambda=" + lam.to_string();
        item.pass = detail::nonneg_integer_terms(kschur_in_schur(k, lam).terms, item.detail);
        r.items.push_back(std::move(item));
      }
}

/// Criterion 4: Schur P-functions are integral and Schur positive.
inline void criterion_p_positivity(CriterionResult& r, const VerifyOptions& opt) {
  auto report = verify_p_positivity(opt.max_degree.value_or(8));
  for (const auto& entry : report.items) {
    CheckItem item;
    item.input = "lambda=" + entry.lambda.to_string();
    item.pass = entry.pass();
    item.detail = detail::term_string(entry.schur_terms);
    r.items.push_back(std::move(item));
  }
}

/// Criterion 5: the halved rows have integer monomial coefficients.
inline void criterion_ep_integrality(CriterionResult& r, const VerifyOptions& opt) {
  for (int i = 1; i <= opt.max_degree.value_or(10); ++i) {
    CheckItem item;
    item.input = "P_" + std::to_string(i);
    item.pass = p_row(i).to_basis(Basis::M).integral;
    if (!item.pass) item.detail = "fractional monomial coefficient";
    r.items.push_back(std::move(item));
  }
}

/// Criterion 6: the power-sum coefficient of P_i is exactly 1/i for odd i,
/// with all-odd power-sum support.
inline void criterion_power_sum_coefficient(CriterionResult& r, const VerifyOptions& opt) {
  for (int i = 1; i <= opt.max_degree.value_or(9); i += 2) {
    CheckItem item;
    item.input = "P_" + std::to_string(i);
    Rational coeff = p_coefficient_check(i);
    bool odd_support = true;
    for (const auto& [lam, c] : p_row(i).to_basis(Basis::P).terms)
      for (int part : lam.parts())
        if (part % 2 == 0) odd_support = false;
    item.pass = coeff == Rational(1, i) && odd_support;
    if (coeff != Rational(1, i)) item.detail = "coefficient is not 1/i";
    if (!odd_support) item.detail += " even part in the power-sum support";
    r.items.push_back(std::move(item));
  }
}

/// Criterion 7: |coefficient of p_j in e_j| = 1/j, and perturbing e_j by
/// 2 p_j / j either way breaks monomial integrality.
inline void criterion_fractionality(CriterionResult& r, const VerifyOptions&) {
  for (int j = 3; j <= 8; ++j) {
    CheckItem item;
    item.input = "e_" + std::to_string(j);
    Rational coeff = SymFunc::e(Partition{j}).to_basis(Basis::P).terms.at(Partition{j});
    bool magnitude = abs(coeff) == Rational(1, j);
    SymFunc pj = SymFunc::p(Partition{j});
    bool plus = !(SymFunc::e(Partition{j}) + Rational(2, j) * pj).to_basis(Basis::M).integral;
    bool minus = !(SymFunc::e(Partition{j}) - Rational(2, j) * pj).to_basis(Basis::M).integral;
    item.pass = magnitude && plus && minus;
    if (!magnitude) item.detail = "|coefficient| differs from 1/j";
    if (!plus || !minus) item.detail += " perturbed element stayed integral";
    r.items.push_back(std::move(item));
  }
}

/// Criterion 8: theta agrees with the row construction on h_i, kills even
/// power sums, doubles odd ones, and is a Hopf morphism on sampled pairs.
inline void criterion_theta(CriterionResult& r, const VerifyOptions&) {
  for (int i = 0; i <= 10; ++i) {
    CheckItem item;
    item.input = "theta(h_" + std::to_string(i) + ")";
    Partition row = i > 0 ? Partition{i} : Partition{};
    item.pass = theta(SymFunc::h(row)) == q_row(i);
    r.items.push_back(std::move(item));
  }
  for (int i = 1; i <= 10; ++i) {
    CheckItem item;
    item.input = "theta(p_" + std::to_string(i) + ")";
    SymFunc image = theta(SymFunc::p(Partition{i}));
    item.pass = i % 2 == 0 ? image.is_zero() : image == Rational(2) * SymFunc::p(Partition{i});
    r.items.push_back(std::move(item));
  }
  auto th = [](const SymFunc& g) { return theta(g); };
  for (int i = 1; i <= 7; ++i)
    for (int j = i; i + j <= 8; ++j) {
      CheckItem item;
      item.input = "theta multiplicative on h_" + std::to_string(i) + " h_" + std::to_string(j);
      SymFunc hi = SymFunc::h(Partition{i}), hj = SymFunc::h(Partition{j});
      item.pass = theta(hi * hj) == theta(hi) * theta(hj);
      r.items.push_back(std::move(item));
    }
  for (int i = 1; i <= 8; ++i) {
    CheckItem item;
    item.input = "theta comultiplicative on h_" + std::to_string(i);
    SymFunc hi = SymFunc::h(Partition{i});
    item.pass = coproduct(theta(hi)) == coproduct(hi).map_legs(th, th);
    r.items.push_back(std::move(item));
  }
}

/// Criterion 9: the primitive space in each degree has rank one and contains
/// the power sum.
inline void criterion_primitivity(CriterionResult& r, const VerifyOptions& opt) {
  for (int d = 1; d <= opt.max_degree.value_or(8); ++d) {
    CheckItem item;
    item.input = "degree " + std::to_string(d);
    auto basis = primitive_basis(d);
    bool rank_one = basis.size() == 1;
    bool contains_p = false;
    if (rank_one && !basis[0].h_terms().empty()) {
      SymFunc pd = SymFunc::p(Partition{d});
      const auto& [lead, lead_c] = *basis[0].h_terms().begin();
      auto it = pd.h_terms().find(lead);
      if (it != pd.h_terms().end()) contains_p = (it->second / lead_c) * basis[0] == pd;
    }
    item.pass = rank_one && contains_p;
    if (!rank_one) item.detail = "rank " + std::to_string(basis.size());
    else if (!contains_p) item.detail = "span misses the power sum";
    r.items.push_back(std::move(item));
  }
}

/// Criterion 10: graded-rank equalities along the two chains of polynomial
/// subalgebras.
inline void criterion_ranks(CriterionResult& r, const VerifyOptions&) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> gens, gens_next;
    for (int i = 1; i <= n - 1; ++i) gens.push_back(i);
    for (int i = 1; i <= n; ++i) gens_next.push_back(i);
    for (int d = 0; d <= n - 1; ++d) {
      CheckItem item;
      item.input = "su chain n=" + std::to_string(n) + " d=" + std::to_string(d);
      item.pass = subalgebra_rank(gens, d) == subalgebra_rank(gens_next, d);
      r.items.push_back(std::move(item));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> gens, gens_next;
    for (int i = 1; i <= 2 * n - 1; i += 2) gens.push_back(i);
    for (int i = 1; i <= 2 * n + 1; i += 2) gens_next.push_back(i);
    for (int d = 0; d <= 2 * n; ++d) {
      CheckItem item;
      item.input = "sp chain n=" + std::to_string(n) + " d=" + std::to_string(d);
      item.pass = subalgebra_rank(gens, d) == subalgebra_rank(gens_next, d);
      r.items.push_back(std::move(item));
    }
  }
}

/// Criterion 11: omega sends each k-Schur basis element to a single k-Schur
/// basis element with coefficient one.
inline void criterion_omega_stability(CriterionResult& r, const VerifyOptions& opt) {
  for (int k : detail::positivity_ks(opt))
    for (int d = 0; d <= opt.max_degree.value_or(7); ++d)
      for (const auto& lam : partitions_of(d, k)) {
        CheckItem item;
        item.input = "k=" + std::to_string(k) + " lambda=" + lam.to_string();
        try {
          auto [index, coeff] = omega_on_kschur(k, lam);
          item.pass = coeff == 1;
          item.detail = "image index " + index.to_string();
        } catch (const std::exception& e) {
          item.pass = false;
          item.detail = e.what();
        }
        r.items.push_back(std::move(item));
      }
}

/// Criterion 12: the canonical morphism is the identity on truncated Sym,
/// lands in the symmetric subspace with preserved characters on the whole
/// cocommutative gallery, and matches the subalgebra inclusion on the
/// bounded presentation.
inline void criterion_abs_terminality(CriterionResult& r, const VerifyOptions&) {
  auto sym6 = make_sym_presentation(6);
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : partitions_of(d)) {
      CheckItem item;
      std::string label = d == 0 ? "1" : "h" + lam.to_string();
      item.input = "identity on " + label;
      auto image = qsym_to_sym(canonical_morphism(sym6, element_of(sym6, label)));
      item.pass = image.ok() && image.m_terms == SymFunc::h(lam).to_basis(Basis::M).terms;
      r.items.push_back(std::move(item));
    }

  std::vector<std::pair<std::string, HopfPresentation>> gallery;
  gallery.emplace_back("sym(5)", make_sym_presentation(5));
  gallery.emplace_back("binomial(6)", make_binomial_presentation(6));
  for (int k = 1; k <= 3; ++k)
    gallery.emplace_back("bounded-sym(k=" + std::to_string(k) + ",5)",
                         make_sym_presentation(5, k));
  for (const auto& [name, hp] : gallery) {
    CheckItem item;
    item.input = "gallery " + name;
    auto report = validate(hp);
    bool symmetric = true;
    for (int d = 0; d <= hp.max_degree && symmetric; ++d)
      for (int i = 0; i < hp.dim(d); ++i)
        if (!qsym_to_sym(canonical_morphism(hp, basis_element(hp, d, i))).ok()) {
          symmetric = false;
          break;
        }
    std::vector<std::string> labels;
    for (int d = 0; d <= hp.max_degree; ++d)
      for (int i = 0; i < hp.dim(d); ++i) labels.push_back(hp.basis[d][i]);
    bool characters = check_character_preservation(hp, labels).preserved;
    item.pass = report.ok() && report.cocommutative && symmetric && characters;
    if (!report.ok()) item.detail = "axioms fail";
    else if (!report.cocommutative) item.detail = "not cocommutative";
    else if (!symmetric) item.detail = "image is not symmetric";
    else if (!characters) item.detail = "character not preserved";
    r.items.push_back(std::move(item));
  }

  const int k = 2, dmax = 6;
  auto bounded = make_sym_presentation(dmax, k);
  for (int d = 0; d <= dmax; ++d) {
    auto index = partitions_of(d, k);
    for (const auto& lam : index) {
      CheckItem item;
      item.input = "inclusion of s^{(2)}_" + lam.to_string();
      SymFunc f = kschur_in_h(k, lam);
      HopfElement el{d, std::vector<Rational>(bounded.dim(d), Rational(0))};
      for (const auto& [mu, c] : f.h_terms()) el.coeffs[partition_index(index, mu)] = c;
      auto image = qsym_to_sym(canonical_morphism(bounded, el));
      item.pass = image.ok() && image.m_terms == f.to_basis(Basis::M).terms;
      r.items.push_back(std::move(item));
    }
  }
}

/// Criterion 13: transition matrices agree with the definition-based
/// variable expansion, and conversion cycles through h are exact identities.
inline void criterion_oracle_coherence(CriterionResult& r, const VerifyOptions& opt) {
  int dmax = opt.max_degree.value_or(6);
  int nvars = std::max(7, dmax + 1);
  for (Basis b : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S})
    for (int d = 0; d <= dmax; ++d)
      for (const auto& lam : partitions_of(d)) {
        CheckItem item;
        item.input = std::string(1, basis_char(b)) + "_" + lam.to_string();
        SymFunc f = SymFunc::from_basis(b, {{lam, Rational(1)}});
        VarPoly via = monomial_eval_oracle(Basis::M, f.to_basis(Basis::M).terms, nvars);
        item.pass = via == expand_basis_element(b, lam, nvars);
        r.items.push_back(std::move(item));
      }
  auto& cache = TransitionCache::instance();
  for (Basis b : {Basis::S, Basis::P, Basis::M}) {
    for (int d = 0; d <= 9; ++d) {
      CheckItem item;
      item.input = std::string("cycle h->") + basis_char(b) + "->h degree " + std::to_string(d);
      auto prod = detail::mat_mul(cache.to_h(b, d), cache.from_h(b, d));
      item.pass = prod == detail::identity(static_cast<int>(partitions_of(d).size()));
      r.items.push_back(std::move(item));
    }
  }
}

struct CriterionSpec {
  int id;
  const char* name;
  double budget_seconds;
  void (*run)(CriterionResult&, const VerifyOptions&);
};

inline const std::vector<CriterionSpec>& criterion_table() {
  static const std::vector<CriterionSpec> table = {
      {1, "degeneration", 30, criterion_degeneration},
      {2, "branch-positivity", 120, criterion_branch_positivity},
      {3, "kschur-schur-positivity", 120, criterion_kschur_positivity},
      {4, "schur-p-positivity", 60, criterion_p_positivity},
      {5, "ep-integrality", 10, criterion_ep_integrality},
      {6, "power-sum-coefficient", 10, criterion_power_sum_coefficient},
      {7, "fractionality", 10, criterion_fractionality},
      {8, "theta-consistency", 30, criterion_theta},
      {9, "primitivity", 30, criterion_primitivity},
      {10, "graded-ranks", 5, criterion_ranks},
      {11, "omega-stability", 60, criterion_omega_stability},
      {12, "abs-terminality", 60, criterion_abs_terminality},
      {13, "oracle-coherence", 60, criterion_oracle_coherence},
  };
  return table;
}

inline CriterionResult run_criterion(int id, const VerifyOptions& opt = {}) {
  for (const auto& spec : criterion_table()) {
    if (spec.id != id) continue;
    CriterionResult result;
    result.id = spec.id;
    result.name = spec.name;
    result.budget_seconds = spec.budget_seconds;
    auto start = std::chrono::steady_clock::now();
    spec.run(result, opt);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.within_budget = result.seconds < result.budget_seconds;
    result.pass = result.failures() == 0 && result.within_budget;
    return result;
  }
  throw std::invalid_argument("unknown criterion id " + std::to_string(id));
}

/// Suite names exposed by the command line. The grouped names cover every
/// criterion; c1..c13 select single criteria.
inline std::optional<std::vector<int>> suite_criteria(const std::string& suite) {
  if (suite == "kschur-pos") return std::vector<int>{1, 3, 11};
  if (suite == "branch-pos") return std::vector<int>{2};
  if (suite == "p-pos") return std::vector<int>{4};
  if (suite == "coeff") return std::vector<int>{5, 6, 7};
  if (suite == "theta") return std::vector<int>{8};
  if (suite == "ranks") return std::vector<int>{9, 10};
  if (suite == "hopf") return std::vector<int>{12};
  if (suite == "oracle") return std::vector<int>{13};
  if (suite == "all") return std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  if (suite.size() >= 2 && suite[0] == 'c') {
    try {
      int id = std::stoi(suite.substr(1));
      if (id >= 1 && id <= 13) return std::vector<int>{id};
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace schurpos
