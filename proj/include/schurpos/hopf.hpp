#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schurpos/partition.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

/// Finitely supported element of QSym in the monomial quasisymmetric basis.
/// Only a container plus the symmetry test: QSym is the codomain of the
/// canonical morphism, not a full Hopf algebra here.
class QSymFunc {
 public:
  using Terms = std::map<Composition, Rational>;

  QSymFunc() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Composition& alpha, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  QSymFunc& operator+=(const QSymFunc& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  friend QSymFunc operator+(QSymFunc a, const QSymFunc& b) { return a += b; }
  friend bool operator==(const QSymFunc&, const QSymFunc&) = default;

 private:
  Terms terms_;
};

struct QsymToSymResult {
  std::optional<std::pair<Composition, Composition>> witness;  // differing rearrangements
  SymFunc::Terms m_terms;
  bool ok() const { return !witness.has_value(); }
};

/// Succeeds iff the coefficients are constant on rearrangement classes of
/// compositions; the monomial-basis coefficient of m_lambda is then read off
/// any composition sorting to lambda.
inline QsymToSymResult qsym_to_sym(const QSymFunc& f) {
  QsymToSymResult out;
  std::set<Partition> classes;
  for (const auto& [alpha, c] : f.terms()) classes.insert(alpha.sorted());
  for (const Partition& lam : classes) {
    // every distinct rearrangement of lam must carry the same coefficient
    std::vector<int> v(lam.parts().begin(), lam.parts().end());
    std::sort(v.begin(), v.end());
    Composition first;
    bool have_first = false;
    Rational value = 0;
    do {
      Composition alpha{std::vector<int>(v.begin(), v.end())};
      Rational c = f.coefficient(alpha);
      if (!have_first) {
        first = alpha;
        value = c;
        have_first = true;
      } else if (c != value) {
        out.witness = {first, alpha};
        return out;
      }
    } while (std::next_permutation(v.begin(), v.end()));
    if (value != 0) out.m_terms.emplace(lam, value);
  }
  return out;
}

/// A graded connected Hopf algebra presented by structure constants plus a
/// character. Product entries say basis[da][i] * basis[db][j] contains
/// basis[da+db][k] with the given coefficient; coproduct entries say
/// Delta(basis[dc][kk]) contains basis[da][i] (x) basis[db][j].
struct HopfPresentation {
  int max_degree = 0;
  std::vector<std::vector<std::string>> basis;                              // [degree][i]
  std::map<std::array<int, 4>, std::map<int, Rational>> product;            // (da,i,db,j) -> {k: c}
  std::map<std::pair<int, int>, std::map<std::array<int, 4>, Rational>> coproduct;  // (dc,kk)
  std::map<std::string, Rational> character;

  int dim(int d) const {
    return d >= 0 && d <= max_degree ? static_cast<int>(basis[d].size()) : 0;
  }

  std::pair<int, int> find_label(const std::string& label) const {
    for (int d = 0; d <= max_degree; ++d)
      for (int i = 0; i < dim(d); ++i)
        if (basis[d][i] == label) return {d, i};
    throw std::invalid_argument("unknown basis label: " + label);
  }

  /// Structural well-formedness; throws on malformed constants.
  void check_shape() const {
    if (static_cast<int>(basis.size()) != max_degree + 1)
      throw std::invalid_argument("basis must list every degree up to max_degree");
    if (dim(0) != 1) throw std::invalid_argument("degree 0 must be one-dimensional");
    std::set<std::string> labels;
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& l : basis[d])
        if (!labels.insert(l).second) throw std::invalid_argument("duplicate basis label: " + l);
    for (const auto& [key, row] : product) {
      auto [da, i, db, j] = key;
      if (da < 0 || db < 0 || da + db > max_degree)
        throw std::invalid_argument("product constant outside the graded range");
      if (i >= dim(da) || j >= dim(db)) throw std::invalid_argument("product index out of range");
      for (const auto& [k, c] : row)
        if (k < 0 || k >= dim(da + db))
          throw std::invalid_argument("product target index out of range (degree mismatch)");
    }
    for (const auto& [key, row] : coproduct) {
      auto [dc, kk] = key;
      if (dc < 0 || dc > max_degree || kk >= dim(dc))
        throw std::invalid_argument("coproduct source out of range");
      for (const auto& [tk, c] : row) {
        auto [da, i, db, j] = tk;
        if (da < 0 || db < 0 || da + db != dc)
          throw std::invalid_argument("coproduct constant has a degree mismatch");
        if (i >= dim(da) || j >= dim(db))
          throw std::invalid_argument("coproduct index out of range");
      }
    }
    for (const auto& [label, c] : character) find_label(label);
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& l : basis[d])
        if (!character.count(l))
          throw std::invalid_argument("character value missing for label: " + l);
  }
};

/// Homogeneous element as a dense coefficient vector over basis[degree].
struct HopfElement {
  int degree = 0;
  std::vector<Rational> coeffs;
};

inline HopfElement basis_element(const HopfPresentation& hp, int degree, int i) {
  HopfElement el{degree, std::vector<Rational>(hp.dim(degree), Rational(0))};
  el.coeffs.at(i) = 1;
  return el;
}

inline HopfElement element_of(const HopfPresentation& hp, const std::string& label) {
  auto [d, i] = hp.find_label(label);
  return basis_element(hp, d, i);
}

inline HopfElement hopf_multiply(const HopfPresentation& hp, const HopfElement& a,
                                 const HopfElement& b) {
  int dc = a.degree + b.degree;
  if (dc > hp.max_degree)
    throw std::invalid_argument("product degree exceeds the presentation's range");
  HopfElement out{dc, std::vector<Rational>(hp.dim(dc), Rational(0))};
  for (int i = 0; i < hp.dim(a.degree); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < hp.dim(b.degree); ++j) {
      if (b.coeffs[j] == 0) continue;
      auto it = hp.product.find({a.degree, i, b.degree, j});
      if (it == hp.product.end()) continue;
      for (const auto& [k, c] : it->second) out.coeffs[k] += a.coeffs[i] * b.coeffs[j] * c;
    }
  }
  return out;
}

/// Coproduct of an element, keyed by (left degree, left index, right index).
inline std::map<std::array<int, 3>, Rational> hopf_coproduct(const HopfPresentation& hp,
                                                             const HopfElement& el) {
  std::map<std::array<int, 3>, Rational> out;
  for (int kk = 0; kk < hp.dim(el.degree); ++kk) {
    if (el.coeffs[kk] == 0) continue;
    auto it = hp.coproduct.find({el.degree, kk});
    if (it == hp.coproduct.end()) continue;
    for (const auto& [tk, c] : it->second) {
      auto [da, i, db, j] = tk;
      auto& slot = out[{da, i, j}];
      slot += el.coeffs[kk] * c;
      if (slot == 0) out.erase({da, i, j});
    }
  }
  return out;
}

inline Rational hopf_character(const HopfPresentation& hp, const HopfElement& el) {
  Rational out = 0;
  for (int i = 0; i < hp.dim(el.degree); ++i)
    if (el.coeffs[i] != 0) out += el.coeffs[i] * hp.character.at(hp.basis[el.degree][i]);
  return out;
}

struct ValidationReport {
  bool associative = true;
  bool coassociative = true;
  bool counital = true;
  bool bialgebra_compatible = true;
  bool cocommutative = true;
  bool unital = true;
  bool character_multiplicative = true;
  std::vector<std::string> failures;

  /// Axioms of a combinatorial Hopf algebra; cocommutativity is reported
  /// separately since it selects the subcategory, not the axioms.
  bool ok() const {
    return associative && coassociative && counital && bialgebra_compatible && unital &&
           character_multiplicative;
  }
};

namespace detail {

// Dense tensor cube T[i][j][k] of Delta applied twice, for coassociativity.
using Tensor3 = std::map<std::array<int, 5>, Rational>;  // (da,i,db,j,k) with dc implied

}  // namespace detail

/// Degreewise axiom check by exact structure-constant contraction.
inline ValidationReport validate(const HopfPresentation& hp) {
  hp.check_shape();
  ValidationReport report;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    report.failures.push_back(msg);
  };

  // unit and counit behaviour, degree by degree
  HopfElement one = basis_element(hp, 0, 0);
  for (int d = 0; d <= hp.max_degree; ++d)
    for (int i = 0; i < hp.dim(d); ++i) {
      HopfElement x = basis_element(hp, d, i);
      if (hopf_multiply(hp, one, x).coeffs != x.coeffs ||
          hopf_multiply(hp, x, one).coeffs != x.coeffs)
        fail(report.unital, "unit fails on " + hp.basis[d][i]);
      // (counit ⊗ id) Delta x = x = (id ⊗ counit) Delta x
      auto delta = hopf_coproduct(hp, x);
      std::vector<Rational> left(hp.dim(d), Rational(0)), right(hp.dim(d), Rational(0));
      for (const auto& [key, c] : delta) {
        auto [da, li, rj] = key;
        if (da == 0) left[rj] += c;
        if (da == d) right[li] += c;
      }
      if (left != x.coeffs || right != x.coeffs)
        fail(report.counital, "counit fails on " + hp.basis[d][i]);
    }

  // associativity on basis triples
  for (int da = 0; da <= hp.max_degree; ++da)
    for (int db = 0; da + db <= hp.max_degree; ++db)
      for (int dc = 0; da + db + dc <= hp.max_degree; ++dc)
        for (int i = 0; i < hp.dim(da); ++i)
          for (int j = 0; j < hp.dim(db); ++j)
            for (int k = 0; k < hp.dim(dc); ++k) {
              HopfElement a = basis_element(hp, da, i), b = basis_element(hp, db, j),
                          c = basis_element(hp, dc, k);
              auto lhs = hopf_multiply(hp, hopf_multiply(hp, a, b), c);
              auto rhs = hopf_multiply(hp, a, hopf_multiply(hp, b, c));
              if (lhs.coeffs != rhs.coeffs) {
                fail(report.associative, "associativity fails at (" + hp.basis[da][i] + ", " +
                                             hp.basis[db][j] + ", " + hp.basis[dc][k] + ")");
                goto assoc_done;
              }
            }
assoc_done:

  // coassociativity: (Delta ⊗ id) Delta = (id ⊗ Delta) Delta on basis elements
  for (int d = 0; d <= hp.max_degree; ++d)
    for (int kk = 0; kk < hp.dim(d); ++kk) {
      detail::Tensor3 lhs, rhs;
      for (const auto& [key, c] : hopf_coproduct(hp, basis_element(hp, d, kk))) {
        auto [da, i, j] = key;
        HopfElement left = basis_element(hp, da, i);
        for (const auto& [key2, c2] : hopf_coproduct(hp, left)) {
          auto [daa, ii, jj] = key2;
          auto& slot = lhs[{daa, ii, da - daa, jj, j}];
          slot += c * c2;
          if (slot == 0) lhs.erase({daa, ii, da - daa, jj, j});
        }
        HopfElement right = basis_element(hp, d - da, j);
        for (const auto& [key2, c2] : hopf_coproduct(hp, right)) {
          auto [dbb, ii, jj] = key2;
          auto& slot = rhs[{da, i, dbb, ii, jj}];
          slot += c * c2;
          if (slot == 0) rhs.erase({da, i, dbb, ii, jj});
        }
      }
      if (lhs != rhs) {
        fail(report.coassociative, "coassociativity fails on " + hp.basis[d][kk]);
        break;
      }
    }

  // bialgebra compatibility: Delta(ab) = Delta(a) Delta(b)
  for (int da = 0; da <= hp.max_degree && report.bialgebra_compatible; ++da)
    for (int db = 0; da + db <= hp.max_degree && report.bialgebra_compatible; ++db)
      for (int i = 0; i < hp.dim(da) && report.bialgebra_compatible; ++i)
        for (int j = 0; j < hp.dim(db); ++j) {
          HopfElement a = basis_element(hp, da, i), b = basis_element(hp, db, j);
          auto lhs = hopf_coproduct(hp, hopf_multiply(hp, a, b));
          // Delta(a) Delta(b) with componentwise products
          std::map<std::array<int, 3>, Rational> rhs;
          for (const auto& [ka, ca] : hopf_coproduct(hp, a))
            for (const auto& [kb, cb] : hopf_coproduct(hp, b)) {
              auto [daa, ia, ja] = ka;
              auto [dbb, ib, jb] = kb;
              HopfElement lprod = hopf_multiply(hp, basis_element(hp, daa, ia),
                                                basis_element(hp, dbb, ib));
              HopfElement rprod = hopf_multiply(hp, basis_element(hp, da - daa, ja),
                                                basis_element(hp, db - dbb, jb));
              for (int li = 0; li < hp.dim(lprod.degree); ++li) {
                if (lprod.coeffs[li] == 0) continue;
                for (int rj = 0; rj < hp.dim(rprod.degree); ++rj) {
                  if (rprod.coeffs[rj] == 0) continue;
                  auto& slot = rhs[{lprod.degree, li, rj}];
                  slot += Rational(ca * cb) * lprod.coeffs[li] * rprod.coeffs[rj];
                  if (slot == 0) rhs.erase({lprod.degree, li, rj});
                }
              }
            }
          if (lhs != rhs) {
            fail(report.bialgebra_compatible,
                 "bialgebra law fails at (" + hp.basis[da][i] + ", " + hp.basis[db][j] + ")");
            break;
          }
        }

  // cocommutativity
  for (int d = 0; d <= hp.max_degree && report.cocommutative; ++d)
    for (int kk = 0; kk < hp.dim(d); ++kk) {
      auto delta = hopf_coproduct(hp, basis_element(hp, d, kk));
      std::map<std::array<int, 3>, Rational> flipped;
      for (const auto& [key, c] : delta) {
        auto [da, i, j] = key;
        flipped[{d - da, j, i}] = c;
      }
      if (delta != flipped) {
        fail(report.cocommutative, "coproduct is not cocommutative on " + hp.basis[d][kk]);
        break;
      }
    }

  // character: chi(1) = 1 and chi(ab) = chi(a) chi(b)
  if (hopf_character(hp, one) != 1)
    fail(report.character_multiplicative, "character does not send the unit to 1");
  for (int da = 0; da <= hp.max_degree && report.character_multiplicative; ++da)
    for (int db = 0; da + db <= hp.max_degree && report.character_multiplicative; ++db)
      for (int i = 0; i < hp.dim(da) && report.character_multiplicative; ++i)
        for (int j = 0; j < hp.dim(db); ++j) {
          HopfElement a = basis_element(hp, da, i), b = basis_element(hp, db, j);
          if (hopf_character(hp, hopf_multiply(hp, a, b)) !=
              hopf_character(hp, a) * hopf_character(hp, b)) {
            fail(report.character_multiplicative,
                 "character is not multiplicative at (" + hp.basis[da][i] + ", " +
                     hp.basis[db][j] + ")");
            break;
          }
        }

  return report;
}

/// Character component: apply the left-nested iterated coproduct, project to
/// the multidegree alpha, and evaluate the character on every tensor leg.
/// Peels the last entry of alpha, refining the left tensor leg each time.
inline Rational zeta_alpha(const HopfPresentation& hp, const HopfElement& el,
                           const Composition& alpha) {
  if (alpha.size() != el.degree)
    throw std::invalid_argument("composition size must match the element degree");
  if (alpha.empty()) return el.degree == 0 ? el.coeffs.at(0) : Rational(0);
  if (alpha.length() == 1) return hopf_character(hp, el);
  int last = alpha.parts().back();
  Composition init{std::vector<int>(alpha.parts().begin(), alpha.parts().end() - 1)};
  HopfElement left{el.degree - last, std::vector<Rational>(hp.dim(el.degree - last), Rational(0))};
  for (const auto& [key, c] : hopf_coproduct(hp, el)) {
    auto [da, i, j] = key;
    if (da != el.degree - last) continue;
    left.coeffs[i] += c * hp.character.at(hp.basis[last][j]);
  }
  return zeta_alpha(hp, left, init);
}

/// The unique character-preserving Hopf morphism into QSym, evaluated at a
/// homogeneous element: Psi(h) = sum over compositions of deg h of
/// zeta_alpha(h) M_alpha.
inline QSymFunc canonical_morphism(const HopfPresentation& hp, const HopfElement& el) {
  QSymFunc out;
  for (const auto& alpha : compositions_of(el.degree)) out.add(alpha, zeta_alpha(hp, el, alpha));
  return out;
}

/// The canonical character of (Q)Sym: M_empty and one-part M_(n) map to 1,
/// longer compositions to 0.
inline Rational qsym_target_character(const QSymFunc& f) {
  Rational out = 0;
  for (const auto& [alpha, c] : f.terms())
    if (alpha.length() <= 1) out += c;
  return out;
}

struct CharacterPreservationReport {
  bool preserved = true;
  std::vector<std::string> failures;
};

/// Verifies chi_target(Psi(x)) = chi(x) on the samples, and on sample pairs
/// that chi(xy) matches the product of the mapped characters, which is what
/// fails when the character is not multiplicative.
inline CharacterPreservationReport check_character_preservation(
    const HopfPresentation& hp, const std::vector<std::string>& labels) {
  CharacterPreservationReport report;
  std::vector<std::pair<std::string, HopfElement>> samples;
  for (const auto& l : labels) samples.emplace_back(l, element_of(hp, l));
  for (const auto& [label, el] : samples) {
    if (qsym_target_character(canonical_morphism(hp, el)) != hopf_character(hp, el)) {
      report.preserved = false;
      report.failures.push_back("character not preserved at " + label);
    }
  }
  for (const auto& [la, a] : samples)
    for (const auto& [lb, b] : samples) {
      if (a.degree + b.degree > hp.max_degree) continue;
      Rational lhs = hopf_character(hp, hopf_multiply(hp, a, b));
      Rational rhs = qsym_target_character(canonical_morphism(hp, a)) *
                     qsym_target_character(canonical_morphism(hp, b));
      if (lhs != rhs) {
        report.preserved = false;
        report.failures.push_back("character not preserved on the product " + la + " * " + lb);
      }
    }
  return report;
}

// ---------------------------------------------------------------------------
// Example gallery

/// Truncation of Sym in the h basis, optionally restricted to partitions
/// with parts <= bound (the bounded subalgebras are coproduct-closed).
inline HopfPresentation make_sym_presentation(int max_degree,
                                              std::optional<int> bound = std::nullopt) {
  HopfPresentation hp;
  hp.max_degree = max_degree;
  hp.basis.resize(max_degree + 1);
  std::vector<std::vector<Partition>> index(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    index[d] = partitions_of(d, bound);
    for (const auto& lam : index[d]) {
      hp.basis[d].push_back(d == 0 ? "1" : "h" + lam.to_string());
      hp.character.emplace(hp.basis[d].back(), 1);
    }
  }
  for (int da = 0; da <= max_degree; ++da)
    for (int db = 0; da + db <= max_degree; ++db)
      for (std::size_t i = 0; i < index[da].size(); ++i)
        for (std::size_t j = 0; j < index[db].size(); ++j) {
          Partition prod = detail::concat_parts(index[da][i], index[db][j]);
          hp.product[{da, static_cast<int>(i), db, static_cast<int>(j)}] = {
              {partition_index(index[da + db], prod), Rational(1)}};
        }
  for (int d = 0; d <= max_degree; ++d)
    for (std::size_t kk = 0; kk < index[d].size(); ++kk) {
      auto& row = hp.coproduct[{d, static_cast<int>(kk)}];
      TensorSymFunc delta = coproduct(SymFunc::h(index[d][kk]));
      for (const auto& [key, c] : delta.terms()) {
        int da = key.first.size();
        row[{da, partition_index(index[da], key.first), d - da,
             partition_index(index[d - da], key.second)}] = c;
      }
    }
  return hp;
}

/// Polynomial algebra on one primitive-degree-1 generator x with the
/// binomial coproduct and chi(x^n) = 1.
inline HopfPresentation make_binomial_presentation(int max_degree) {
  HopfPresentation hp;
  hp.max_degree = max_degree;
  hp.basis.resize(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    hp.basis[d].push_back(d == 0 ? "1" : d == 1 ? "x" : "x^" + std::to_string(d));
    hp.character.emplace(hp.basis[d].back(), 1);
  }
  for (int da = 0; da <= max_degree; ++da)
    for (int db = 0; da + db <= max_degree; ++db) hp.product[{da, 0, db, 0}] = {{0, Rational(1)}};
  for (int d = 0; d <= max_degree; ++d) {
    auto& row = hp.coproduct[{d, 0}];
    Integer binom = 1;
    for (int a = 0; a <= d; ++a) {
      row[{a, 0, d - a, 0}] = Rational(binom);
      binom = binom * (d - a) / (a + 1);
    }
  }
  return hp;
}

}  // namespace schurpos
