#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "schurpos/detail/linalg.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/rational.hpp"

namespace schurpos {

enum class Basis { M, E, H, P, S };

inline char basis_char(Basis b) {
  switch (b) {
    case Basis::M: return 'm';
    case Basis::E: return 'e';
    case Basis::H: return 'h';
    case Basis::P: return 'p';
    case Basis::S: return 's';
  }
  throw std::invalid_argument("unknown basis");
}

inline Basis basis_from_char(char c) {
  switch (c) {
    case 'm': return Basis::M;
    case 'e': return Basis::E;
    case 'h': return Basis::H;
    case 'p': return Basis::P;
    case 's': return Basis::S;
  }
  throw std::invalid_argument(std::string("unknown basis letter: ") + c);
}

namespace detail {

// Term maps over a multiplicative basis: the key is the multiset of
// generator subscripts, so multiplication concatenates parts.
using Terms = std::map<Partition, Rational>;

inline Partition concat_parts(const Partition& a, const Partition& b) {
  std::vector<int> v;
  v.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(v), std::greater<int>());
  return Partition(std::move(v));
}

inline void add_term(Terms& t, const Partition& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

inline Terms mul_terms(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) add_term(out, concat_parts(la, lb), ca * cb);
  return out;
}

/// e_n in the h basis, from sum_{i=0}^{n} (-1)^i e_i h_{n-i} = 0.
inline const Terms& e_in_h(int n) {
  static std::mutex mu;
  static std::deque<Terms> memo{{{Partition{}, Rational(1)}}};
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    Terms t;
    for (int i = 0; i < m; ++i) {
      Rational sign = ((m - 1 - i) % 2 == 0) ? 1 : -1;
      for (const auto& [key, c] : memo[i]) add_term(t, concat_parts(key, Partition{m - i}), sign * c);
    }
    memo.push_back(std::move(t));
  }
  return memo[n];
}

/// h_n in the e basis. The defining relation is symmetric in h and e, so the
/// coefficients coincide with e_in_h with keys reread as e subscripts.
inline const Terms& h_in_e(int n) { return e_in_h(n); }

/// p_n in the h basis, from Newton's identity n h_n = sum_{i=1}^n p_i h_{n-i}.
inline const Terms& p_in_h(int n) {
  static std::mutex mu;
  static std::deque<Terms> memo{{{Partition{}, Rational(1)}}};
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    Terms t;
    add_term(t, Partition{m}, Rational(m));
    for (int i = 1; i < m; ++i)
      for (const auto& [key, c] : memo[i]) add_term(t, concat_parts(key, Partition{m - i}), -c);
    memo.push_back(std::move(t));
  }
  return memo[n];
}

/// h_n in the p basis, the inverse Newton recurrence.
inline const Terms& h_in_p(int n) {
  static std::mutex mu;
  static std::deque<Terms> memo{{{Partition{}, Rational(1)}}};
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    Terms t;
    for (int i = 1; i <= m; ++i)
      for (const auto& [key, c] : memo[m - i])
        add_term(t, concat_parts(key, Partition{i}), c / m);
    memo.push_back(std::move(t));
  }
  return memo[n];
}

/// s_lambda in the h basis: the Jacobi-Trudi determinant det(h_{l_i - i + j}),
/// expanded with a used-column bitmask, sign tracked by inversion count.
inline Terms s_in_h(const Partition& lam) {
  int l = lam.length();
  Terms out;
  if (l == 0) {
    add_term(out, Partition{}, Rational(1));
    return out;
  }
  if (l > 20) throw std::invalid_argument("Jacobi-Trudi expansion limited to 20 rows");
  std::map<unsigned, std::map<std::vector<int>, Rational>> dp;
  dp[0u][{}] = 1;
  for (int i = 0; i < l; ++i) {
    std::map<unsigned, std::map<std::vector<int>, Rational>> next;
    for (const auto& [mask, states] : dp) {
      for (int j = 0; j < l; ++j) {
        if (mask & (1u << j)) continue;
        int entry = lam.parts()[i] - i + j;
        if (entry < 0) continue;
        int inversions = 0;
        for (int j2 = j + 1; j2 < l; ++j2)
          if (mask & (1u << j2)) ++inversions;
        Rational sign = (inversions % 2 == 0) ? 1 : -1;
        auto& bucket = next[mask | (1u << j)];
        for (const auto& [partsvec, c] : states) {
          std::vector<int> np = partsvec;
          if (entry > 0)
            np.insert(std::lower_bound(np.begin(), np.end(), entry, std::greater<int>()), entry);
          bucket[std::move(np)] += sign * c;
        }
      }
    }
    dp = std::move(next);
  }
  auto it = dp.find((1u << l) - 1);
  if (it != dp.end())
    for (const auto& [partsvec, c] : it->second) add_term(out, Partition(partsvec), c);
  return out;
}

/// z_lambda = prod_i i^{m_i} m_i!, the power-sum self-pairing.
inline Integer z_of(const Partition& lam) {
  Integer z = 1;
  const auto& ps = lam.parts();
  std::size_t i = 0;
  while (i < ps.size()) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    auto mult = static_cast<int>(j - i);
    for (int t = 0; t < mult; ++t) z *= ps[i];
    for (int t = 2; t <= mult; ++t) z *= t;
    i = j;
  }
  return z;
}

}  // namespace detail

/// Per-(degree, source, target) transition matrices between the h basis and
/// the other bases, indexed by the canonical partition order. Entries are
/// computed once and then shared read-only; a missing entry may be computed
/// by any caller, idempotently, and no partial entry is ever visible.
/// Optional hooks persist matrices to disk (see serialize.hpp).
class TransitionCache {
 public:
  struct Key {
    int degree;
    char from;
    char to;
    auto operator<=>(const Key&) const = default;
  };
  using LoadHook = std::function<std::optional<detail::Mat>(const Key&, const std::vector<Partition>&)>;
  using SaveHook = std::function<void(const Key&, const std::vector<Partition>&, const detail::Mat&)>;

  static TransitionCache& instance() {
    static TransitionCache cache;
    return cache;
  }

  std::shared_ptr<const std::vector<Partition>> degree_index(int degree) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = indices_.find(degree);
      if (it != indices_.end()) return it->second;
    }
    auto idx = std::make_shared<const std::vector<Partition>>(partitions_of(degree));
    std::lock_guard<std::mutex> lock(mu_);
    return indices_.try_emplace(degree, std::move(idx)).first->second;
  }

  /// Matrix whose row i expands basis element from_{index[i]} in basis `to`;
  /// exactly one side is the h basis.
  const detail::Mat& matrix(Basis from, Basis to, int degree) {
    Key key{degree, basis_char(from), basis_char(to)};
    LoadHook load;
    SaveHook save;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *it->second;
      load = load_;
      save = save_;
    }
    auto index = degree_index(degree);
    std::shared_ptr<const detail::Mat> mat;
    if (load) {
      if (auto loaded = load(key, *index)) {
        if (loaded->size() == index->size()) mat = std::make_shared<const detail::Mat>(std::move(*loaded));
      }
    }
    bool computed = false;
    if (!mat) {
      mat = std::make_shared<const detail::Mat>(compute(from, to, degree, *index));
      computed = true;
    }
    if (computed && save) save(key, *index, *mat);
    std::lock_guard<std::mutex> lock(mu_);
    return *cache_.try_emplace(key, std::move(mat)).first->second;
  }

  const detail::Mat& to_h(Basis from, int degree) { return matrix(from, Basis::H, degree); }
  const detail::Mat& from_h(Basis to, int degree) { return matrix(Basis::H, to, degree); }

  void set_hooks(LoadHook load, SaveHook save) {
    std::lock_guard<std::mutex> lock(mu_);
    load_ = std::move(load);
    save_ = std::move(save);
  }

  /// Testing hook; not safe against concurrent readers.
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.clear();
    indices_.clear();
  }

 private:
  TransitionCache() = default;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const detail::Mat>> cache_;
  std::map<int, std::shared_ptr<const std::vector<Partition>>> indices_;
  LoadHook load_;
  SaveHook save_;

  detail::Mat dense_rows(const std::vector<detail::Terms>& rows, const std::vector<Partition>& index) {
    detail::Mat a(rows.size(), detail::Vec(index.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [key, c] : rows[i]) a[i][partition_index(index, key)] = c;
    return a;
  }

  detail::Mat compute(Basis from, Basis to, int degree, const std::vector<Partition>& index) {
    auto product_rows = [&](const std::function<const detail::Terms&(int)>& gen) {
      std::vector<detail::Terms> rows;
      rows.reserve(index.size());
      for (const auto& lam : index) {
        detail::Terms acc{{Partition{}, Rational(1)}};
        for (int part : lam.parts()) acc = detail::mul_terms(acc, gen(part));
        rows.push_back(std::move(acc));
      }
      return dense_rows(rows, index);
    };
    if (to == Basis::H) {
      switch (from) {
        case Basis::E: return product_rows(detail::e_in_h);
        case Basis::P: return product_rows(detail::p_in_h);
        case Basis::S: {
          std::vector<detail::Terms> rows;
          rows.reserve(index.size());
          for (const auto& lam : index) rows.push_back(detail::s_in_h(lam));
          return dense_rows(rows, index);
        }
        case Basis::M: return detail::invert(from_h(Basis::M, degree));
        case Basis::H: return detail::identity(static_cast<int>(index.size()));
      }
    }
    if (from == Basis::H) {
      switch (to) {
        case Basis::E: return product_rows(detail::h_in_e);
        case Basis::P: return product_rows(detail::h_in_p);
        case Basis::S: return detail::invert(to_h(Basis::S, degree));
        case Basis::M: {
          // <h_lambda, m_mu> = delta, so the m coefficients of h_lambda are
          // the Hall pairings <h_lambda, h_mu>, computed through p.
          const detail::Mat& hp = from_h(Basis::P, degree);
          std::vector<Integer> z;
          z.reserve(index.size());
          for (const auto& delta : index) z.push_back(detail::z_of(delta));
          int n = static_cast<int>(index.size());
          detail::Mat a(n, detail::Vec(n, Rational(0)));
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
              Rational v = 0;
              for (int t = 0; t < n; ++t)
                if (hp[i][t] != 0 && hp[j][t] != 0) v += Rational(z[t]) * hp[i][t] * hp[j][t];
              a[i][j] = v;
              a[j][i] = v;
            }
          return a;
        }
        case Basis::H: return detail::identity(static_cast<int>(index.size()));
      }
    }
    throw std::logic_error("transition matrices are only kept against the h basis");
  }
};

/// A graded, finitely supported symmetric function with exact rational
/// coefficients. The canonical internal form is the h basis; conversions to
/// and from the other bases go through per-degree transition matrices.
class SymFunc {
 public:
  using Terms = detail::Terms;

  SymFunc() = default;

  static SymFunc unit() { return SymFunc(Terms{{Partition{}, Rational(1)}}); }

  static SymFunc from_basis(Basis b, const Terms& terms) {
    if (b == Basis::H) {
      Terms t;
      for (const auto& [lam, c] : terms) detail::add_term(t, lam, c);
      return SymFunc(std::move(t));
    }
    auto& cache = TransitionCache::instance();
    Terms t;
    for (const auto& [lam, c] : terms) {
      if (c == 0) continue;
      int d = lam.size();
      auto index = cache.degree_index(d);
      const detail::Mat& to_h = cache.to_h(b, d);
      int row = partition_index(*index, lam);
      for (std::size_t j = 0; j < index->size(); ++j)
        if (to_h[row][j] != 0) detail::add_term(t, (*index)[j], c * to_h[row][j]);
    }
    return SymFunc(std::move(t));
  }

  static SymFunc h(const Partition& lam) { return from_basis(Basis::H, {{lam, Rational(1)}}); }
  static SymFunc e(const Partition& lam) { return from_basis(Basis::E, {{lam, Rational(1)}}); }
  static SymFunc p(const Partition& lam) { return from_basis(Basis::P, {{lam, Rational(1)}}); }
  static SymFunc s(const Partition& lam) { return from_basis(Basis::S, {{lam, Rational(1)}}); }
  static SymFunc m(const Partition& lam) { return from_basis(Basis::M, {{lam, Rational(1)}}); }

  const Terms& h_terms() const { return terms_; }

  struct Expansion {
    Basis basis;
    Terms terms;
    bool integral;
  };

  Expansion to_basis(Basis b) const {
    Expansion out{b, {}, true};
    if (b == Basis::H) {
      out.terms = terms_;
    } else {
      auto& cache = TransitionCache::instance();
      for (int d : degrees()) {
        auto index = cache.degree_index(d);
        const detail::Mat& from_h = cache.from_h(b, d);
        detail::Vec coeffs(index->size(), Rational(0));
        for (std::size_t i = 0; i < index->size(); ++i) {
          auto it = terms_.find((*index)[i]);
          if (it != terms_.end()) coeffs[i] = it->second;
        }
        detail::Vec target = detail::row_times(coeffs, from_h);
        for (std::size_t j = 0; j < index->size(); ++j)
          if (target[j] != 0) out.terms.emplace((*index)[j], target[j]);
      }
    }
    for (const auto& [lam, c] : out.terms)
      if (!is_integral(c)) {
        out.integral = false;
        break;
      }
    return out;
  }

  bool is_zero() const { return terms_.empty(); }

  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [lam, c] : terms_) {
      int d = lam.size();
      if (out.empty() || out.back() != d) out.push_back(d);
    }
    return out;
  }

  SymFunc component(int d) const {
    Terms t;
    for (const auto& [lam, c] : terms_)
      if (lam.size() == d) t.emplace(lam, c);
    return SymFunc(std::move(t));
  }

  SymFunc& operator+=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms_) detail::add_term(terms_, lam, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms_) detail::add_term(terms_, lam, -c);
    return *this;
  }
  SymFunc& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [lam, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  SymFunc operator-() const {
    SymFunc out = *this;
    return out *= Rational(-1);
  }

  /// h_lambda h_mu = h_{sort(lambda ∪ mu)}, extended bilinearly.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    return SymFunc(detail::mul_terms(a.terms_, b.terms_));
  }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  explicit SymFunc(Terms t) : terms_(std::move(t)) {}
  Terms terms_;  // h basis, zero-free
};

inline SymFunc multiply(const SymFunc& a, const SymFunc& b) { return a * b; }

/// Element of Sym ⊗ Sym, both legs in the h basis.
class TensorSymFunc {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Rational>;

  TensorSymFunc() = default;

  static TensorSymFunc tensor(const SymFunc& a, const SymFunc& b) {
    TensorSymFunc out;
    for (const auto& [la, ca] : a.h_terms())
      for (const auto& [lb, cb] : b.h_terms()) out.add(la, lb, ca * cb);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& left, const Partition& right, const Rational& c) {
    if (c == 0) return;
    auto key = Key{left, right};
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorSymFunc& operator+=(const TensorSymFunc& o) {
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
    return *this;
  }
  TensorSymFunc& operator-=(const TensorSymFunc& o) {
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
    return *this;
  }
  friend TensorSymFunc operator+(TensorSymFunc a, const TensorSymFunc& b) { return a += b; }
  friend TensorSymFunc operator-(TensorSymFunc a, const TensorSymFunc& b) { return a -= b; }

  /// Componentwise product (a⊗b)(c⊗d) = ac ⊗ bd.
  friend TensorSymFunc operator*(const TensorSymFunc& a, const TensorSymFunc& b) {
    TensorSymFunc out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add(detail::concat_parts(ka.first, kb.first),
                detail::concat_parts(ka.second, kb.second), ca * cb);
    return out;
  }

  TensorSymFunc swapped() const {
    TensorSymFunc out;
    for (const auto& [key, c] : terms_) out.add(key.second, key.first, c);
    return out;
  }

  /// (counit ⊗ id): keeps the right leg of terms whose left leg is 1.
  SymFunc collapse_left() const {
    SymFunc::Terms t;
    for (const auto& [key, c] : terms_)
      if (key.first.empty()) detail::add_term(t, key.second, c);
    return SymFunc::from_basis(Basis::H, t);
  }

  SymFunc collapse_right() const {
    SymFunc::Terms t;
    for (const auto& [key, c] : terms_)
      if (key.second.empty()) detail::add_term(t, key.first, c);
    return SymFunc::from_basis(Basis::H, t);
  }

  /// Applies f to every left leg and g to every right leg, bilinearly.
  TensorSymFunc map_legs(const std::function<SymFunc(const SymFunc&)>& f,
                         const std::function<SymFunc(const SymFunc&)>& g) const {
    TensorSymFunc out;
    for (const auto& [key, c] : terms_) {
      SymFunc left = f(SymFunc::h(key.first));
      SymFunc right = g(SymFunc::h(key.second));
      for (const auto& [la, ca] : left.h_terms())
        for (const auto& [lb, cb] : right.h_terms()) out.add(la, lb, c * ca * cb);
    }
    return out;
  }

  friend bool operator==(const TensorSymFunc&, const TensorSymFunc&) = default;

 private:
  Terms terms_;
};

/// Algebra morphism extending Δ(h_i) = sum_{j<=i} h_j ⊗ h_{i-j}.
inline TensorSymFunc coproduct(const SymFunc& f) {
  TensorSymFunc out;
  for (const auto& [lam, c] : f.h_terms()) {
    std::map<TensorSymFunc::Key, Rational> acc{{{Partition{}, Partition{}}, Rational(1)}};
    for (int part : lam.parts()) {
      std::map<TensorSymFunc::Key, Rational> next;
      for (const auto& [key, cc] : acc)
        for (int j = 0; j <= part; ++j) {
          Partition left = j > 0 ? detail::concat_parts(key.first, Partition{j}) : key.first;
          Partition right = j < part ? detail::concat_parts(key.second, Partition{part - j}) : key.second;
          next[TensorSymFunc::Key{std::move(left), std::move(right)}] += cc;
        }
      acc = std::move(next);
    }
    for (const auto& [key, cc] : acc) out.add(key.first, key.second, c * cc);
  }
  return out;
}

/// The conjugation involution, h_n -> e_n; a ring and Hopf morphism.
inline SymFunc omega(const SymFunc& f) {
  SymFunc::Terms t;
  for (const auto& [lam, c] : f.h_terms()) {
    detail::Terms acc{{Partition{}, Rational(1)}};
    for (int part : lam.parts()) acc = detail::mul_terms(acc, detail::e_in_h(part));
    for (const auto& [key, cc] : acc) detail::add_term(t, key, c * cc);
  }
  return SymFunc::from_basis(Basis::H, t);
}

/// Hall inner product: <p_lambda, p_mu> = delta z_lambda, extended bilinearly.
inline Rational hall_inner(const SymFunc& f, const SymFunc& g) {
  auto fp = f.to_basis(Basis::P);
  auto gp = g.to_basis(Basis::P);
  Rational out = 0;
  for (const auto& [lam, a] : fp.terms) {
    auto it = gp.terms.find(lam);
    if (it != gp.terms.end()) out += Rational(detail::z_of(lam)) * a * it->second;
  }
  return out;
}

/// Evaluation at (1,0,0,...): the ring morphism with h_i -> 1, so on the h
/// basis it sums the coefficients.
inline Rational character_chi(const SymFunc& f) {
  Rational out = 0;
  for (const auto& [lam, c] : f.h_terms()) out += c;
  return out;
}

/// Exact basis of {f of degree d : Δf = f⊗1 + 1⊗f}, computed as a null
/// space over the h basis of degree d.
inline std::vector<SymFunc> primitive_basis(int d) {
  if (d <= 0) throw std::invalid_argument("primitive_basis needs a positive degree");
  auto& cache = TransitionCache::instance();
  auto index = cache.degree_index(d);
  int n = static_cast<int>(index->size());

  // Column layout: middle bidegrees (a, d-a) for a = 1..d-1.
  std::vector<std::shared_ptr<const std::vector<Partition>>> mid;
  std::vector<int> offset;
  int cols = 0;
  for (int a = 1; a <= d - 1; ++a) {
    auto ia = cache.degree_index(a);
    auto ib = cache.degree_index(d - a);
    mid.push_back(ia);
    offset.push_back(cols);
    cols += static_cast<int>(ia->size() * ib->size());
  }

  if (cols == 0) return {SymFunc::h(Partition{d})};  // degree 1: everything is primitive

  detail::Mat a(cols, detail::Vec(n, Rational(0)));
  for (int col = 0; col < n; ++col) {
    TensorSymFunc delta = coproduct(SymFunc::h((*index)[col]));
    for (const auto& [key, c] : delta.terms()) {
      int da = key.first.size();
      if (da == 0 || da == d) continue;  // the f⊗1 + 1⊗f part drops out
      auto ia = cache.degree_index(da);
      auto ib = cache.degree_index(d - da);
      int row = offset[da - 1] +
                partition_index(*ia, key.first) * static_cast<int>(ib->size()) +
                partition_index(*ib, key.second);
      a[row][col] = c;
    }
  }

  std::vector<SymFunc> out;
  for (const auto& v : detail::nullspace(std::move(a))) {
    SymFunc::Terms t;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) t.emplace((*index)[i], v[i]);
    out.push_back(SymFunc::from_basis(Basis::H, t));
  }
  return out;
}

/// Number of multisets of generator degrees summing to d: the graded rank of
/// a free polynomial algebra on those generators.
inline long long subalgebra_rank(const std::vector<int>& generator_degrees, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  for (int g : generator_degrees)
    if (g <= 0) throw std::invalid_argument("generator degrees must be positive");
  std::vector<long long> ways(d + 1, 0);
  ways[0] = 1;
  for (int g : generator_degrees)
    for (int t = g; t <= d; ++t) ways[t] += ways[t - g];
  return ways[d];
}

}  // namespace schurpos
