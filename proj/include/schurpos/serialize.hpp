#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "schurpos/hopf.hpp"
#include "schurpos/kschur.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/schur_pq.hpp"
#include "schurpos/symfunc.hpp"

namespace schurpos {

using Json = nlohmann::json;

struct SerializeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long checked_ll(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw SerializeError("coefficient exceeds the 64-bit serialization range");
  return static_cast<long long>(v);
}

inline Json partition_to_json(const Partition& lam) {
  Json arr = Json::array();
  for (int p : lam.parts()) arr.push_back(p);
  return arr;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw SerializeError("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SerializeError("partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw SerializeError(e.what());
  }
}

inline Json composition_to_json(const Composition& alpha) {
  Json arr = Json::array();
  for (int p : alpha.parts()) arr.push_back(p);
  return arr;
}

inline Json rational_pair(const Rational& c) {
  return Json::array({checked_ll(numerator(c)), checked_ll(denominator(c))});
}

inline Rational rational_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw SerializeError("rational must be [num, den]");
  long long num = j[0].get<long long>(), den = j[1].get<long long>();
  if (den == 0) throw SerializeError("rational denominator must be nonzero");
  return Rational(num, den);
}

// {"basis": "h", "terms": [{"partition": [...], "num": n, "den": d}, ...]},
// terms sorted by degree then the canonical partition order.
inline Json expansion_to_json(const SymFunc::Expansion& exp) {
  Json terms = Json::array();
  for (const auto& [lam, c] : exp.terms) {
    Json t;
    t["partition"] = partition_to_json(lam);
    t["num"] = checked_ll(numerator(c));
    t["den"] = checked_ll(denominator(c));
    terms.push_back(std::move(t));
  }
  Json out;
  out["basis"] = std::string(1, basis_char(exp.basis));
  out["terms"] = std::move(terms);
  return out;
}

inline Json symfunc_to_json(const SymFunc& f, Basis basis) {
  return expansion_to_json(f.to_basis(basis));
}

inline std::pair<Basis, SymFunc::Terms> basis_terms_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
    throw SerializeError("symmetric function needs \"basis\" and \"terms\"");
  std::string b = j["basis"].get<std::string>();
  if (b.size() != 1) throw SerializeError("basis must be one of m, e, h, p, s");
  Basis basis;
  try {
    basis = basis_from_char(b[0]);
  } catch (const std::invalid_argument& e) {
    throw SerializeError(e.what());
  }
  SymFunc::Terms terms;
  for (const auto& t : j["terms"]) {
    Partition lam = partition_from_json(t.at("partition"));
    long long num = t.at("num").get<long long>();
    long long den = t.contains("den") ? t.at("den").get<long long>() : 1;
    if (den <= 0) throw SerializeError("denominators must be positive");
    Rational c(num, den);
    if (c == 0) continue;
    auto [it, inserted] = terms.try_emplace(lam, c);
    if (!inserted) throw SerializeError("duplicate term for " + lam.to_string());
  }
  return {basis, std::move(terms)};
}

inline SymFunc symfunc_from_json(const Json& j) {
  auto [basis, terms] = basis_terms_from_json(j);
  return SymFunc::from_basis(basis, terms);
}

inline Json qsym_to_json(const QSymFunc& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms()) {
    Json t;
    t["composition"] = composition_to_json(alpha);
    t["num"] = checked_ll(numerator(c));
    t["den"] = checked_ll(denominator(c));
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

// {"sym": <SymFunc in the p basis>, "gamma_terms": [{"odd_partition": [...], "coeff": n}]}
inline Json gamma_to_json(const SymFunc& input, const GammaExpansion& expansion) {
  Json out;
  out["sym"] = symfunc_to_json(input, Basis::P);
  if (!expansion.ok()) {
    out["error"] = gamma_error_name(*expansion.error);
    if (expansion.error == GammaError::even_p_support)
      out["witness"] = partition_to_json(expansion.witness);
    return out;
  }
  Json terms = Json::array();
  for (const auto& [gamma, c] : expansion.terms) {
    Json t;
    t["odd_partition"] = partition_to_json(gamma);
    t["coeff"] = checked_ll(c);
    terms.push_back(std::move(t));
  }
  out["gamma_terms"] = std::move(terms);
  return out;
}

// Per-(k, degree) transition block between {h_lambda} and the k-Schur basis:
// integer matrices with the partition list header, rows and columns in the
// canonical order.
inline Json kmatrix_to_json(int k, int degree) {
  auto block = kschur_basis(k).block(degree);
  Json out;
  out["k"] = k;
  out["degree"] = degree;
  Json parts = Json::array();
  for (const auto& lam : block->index) parts.push_back(partition_to_json(lam));
  out["partitions"] = std::move(parts);
  auto dump = [](const std::vector<std::vector<Integer>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(checked_ll(v));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  out["matrix"] = dump(block->h_to_kschur);
  out["inverse"] = dump(block->kschur_to_h);
  return out;
}

// {"max_degree": d, "basis": {"0": ["1"], ...},
//  "product":   [[deg_a, i, deg_b, j, deg_c, k, num, den], ...],
//  "coproduct": [[deg_a, i, deg_b, j, deg_c, k, num, den], ...],
//  "character": {"label": [num, den], ...}}
// A product row says basis[deg_a][i] * basis[deg_b][j] contains
// basis[deg_c][k]; a coproduct row says Delta(basis[deg_c][k]) contains
// basis[deg_a][i] (x) basis[deg_b][j]. Both require deg_c = deg_a + deg_b.
inline Json presentation_to_json(const HopfPresentation& hp) {
  Json out;
  out["max_degree"] = hp.max_degree;
  Json basis;
  for (int d = 0; d <= hp.max_degree; ++d) {
    Json labels = Json::array();
    for (const auto& l : hp.basis[d]) labels.push_back(l);
    basis[std::to_string(d)] = std::move(labels);
  }
  out["basis"] = std::move(basis);
  Json product = Json::array();
  for (const auto& [key, row] : hp.product) {
    auto [da, i, db, j] = key;
    for (const auto& [k, c] : row)
      product.push_back(Json::array({da, i, db, j, da + db, k, checked_ll(numerator(c)),
                                     checked_ll(denominator(c))}));
  }
  out["product"] = std::move(product);
  Json coproduct = Json::array();
  for (const auto& [key, row] : hp.coproduct) {
    auto [dc, kk] = key;
    for (const auto& [tk, c] : row) {
      auto [da, i, db, j] = tk;
      coproduct.push_back(Json::array({da, i, db, j, dc, kk, checked_ll(numerator(c)),
                                       checked_ll(denominator(c))}));
    }
  }
  out["coproduct"] = std::move(coproduct);
  Json character;
  for (const auto& [label, c] : hp.character) character[label] = rational_pair(c);
  out["character"] = std::move(character);
  return out;
}

inline HopfPresentation presentation_from_json(const Json& j) {
  HopfPresentation hp;
  hp.max_degree = j.at("max_degree").get<int>();
  if (hp.max_degree < 0) throw SerializeError("max_degree must be nonnegative");
  hp.basis.resize(hp.max_degree + 1);
  const Json& basis = j.at("basis");
  for (int d = 0; d <= hp.max_degree; ++d) {
    auto it = basis.find(std::to_string(d));
    if (it == basis.end()) throw SerializeError("basis is missing degree " + std::to_string(d));
    for (const auto& l : *it) hp.basis[d].push_back(l.get<std::string>());
  }
  auto read_row = [](const Json& row) {
    if (!row.is_array() || row.size() != 8)
      throw SerializeError("structure constants are 8-tuples [da,i,db,j,dc,k,num,den]");
    std::array<long long, 8> v{};
    for (int t = 0; t < 8; ++t) v[t] = row[t].get<long long>();
    if (v[4] != v[0] + v[2]) throw SerializeError("structure constant has a degree mismatch");
    if (v[7] == 0) throw SerializeError("rational denominator must be nonzero");
    return v;
  };
  for (const auto& row : j.value("product", Json::array())) {
    auto v = read_row(row);
    hp.product[{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                static_cast<int>(v[3])}][static_cast<int>(v[5])] += Rational(v[6], v[7]);
  }
  for (const auto& row : j.value("coproduct", Json::array())) {
    auto v = read_row(row);
    hp.coproduct[{static_cast<int>(v[4]), static_cast<int>(v[5])}]
                [{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                  static_cast<int>(v[3])}] += Rational(v[6], v[7]);
  }
  for (const auto& [label, c] : j.at("character").items()) hp.character[label] = rational_from_pair(c);
  try {
    hp.check_shape();
  } catch (const std::invalid_argument& e) {
    throw SerializeError(e.what());
  }
  return hp;
}

inline Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SerializeError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw SerializeError("parse error in " + path.string() + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::filesystem::path& path, const Json& j, int indent = 1) {
  std::ofstream out(path);
  if (!out) throw SerializeError("cannot write " + path.string());
  out << j.dump(indent) << "\n";
}

/// Persists transition matrices under dir as one JSON file per
/// (degree, from, to). Corrupt or mismatched files are ignored and
/// recomputed; the cache never changes results.
inline void enable_disk_cache(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto file_of = [dir](const TransitionCache::Key& key) {
    return dir / ("trans_d" + std::to_string(key.degree) + "_" + key.from + "_to_" + key.to +
                  ".json");
  };
  TransitionCache::instance().set_hooks(
      [file_of](const TransitionCache::Key& key,
                const std::vector<Partition>& index) -> std::optional<detail::Mat> {
        std::error_code ec;
        auto path = file_of(key);
        if (!std::filesystem::exists(path, ec)) return std::nullopt;
        try {
          Json j = load_json_file(path);
          if (j.at("degree").get<int>() != key.degree ||
              j.at("from").get<std::string>() != std::string(1, key.from) ||
              j.at("to").get<std::string>() != std::string(1, key.to))
            return std::nullopt;
          const Json& parts = j.at("partitions");
          if (parts.size() != index.size()) return std::nullopt;
          for (std::size_t i = 0; i < index.size(); ++i)
            if (partition_from_json(parts[i]) != index[i]) return std::nullopt;
          detail::Mat m;
          for (const auto& row : j.at("entries")) {
            detail::Vec r;
            for (const auto& entry : row) r.push_back(rational_from_pair(entry));
            if (r.size() != index.size()) return std::nullopt;
            m.push_back(std::move(r));
          }
          return m;
        } catch (const std::exception&) {
          return std::nullopt;
        }
      },
      [file_of](const TransitionCache::Key& key, const std::vector<Partition>& index,
                const detail::Mat& m) {
        try {
          Json j;
          j["degree"] = key.degree;
          j["from"] = std::string(1, key.from);
          j["to"] = std::string(1, key.to);
          Json parts = Json::array();
          for (const auto& lam : index) parts.push_back(partition_to_json(lam));
          j["partitions"] = std::move(parts);
          Json entries = Json::array();
          for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(rational_pair(c));
            entries.push_back(std::move(r));
          }
          j["entries"] = std::move(entries);
          save_json_file(file_of(key), j, -1);
        } catch (const std::exception&) {
          // cache writes are best effort
        }
      });
}

}  // namespace schurpos
