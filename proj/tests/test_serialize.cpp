#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "schurpos/serialize.hpp"

using namespace schurpos;

TEST_CASE("symmetric function wire format", "[serialize]") {
  SymFunc f = SymFunc::s(Partition{2, 1});
  Json j = symfunc_to_json(f, Basis::H);
  CHECK(j.dump() ==
        R"({"basis":"h","terms":[{"den":1,"num":-1,"partition":[3]},{"den":1,"num":1,"partition":[2,1]}]})");
  CHECK(symfunc_from_json(j) == f);

  // rationals round trip with positive denominators
  SymFunc g = Rational(1, 2) * SymFunc::p(Partition{2}) - Rational(2, 3) * SymFunc::h(Partition{1, 1});
  for (Basis b : {Basis::H, Basis::P, Basis::M}) {
    Json jb = symfunc_to_json(g, b);
    for (const auto& t : jb["terms"]) CHECK(t["den"].get<long long>() > 0);
    CHECK(symfunc_from_json(jb) == g);
  }

  CHECK(symfunc_to_json(SymFunc(), Basis::S).dump() == R"({"basis":"s","terms":[]})");
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"terms":[]})")), SerializeError);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(
                      R"({"basis":"h","terms":[{"partition":[1,2],"num":1,"den":1}]})")),
                  SerializeError);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(
                      R"({"basis":"h","terms":[{"partition":[1],"num":1,"den":-2}]})")),
                  SerializeError);
}

TEST_CASE("terms are sorted by degree then canonical order", "[serialize]") {
  SymFunc f = SymFunc::h(Partition{1, 1, 1}) + SymFunc::h(Partition{3}) +
              SymFunc::h(Partition{1}) + SymFunc::h(Partition{2, 1});
  Json j = symfunc_to_json(f, Basis::H);
  std::vector<Json> parts;
  for (const auto& t : j["terms"]) parts.push_back(t["partition"]);
  CHECK(parts == std::vector<Json>{Json::array({1}), Json::array({3}), Json::array({2, 1}),
                                   Json::array({1, 1, 1})});
}

TEST_CASE("gamma element wire format", "[serialize]") {
  SymFunc f = p_lambda(StrictPartition{2, 1});
  Json j = gamma_to_json(f, gamma_expand(f));
  CHECK(j["gamma_terms"].dump() ==
        R"([{"coeff":-1,"odd_partition":[3]},{"coeff":1,"odd_partition":[1,1,1]}])");
  CHECK(j["sym"]["basis"] == "p");

  Json err = gamma_to_json(SymFunc::s(Partition{2}), gamma_expand(SymFunc::s(Partition{2})));
  CHECK(err["error"] == "even-p-support");
  CHECK(err["witness"] == Json::array({2}));
}

TEST_CASE("k-matrix blocks serialize with the partition header", "[serialize]") {
  Json j = kmatrix_to_json(2, 3);
  CHECK(j["partitions"] == Json::parse("[[2,1],[1,1,1]]"));
  CHECK(j["matrix"] == Json::parse("[[1,0],[1,1]]"));
  CHECK(j["inverse"] == Json::parse("[[1,0],[-1,1]]"));
}

TEST_CASE("presentation files round trip", "[serialize]") {
  for (const auto& hp :
       {make_sym_presentation(4), make_binomial_presentation(5), make_sym_presentation(4, 2)}) {
    Json j = presentation_to_json(hp);
    HopfPresentation back = presentation_from_json(j);
    CHECK(back.max_degree == hp.max_degree);
    CHECK(back.basis == hp.basis);
    CHECK(back.product == hp.product);
    CHECK(back.coproduct == hp.coproduct);
    CHECK(back.character == hp.character);
  }
  // degree mismatch in a structure constant is rejected
  Json bad = presentation_to_json(make_binomial_presentation(2));
  bad["product"][0][4] = 7;
  CHECK_THROWS_AS(presentation_from_json(bad), SerializeError);
}

TEST_CASE("disk cache round trips transition matrices", "[serialize]") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "schurpos_cache_test";
  fs::remove_all(dir);
  enable_disk_cache(dir);
  auto& cache = TransitionCache::instance();
  cache.clear();
  const detail::Mat first = cache.to_h(Basis::S, 4);
  CHECK(fs::exists(dir / "trans_d4_s_to_h.json"));
  // wipe memory; the second read must come from disk and agree
  cache.clear();
  CHECK(cache.to_h(Basis::S, 4) == first);
  // corrupt file: ignored, recomputed, same result
  {
    std::ofstream out(dir / "trans_d4_s_to_h.json");
    out << "{not json";
  }
  cache.clear();
  CHECK(cache.to_h(Basis::S, 4) == first);
  cache.set_hooks({}, {});
  cache.clear();
  fs::remove_all(dir);
}
