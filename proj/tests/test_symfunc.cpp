#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "schurpos/symfunc.hpp"

using namespace schurpos;

namespace {
SymFunc::Terms one_term(const Partition& lam, Rational c = 1) { return {{lam, c}}; }
}  // namespace

TEST_CASE("basis round trips are exact", "[symfunc]") {
  for (Basis b : {Basis::M, Basis::E, Basis::P, Basis::S}) {
    for (int d = 0; d <= 6; ++d)
      for (const auto& lam : partitions_of(d)) {
        SymFunc f = SymFunc::from_basis(b, one_term(lam));
        auto back = f.to_basis(b);
        CHECK(back.terms == one_term(lam));
      }
  }
}

TEST_CASE("conversion cycles through h are identities up to degree 9", "[symfunc]") {
  auto& cache = TransitionCache::instance();
  for (Basis b : {Basis::S, Basis::P, Basis::M, Basis::E}) {
    for (int d = 0; d <= 9; ++d) {
      auto prod = detail::mat_mul(cache.to_h(b, d), cache.from_h(b, d));
      CHECK(prod == detail::identity(static_cast<int>(partitions_of(d).size())));
    }
  }
}

TEST_CASE("newton identity conversions", "[symfunc]") {
  auto hp = SymFunc::h(Partition{2}).to_basis(Basis::P);
  CHECK(hp.terms == SymFunc::Terms{{Partition{2}, Rational(1, 2)}, {Partition{1, 1}, Rational(1, 2)}});
  CHECK_FALSE(hp.integral);

  auto sh = SymFunc::s(Partition{2, 1}).to_basis(Basis::H);
  CHECK(sh.terms == SymFunc::Terms{{Partition{3}, Rational(-1)}, {Partition{2, 1}, Rational(1)}});
  CHECK(sh.integral);

  CHECK(SymFunc::e(Partition{1}) == SymFunc::h(Partition{1}));
}

TEST_CASE("multiplication", "[symfunc]") {
  CHECK(SymFunc::h(Partition{1}) * SymFunc::h(Partition{1}) == SymFunc::h(Partition{1, 1}));
  CHECK(SymFunc::h(Partition{2, 1}) * SymFunc::unit() == SymFunc::h(Partition{2, 1}));
  // classical Pieri: s_2 s_1 = s_3 + s_21
  SymFunc prod = SymFunc::s(Partition{2}) * SymFunc::s(Partition{1});
  CHECK(prod == SymFunc::s(Partition{3}) + SymFunc::s(Partition{2, 1}));
  // commutative, associative on a sample
  SymFunc a = SymFunc::s(Partition{2}), b = SymFunc::p(Partition{1, 1}), c = SymFunc::e(Partition{2, 1});
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("coproduct of generators", "[symfunc]") {
  TensorSymFunc expect;
  expect.add(Partition{2}, Partition{}, 1);
  expect.add(Partition{1}, Partition{1}, 1);
  expect.add(Partition{}, Partition{2}, 1);
  CHECK(coproduct(SymFunc::h(Partition{2})) == expect);

  CHECK(coproduct(SymFunc::unit()) == TensorSymFunc::tensor(SymFunc::unit(), SymFunc::unit()));

  SymFunc p3 = SymFunc::p(Partition{3});
  TensorSymFunc primitive = TensorSymFunc::tensor(p3, SymFunc::unit()) +
                            TensorSymFunc::tensor(SymFunc::unit(), p3);
  CHECK(coproduct(p3) == primitive);
}

TEST_CASE("coproduct counit compatibility and cocommutativity", "[symfunc]") {
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : partitions_of(d)) {
      SymFunc f = SymFunc::s(lam);
      auto delta = coproduct(f);
      CHECK(delta.collapse_left() == f);
      CHECK(delta.collapse_right() == f);
      CHECK(delta.swapped() == delta);
    }
}

TEST_CASE("bialgebra compatibility on generators", "[symfunc]") {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; i + j <= 8; ++j) {
      SymFunc hi = SymFunc::h(Partition{i}), hj = SymFunc::h(Partition{j});
      CHECK(coproduct(hi * hj) == coproduct(hi) * coproduct(hj));
    }
}

TEST_CASE("omega involution", "[symfunc]") {
  CHECK(omega(SymFunc::h(Partition{2})) == SymFunc::e(Partition{2}));
  CHECK(omega(SymFunc::h(Partition{2})).to_basis(Basis::H).terms ==
        SymFunc::Terms{{Partition{2}, Rational(-1)}, {Partition{1, 1}, Rational(1)}});
  CHECK(omega(SymFunc::p(Partition{2})) == -SymFunc::p(Partition{2}));
  CHECK(omega(SymFunc::s(Partition{2, 1})) == SymFunc::s(Partition{2, 1}));
  // omega(s_lambda) = s_{lambda'}
  for (int d = 0; d <= 7; ++d)
    for (const auto& lam : partitions_of(d)) CHECK(omega(SymFunc::s(lam)) == SymFunc::s(conjugate(lam)));
}

TEST_CASE("omega squared is the identity on random integer elements", "[symfunc]") {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    SymFunc f;
    for (int d = 0; d <= 8; ++d)
      for (const auto& lam : partitions_of(d))
        if (coeff(rng) > 3) f += Rational(coeff(rng)) * SymFunc::h(lam);
    CHECK(omega(omega(f)) == f);
  }
}

TEST_CASE("omega is a Hopf morphism on generators", "[symfunc]") {
  auto om = [](const SymFunc& g) { return omega(g); };
  for (int i = 1; i <= 8; ++i) {
    SymFunc hi = SymFunc::h(Partition{i});
    CHECK(coproduct(omega(hi)) == coproduct(hi).map_legs(om, om));
  }
}

TEST_CASE("hall inner product", "[symfunc]") {
  CHECK(hall_inner(SymFunc::p(Partition{2}), SymFunc::p(Partition{2})) == 2);
  CHECK(hall_inner(SymFunc::p(Partition{2}), SymFunc::p(Partition{1, 1})) == 0);
  CHECK(hall_inner(SymFunc::h(Partition{2}), SymFunc::m(Partition{2})) == 1);
  // h/m duality
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (const auto& mu : partitions_of(d))
        CHECK(hall_inner(SymFunc::h(lam), SymFunc::m(mu)) == (lam == mu ? 1 : 0));
  // Schur orthonormality at degree 4
  for (const auto& lam : partitions_of(4))
    for (const auto& mu : partitions_of(4))
      CHECK(hall_inner(SymFunc::s(lam), SymFunc::s(mu)) == (lam == mu ? 1 : 0));
  // omega is an isometry on basis pairs
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (const auto& mu : partitions_of(d))
        CHECK(hall_inner(omega(SymFunc::h(lam)), omega(SymFunc::s(mu))) ==
              hall_inner(SymFunc::h(lam), SymFunc::s(mu)));
}

TEST_CASE("character chi", "[symfunc]") {
  CHECK(character_chi(SymFunc::h(Partition{3, 1})) == 1);
  CHECK(character_chi(SymFunc::e(Partition{2})) == 0);
  CHECK(character_chi(SymFunc::s(Partition{2, 1})) == 0);
  CHECK(character_chi(SymFunc::unit()) == 1);
  // ring morphism on basis pairs
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (const auto& mu : partitions_of(6 - d)) {
        SymFunc a = SymFunc::s(lam), b = SymFunc::e(mu);
        CHECK(character_chi(a * b) == character_chi(a) * character_chi(b));
      }
}

TEST_CASE("primitive space has rank one spanned by the power sum", "[symfunc]") {
  CHECK_THROWS_AS(primitive_basis(0), std::invalid_argument);
  for (int d = 1; d <= 8; ++d) {
    auto basis = primitive_basis(d);
    REQUIRE(basis.size() == 1);
    // the span contains p_d: proportional with a nonzero ratio
    SymFunc pd = SymFunc::p(Partition{d});
    const auto& v = basis[0].h_terms();
    REQUIRE(!v.empty());
    Rational ratio = pd.h_terms().at(v.begin()->first) / v.begin()->second;
    CHECK(ratio != 0);
    CHECK(ratio * basis[0] == pd);
  }
}

TEST_CASE("subalgebra ranks", "[symfunc]") {
  CHECK(subalgebra_rank({1, 2}, 3) == 2);
  CHECK(subalgebra_rank({1, 3, 5, 7}, 4) == 2);
  CHECK(subalgebra_rank({2, 3}, 0) == 1);
  CHECK(subalgebra_rank({}, 0) == 1);
  CHECK(subalgebra_rank({}, 3) == 0);
  CHECK_THROWS_AS(subalgebra_rank({0}, 2), std::invalid_argument);
  // matches the count of bounded partitions
  for (int k = 1; k <= 5; ++k)
    for (int d = 0; d <= 8; ++d) {
      std::vector<int> degs(k);
      std::iota(degs.begin(), degs.end(), 1);
      CHECK(subalgebra_rank(degs, d) == static_cast<long long>(partitions_of(d, k).size()));
    }
}

TEST_CASE("power sum coefficient of e_j and the fractionality argument", "[symfunc]") {
  for (int j = 2; j <= 8; ++j) {
    auto ep = SymFunc::e(Partition{j}).to_basis(Basis::P);
    Rational coeff = ep.terms.at(Partition{j});
    CHECK(abs(coeff) == Rational(1, j));
    // the computed sign: (-1)^(j-1)
    CHECK(coeff == Rational(j % 2 == 0 ? -1 : 1, j));
  }
  for (int j = 3; j <= 8; ++j) {
    SymFunc pj = SymFunc::p(Partition{j});
    for (int sign : {1, -1}) {
      SymFunc g = SymFunc::e(Partition{j}) + Rational(2 * sign, j) * pj;
      CHECK_FALSE(g.to_basis(Basis::M).integral);
    }
  }
}
