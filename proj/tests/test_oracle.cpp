#include <catch2/catch_amalgamated.hpp>

#include "schurpos/oracle.hpp"

using namespace schurpos;

namespace {
std::vector<int> exps(std::vector<int> v) { return v; }
}  // namespace

TEST_CASE("generator expansions in two variables", "[oracle]") {
  VarPoly h2 = expand_basis_element(Basis::H, Partition{2}, 2);
  VarPoly expect(2);
  expect.add(exps({2, 0}), 1);
  expect.add(exps({1, 1}), 1);
  expect.add(exps({0, 2}), 1);
  CHECK(h2 == expect);

  VarPoly e2 = expand_basis_element(Basis::E, Partition{2}, 2);
  VarPoly x1x2(2);
  x1x2.add(exps({1, 1}), 1);
  CHECK(e2 == x1x2);

  CHECK(expand_basis_element(Basis::S, Partition{1, 1}, 2) == x1x2);

  VarPoly p2 = expand_basis_element(Basis::P, Partition{2}, 2);
  VarPoly squares(2);
  squares.add(exps({2, 0}), 1);
  squares.add(exps({0, 2}), 1);
  CHECK(p2 == squares);
}

TEST_CASE("oracle argument checks", "[oracle]") {
  CHECK_THROWS_AS(monomial_eval_oracle(Basis::H, {{Partition{3}, Rational(1)}}, 2),
                  std::invalid_argument);
  CHECK(monomial_eval_oracle(SymFunc::unit(), 1) == VarPoly::constant(1, 1));
}

TEST_CASE("all five bases agree with the oracle through conversions", "[oracle]") {
  const int nvars = 7;
  for (Basis b : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S}) {
    for (int d = 0; d <= 6; ++d)
      for (const auto& lam : partitions_of(d)) {
        VarPoly direct = expand_basis_element(b, lam, nvars);
        // convert to the monomial basis through h, then expand monomials
        SymFunc f = SymFunc::from_basis(b, {{lam, Rational(1)}});
        auto mexp = f.to_basis(Basis::M);
        VarPoly via = monomial_eval_oracle(Basis::M, mexp.terms, nvars);
        CHECK(direct == via);
      }
  }
}

TEST_CASE("oracle respects products", "[oracle]") {
  SymFunc a = SymFunc::s(Partition{2, 1});
  SymFunc b = SymFunc::e(Partition{2});
  VarPoly pa = monomial_eval_oracle(Basis::M, a.to_basis(Basis::M).terms, 6);
  VarPoly pb = monomial_eval_oracle(Basis::M, b.to_basis(Basis::M).terms, 6);
  VarPoly pab = monomial_eval_oracle(Basis::M, (a * b).to_basis(Basis::M).terms, 6);
  CHECK(pa * pb == pab);
}
