#include <catch2/catch_amalgamated.hpp>

#include "schurpos/partition.hpp"

using namespace schurpos;

TEST_CASE("partition validation and accessors", "[partition]") {
  Partition lam{3, 1};
  CHECK(lam.size() == 4);
  CHECK(lam.length() == 2);
  CHECK(lam.part(1) == 3);
  CHECK(lam.part(5) == 0);
  CHECK(Partition{}.size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({3, 1}).to_string() == "[3,1]");
  CHECK(Partition{}.to_string() == "[]");
}

TEST_CASE("canonical order is by size then largest-first lex", "[partition]") {
  std::vector<Partition> expected{{3}, {2, 1}, {1, 1, 1}};
  auto got = partitions_of(3);
  CHECK(got == expected);
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(Partition{} < Partition{1});
  CHECK(Partition{4} < Partition{3, 1});
  CHECK(Partition{2, 2} < Partition{2, 1, 1});
}

TEST_CASE("conjugate", "[partition]") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (const auto& lam : partitions_of(7)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance comparison", "[partition]") {
  CHECK(dominance_leq(Partition{1, 1}, Partition{2}) == Dominance::less_or_equal);
  CHECK(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}) == Dominance::incomparable);
  CHECK(dominance_leq(Partition{2, 1}, Partition{2, 1}) == Dominance::less_or_equal);
  CHECK(dominance_leq(Partition{3}, Partition{2, 1}) == Dominance::greater);
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("canonical order refines dominance downward", "[partition]") {
  for (int n = 1; n <= 8; ++n) {
    auto all = partitions_of(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK(dominance_leq(all[i], all[j]) != Dominance::less_or_equal);
  }
}

TEST_CASE("partition enumeration filters", "[partition]") {
  CHECK(partitions_of(4, 2) == std::vector<Partition>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(4, std::nullopt, true) == std::vector<Partition>{{4}, {3, 1}});
  CHECK(partitions_of(4, std::nullopt, false, true) ==
        std::vector<Partition>{{3, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
  // strict partition counts of 1..8
  std::vector<int> strict_counts;
  for (int n = 1; n <= 8; ++n)
    strict_counts.push_back(static_cast<int>(partitions_of(n, std::nullopt, true).size()));
  CHECK(strict_counts == std::vector<int>{1, 1, 2, 2, 3, 4, 5, 6});
}

TEST_CASE("hook lengths", "[partition]") {
  CHECK(hook_length(Partition{2}, 1, 1) == 2);
  CHECK(hook_length(Partition{2, 1, 1}, 1, 1) == 4);
  CHECK(hook_length(Partition{3, 1}, 1, 2) == 2);
  CHECK_THROWS_AS(hook_length(Partition{2}, 2, 1), std::invalid_argument);
}

TEST_CASE("core predicate", "[partition]") {
  CHECK(is_core(Partition{2}, 3));
  CHECK_FALSE(is_core(Partition{1, 1, 1}, 3));
  CHECK(is_core(Partition{}, 2));
  CHECK(is_core(Partition{}, 17));
  CHECK_THROWS_AS(is_core(Partition{1}, 1), std::invalid_argument);
}

TEST_CASE("strict partitions and compositions", "[partition]") {
  CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
  CHECK(StrictPartition({3, 1}).partition() == Partition{3, 1});
  Composition alpha{1, 2};
  CHECK(alpha.size() == 3);
  CHECK(alpha.sorted() == Partition{2, 1});
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
  auto comps = compositions_of(3);
  CHECK(comps == std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(compositions_of(5).size() == 16);
}
