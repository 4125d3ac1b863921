#include "doctest.h"

#include "iasgl/ground_set.hpp"
#include "oracles.hpp"

using namespace iasgl;

TEST_CASE("subset masks follow element order") {
  GroundSet x(IntegerSet{0, 1, 3});
  CHECK(x.n() == 3);
  CHECK(x.full_mask() == 7);
  CHECK(x.subset(GroundSet::zero_mask()) == IntegerSet{0});
  CHECK(x.subset(6) == IntegerSet{1, 3});
  CHECK(x.mask_of({0, 3}) == SubsetMask{5});
  CHECK_FALSE(x.mask_of({2}).has_value());
  CHECK(x.index_of(3) == 2);
  CHECK(x.index_of(2) == -1);
}

TEST_CASE("sum_mask agrees with sumset") {
  for (IntegerSet base : {IntegerSet{0, 1, 2, 3}, IntegerSet{0, 2, 5, 7}, IntegerSet{0, 1, 100000, 100001}}) {
    GroundSet x(base);
    for (SubsetMask a = 1; a <= x.full_mask(); ++a)
      for (SubsetMask b = 1; b <= x.full_mask(); ++b) {
        IntegerSet s = sumset(x.subset(a), x.subset(b));
        auto m = x.sum_mask(a, b);
        if (s.is_subset_of(base)) {
          REQUIRE(m.has_value());
          CHECK(x.subset(*m) == s);
        } else {
          CHECK_FALSE(m.has_value());
        }
      }
  }
}

TEST_CASE("enumeration of non-empty subsets") {
  GroundSet x(IntegerSet{0, 1, 2});
  auto subs = enumerate_nonempty_subsets(x);
  CHECK(subs.size() == 7);
  CHECK(subs.front() == IntegerSet{0});
  CHECK(subs.back() == IntegerSet{0, 1, 2});
  CHECK(enumerate_nonempty_subsets(GroundSet(IntegerSet{5})).size() == 1);

  std::vector<Element> big(21);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = i;
  CHECK_THROWS_WITH_AS(enumerate_nonempty_subsets(GroundSet(IntegerSet(big))), "ground set too large", Error);
}

TEST_CASE("ground set construction limits") {
  CHECK_THROWS_AS(GroundSet(IntegerSet{}), Error);
  std::vector<Element> v(32);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  CHECK_THROWS_AS(GroundSet(IntegerSet(v)), Error);
}

TEST_CASE("canonicalization divides by the gcd") {
  CHECK(canonicalize_ground_set(GroundSet(IntegerSet{0, 2, 4, 6})).base() == IntegerSet{0, 1, 2, 3});
  CHECK(canonicalize_ground_set(GroundSet(IntegerSet{0, 3})).base() == IntegerSet{0, 1});
  CHECK(is_canonical(GroundSet(IntegerSet{0, 2, 3})));
  CHECK_FALSE(is_canonical(GroundSet(IntegerSet{0, 2, 4})));
  CHECK_THROWS_WITH_AS(canonicalize_ground_set(GroundSet(IntegerSet{1, 2})), "graceful ground set must contain 0",
                       Error);
  CHECK_THROWS_AS(canonicalize_ground_set(GroundSet(IntegerSet{0})), Error);
}

TEST_CASE("canonical families match the oracle") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (Element max : {Element{4}, Element{8}, Element{10}}) {
      auto lib = canonical_ground_sets(n, max);
      auto ref = oracle::canonical_sets(n, max);
      REQUIRE(lib.size() == ref.size());
      for (std::size_t i = 0; i < lib.size(); ++i) {
        std::vector<Element> e(lib[i].base().begin(), lib[i].base().end());
        CHECK(e == std::vector<Element>(ref[i].begin(), ref[i].end()));
      }
    }
  CHECK(canonical_ground_sets(2, 8).size() == 1);
}
