#include <doctest.h>

#include <set>

#include "qba/bitvector.hpp"
#include "qba/error.hpp"
#include "qba/subset.hpp"

using namespace qba;

TEST_CASE("subset encoding puts element i in bit i-1") {
  const Subset a = subset_from({1, 3});
  CHECK(a.bits == 0b101u);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  CHECK(a.size() == 2);
  CHECK(elements(a) == std::vector<unsigned>{1, 3});
  CHECK(Subset::full(3).bits == 7u);
  CHECK(a.complement(3) == Subset::singleton(2));
}

TEST_CASE("set operations") {
  const Subset a = subset_from({1, 2}), b = subset_from({2, 3});
  CHECK((a ^ b) == subset_from({1, 3}));
  CHECK((a & b) == subset_from({2}));
  CHECK((a | b) == subset_from({1, 2, 3}));
  CHECK((a - b) == subset_from({1}));
  CHECK(subset_from({2}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(odd_parity(subset_from({1, 2, 3})));
  CHECK_FALSE(odd_parity(Subset{}));
}

TEST_CASE("subset and superset enumeration visit each set once") {
  const Subset s = subset_from({1, 3, 4});
  std::set<std::uint32_t> seen;
  for_each_subset_of(s, [&](Subset t) {
    CHECK(t.subset_of(s));
    seen.insert(t.bits);
  });
  CHECK(seen.size() == 8);

  seen.clear();
  for_each_superset_of(subset_from({2}), 4, [&](Subset t) {
    CHECK(subset_from({2}).subset_of(t));
    seen.insert(t.bits);
  });
  CHECK(seen.size() == 8);

  int count = 0;
  for_each_subset_of(Subset{}, [&](Subset) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("set literals") {
  CHECK(to_string(Subset{}) == "{}");
  CHECK(to_string(subset_from({1, 3})) == "{1,3}");
  CHECK(parse_subset("{1,3}") == subset_from({1, 3}));
  CHECK(parse_subset(" { 2 , 1 } ") == subset_from({1, 2}));
  CHECK(parse_subset("{}") == Subset{});
  CHECK_THROWS_AS(parse_subset("{1,"), ParseError);
  CHECK_THROWS_AS(parse_subset("{0}"), Error);
  CHECK_THROWS_AS(parse_subset("1,2"), ParseError);
}

TEST_CASE("dimension checks") {
  CHECK_NOTHROW(check_dim(1));
  CHECK_NOTHROW(check_dim(kMaxDim));
  CHECK_THROWS_AS(check_dim(0), DimensionError);
  CHECK_THROWS_AS(check_dim(kMaxDim + 1), DimensionError);
  CHECK_THROWS_AS(check_subset(subset_from({3}), 2), DimensionError);
}

TEST_CASE("bit vectors") {
  BitVector v(130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  CHECK(v.count() == 3);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(65) == 129);
  CHECK(v.find_next(130) == 130);
  BitVector w(130);
  w.set(64, true);
  CHECK(v.dot(w));
  w ^= v;
  CHECK(w.count() == 2);
  w &= v;
  CHECK(w.count() == 2);
  CHECK_THROWS_AS(w ^= BitVector(3), ShapeError);
  CHECK_FALSE(BitVector(10).any());
}
