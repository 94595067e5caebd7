#include "doctest.h"
#include "taquin/partition.hpp"

using namespace taquin;

TEST_CASE("partition basics and normalization") {
  Partition p{3, 1};
  CHECK(p.size() == 4);
  CHECK(p.length() == 2);
  CHECK(p.part(0) == 3);
  CHECK(p.part(5) == 0);
  CHECK(Partition{3, 1, 0, 0} == p);
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("canonical order is by size then lexicographic") {
  CHECK(Partition{} < Partition{1});
  CHECK(Partition{1, 1} < Partition{2});
  CHECK(Partition{2} < Partition{1, 1, 1});
  CHECK(Partition{2, 1} < Partition{3});
  CHECK(Partition{1, 1, 1} < Partition{2, 1});
}

TEST_CASE("containment and box operations") {
  Partition mu{3, 2}, lambda{2, 1};
  CHECK(contains(mu, lambda));
  CHECK(!contains(lambda, mu));
  CHECK(contains(mu, mu));
  CHECK(mu.contains_box(Box{1, 1}));
  CHECK(!mu.contains_box(Box{1, 2}));
  CHECK(lambda.is_addable(Box{0, 2}));
  CHECK(lambda.is_addable(Box{1, 1}));
  CHECK(lambda.is_addable(Box{2, 0}));
  CHECK(!lambda.is_addable(Box{1, 2}));
  CHECK(lambda.with_box(Box{2, 0}) == Partition{2, 1, 1});
  CHECK(single_box_difference(Partition{2, 2}, Partition{2, 1}) == Box{1, 1});
  CHECK(single_box_difference(Partition{3, 1}, Partition{2, 1}) == Box{0, 2});
  // Reversed arguments and multi-box gaps are rejected.
  CHECK_THROWS_AS(single_box_difference(Partition{2, 1}, Partition{2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(single_box_difference(Partition{3, 2}, Partition{2, 1}),
                  std::invalid_argument);
}

TEST_CASE("box adjacency") {
  CHECK(boxes_adjacent(Box{0, 0}, Box{0, 1}));
  CHECK(boxes_adjacent(Box{2, 1}, Box{1, 1}));
  CHECK(!boxes_adjacent(Box{0, 0}, Box{1, 1}));
  CHECK(!boxes_adjacent(Box{0, 0}, Box{0, 2}));
}

TEST_CASE("complement in a rectangle") {
  Rectangle r23(2, 3);
  CHECK(complement(Partition{}, r23) == Partition{3, 3});
  CHECK(complement(Partition{3, 3}, r23) == Partition{});
  CHECK(complement(Partition{2}, r23) == Partition{3, 1});
  // Self-complementary shape.
  CHECK(complement(Partition{3, 1}, Rectangle(2, 4)) == Partition{3, 1});
  CHECK_THROWS_AS(complement(Partition{4}, r23), std::invalid_argument);

  Rectangle r35(3, 5);
  for (const Partition& p : enumerate_partitions(r35)) {
    Partition c = complement(p, r35);
    CHECK(complement(c, r35) == p);
    CHECK(p.size() + c.size() == r35.area());
  }
}

TEST_CASE("one box extensions come in row order") {
  auto ext = one_box_extensions(Partition{2, 1}, Partition{3, 3, 3});
  REQUIRE(ext.size() == 3);
  CHECK(ext[0] == Partition{3, 1});
  CHECK(ext[1] == Partition{2, 2});
  CHECK(ext[2] == Partition{2, 1, 1});

  // The bound cuts off rows.
  auto capped = one_box_extensions(Partition{2, 1}, Partition{2, 2});
  REQUIRE(capped.size() == 1);
  CHECK(capped[0] == Partition{2, 2});
}

TEST_CASE("enumerate_partitions counts binomials and is sorted") {
  CHECK(enumerate_partitions(Rectangle(2, 2)).size() == 6);
  auto p34 = enumerate_partitions(Rectangle(3, 4));
  CHECK(p34.size() == 35);  // binomial(7,3)
  CHECK(std::is_sorted(p34.begin(), p34.end()));
  CHECK(std::adjacent_find(p34.begin(), p34.end()) == p34.end());
  for (const Partition& p : p34) CHECK(p.fits_in(Rectangle(3, 4)));
}

TEST_CASE("skew shapes") {
  SkewShape s(Partition{1}, Partition{2, 2});
  CHECK(s.size() == 3);
  auto boxes = s.boxes();
  REQUIRE(boxes.size() == 3);
  CHECK(boxes[0] == Box{0, 1});
  CHECK(boxes[1] == Box{1, 0});
  CHECK(boxes[2] == Box{1, 1});
  CHECK_THROWS_AS(SkewShape(Partition{3}, Partition{2, 2}),
                  std::invalid_argument);

  CHECK(SkewShape(Partition{1}, Partition{3, 1}).is_horizontal_strip());
  CHECK(!SkewShape(Partition{1}, Partition{2, 2}).is_horizontal_strip());
  CHECK(SkewShape(Partition{}, Partition{4}).is_horizontal_strip());
  CHECK(SkewShape(Partition{2, 1}, Partition{2, 1}).is_horizontal_strip());
}

TEST_CASE("rectangle partition") {
  CHECK(rectangle_partition(Rectangle(3, 2)) == Partition{2, 2, 2});
  CHECK_THROWS_AS(Rectangle(0, 2), std::invalid_argument);
}
