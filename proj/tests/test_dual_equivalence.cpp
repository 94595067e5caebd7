#include "doctest.h"
#include "taquin/dual_equivalence.hpp"
#include "taquin/ktheory.hpp"

using namespace taquin;

namespace {

std::vector<DEChain> chain_set(const Rectangle& rect,
                               const std::vector<Partition>& types) {
  return enumerate_chains(Partition{}, rectangle_partition(rect), types);
}

}  // namespace

TEST_CASE("canonical class of the two tableaux of shape (2,2)/(1)") {
  SkewTableau a({Partition{1}, Partition{1, 1}, Partition{2, 1},
                 Partition{2, 2}});
  SkewTableau b({Partition{1}, Partition{2}, Partition{2, 1},
                 Partition{2, 2}});
  DualClass da = canonical_class(a), db = canonical_class(b);
  CHECK(da == db);
  CHECK(da.rectification_shape == Partition{2, 1});
  CHECK(da.representative == a);
  CHECK(dual_equivalent(a, b));
}

TEST_CASE("canonical_class is idempotent and shape-preserving") {
  for (const Partition& inner : enumerate_partitions(Rectangle(2, 2)))
    for (const Partition& outer : enumerate_partitions(Rectangle(3, 3))) {
      if (!contains(outer, inner) || outer.size() - inner.size() > 5) continue;
      for (const SkewTableau& t :
           enumerate_standard(SkewShape(inner, outer))) {
        DualClass d = canonical_class(t);
        CHECK(d.inner() == inner);
        CHECK(d.outer() == outer);
        CHECK(d.rectification_shape == rectification_shape(t));
        CHECK(canonical_class(d.representative) == d);
        CHECK(rectify(d.representative).first ==
              superstandard(d.rectification_shape));
      }
    }
}

TEST_CASE("straight shapes have a single class") {
  for (const Partition& lambda : enumerate_partitions(Rectangle(3, 3))) {
    auto all = enumerate_standard(SkewShape(Partition{}, lambda));
    for (const SkewTableau& t : all)
      CHECK(canonical_class(t) == straight_class(lambda));
  }
}

TEST_CASE("class counts match the lattice-word rule") {
  // All skew shapes in a 2x3 rectangle, all rectification shapes.
  Partition bound{3, 3};
  auto partitions = enumerate_partitions(Rectangle(2, 3));
  for (const Partition& inner : partitions)
    for (const Partition& outer : partitions) {
      if (!contains(outer, inner)) continue;
      SkewShape shape(inner, outer);
      for (const Partition& lambda : partitions) {
        if (lambda.size() != shape.size()) continue;
        CHECK(classes_of_shape(shape, lambda).size() ==
              static_cast<std::size_t>(
                  lr_coeff_lattice(inner, lambda, outer)));
      }
    }
}

TEST_CASE("shuffle_classes swaps rectification shapes") {
  DualClass d1 = straight_class(Partition{1});
  auto cls = classes_of_shape(SkewShape(Partition{1}, Partition{2, 1}),
                              Partition{2});
  REQUIRE(cls.size() == 1);
  auto [a, b] = shuffle_classes(d1, cls[0]);
  CHECK(a.rectification_shape == Partition{2});
  CHECK(b.rectification_shape == Partition{1});
  CHECK(a.inner() == Partition{});
  CHECK(b.outer() == Partition{2, 1});
  auto [c, d] = shuffle_classes(a, b);
  CHECK(c == d1);
  CHECK(d == cls[0]);
}

TEST_CASE("chain enumeration sizes") {
  // Single type: the class count of the shape.
  CHECK(enumerate_chains(Partition{1}, Partition{2, 2}, {Partition{2, 1}})
            .size() == 1);
  CHECK(enumerate_chains(Partition{1}, Partition{2, 2}, {Partition{3}})
            .size() == 0);
  // All boxes: standard tableaux.
  std::vector<Partition> boxes4(4, Partition{1});
  CHECK(chain_set(Rectangle(2, 2), boxes4).size() == 2);
  // Size obstruction: empty, not an error.
  CHECK(enumerate_chains(Partition{}, Partition{2, 2}, {Partition{3}})
            .empty());
  CHECK(enumerate_chains(Partition{2}, Partition{1}, {Partition{1}})
            .empty());
  // Convolution against the lattice oracle.
  std::vector<Partition> types{Partition{2}, Partition{2}, Partition{2}};
  CHECK(enumerate_chains(Partition{}, Partition{3, 3}, types).size() ==
        static_cast<std::size_t>(
            lr_coeff_lattice_multi(Partition{}, types, Partition{3, 3})));
  CHECK(lr_coeff_lattice_multi(Partition{}, types, Partition{3, 3}) == 1);
}

TEST_CASE("chain type and linkage") {
  std::vector<Partition> types{Partition{2}, Partition{1, 1}, Partition{2}};
  for (const DEChain& chain : chain_set(Rectangle(2, 3), types)) {
    CHECK(chain.type() == types);
    CHECK(chain.inner() == Partition{});
    CHECK(chain.outer() == Partition{3, 3});
    for (int i = 1; i < chain.length(); ++i)
      CHECK(chain.classes()[i].inner() == chain.classes()[i - 1].outer());
  }
}

TEST_CASE("sh is an involution that fixes other positions") {
  std::vector<Partition> types{Partition{2}, Partition{2}, Partition{1},
                               Partition{1}};
  auto set = chain_set(Rectangle(2, 3), types);
  CHECK(!set.empty());
  for (const DEChain& chain : set) {
    for (int i = 1; i < chain.length(); ++i) {
      DEChain moved = sh(chain, i);
      CHECK(sh(moved, i) == chain);
      for (int j = 0; j < chain.length(); ++j)
        if (j != i - 1 && j != i)
          CHECK(moved.classes()[j] == chain.classes()[j]);
    }
  }
}

TEST_CASE("sh is Bender-Knuth on all-box chains") {
  std::vector<Partition> boxes(6, Partition{1});
  auto set = chain_set(Rectangle(2, 3), boxes);
  REQUIRE(set.size() == 5);
  for (const DEChain& chain : set) {
    // A chain of single boxes is a standard tableau.
    std::vector<Partition> shapes{chain.inner()};
    for (const DualClass& d : chain.classes()) shapes.push_back(d.outer());
    SkewTableau t(shapes);
    for (int i = 1; i < chain.length(); ++i) {
      DEChain moved = sh(chain, i);
      std::vector<Partition> moved_shapes{Partition{}};
      for (const DualClass& d : moved.classes())
        moved_shapes.push_back(d.outer());
      CHECK(SkewTableau(moved_shapes) == bender_knuth(t, i));
      CHECK(esh(chain, i) == chain);  // esh is trivial on single boxes
    }
  }
}

TEST_CASE("ev is an involution and ev_r reverses rotated classes") {
  Rectangle rect(2, 3);
  std::vector<Partition> types{Partition{2}, Partition{2}, Partition{2}};
  auto set = chain_set(rect, types);
  CHECK(!set.empty());
  for (const DEChain& chain : set) {
    CHECK(ev(chain, 1) == chain);
    for (int i = 2; i <= chain.length(); ++i)
      CHECK(ev(ev(chain, i), i) == chain);
    // Full evacuation: rotate every class and reverse their order.
    std::vector<DualClass> rotated;
    for (auto it = chain.classes().rbegin(); it != chain.classes().rend(); ++it)
      rotated.push_back(rotate_class(*it, rect));
    CHECK(ev(chain, chain.length()) == DEChain(Partition{}, rotated));
  }
}

TEST_CASE("esh agrees with its evacuation-conjugation definition") {
  Rectangle rect(2, 3);
  for (const std::vector<Partition>& types :
       {std::vector<Partition>{Partition{2}, Partition{2}, Partition{2}},
        std::vector<Partition>{Partition{2, 1}, Partition{2}, Partition{1}},
        std::vector<Partition>{Partition{1}, Partition{2, 2}, Partition{1}},
        std::vector<Partition>{Partition{2}, Partition{1}, Partition{1},
                               Partition{2}}}) {
    auto set = chain_set(rect, types);
    CHECK(!set.empty());
    for (const DEChain& chain : set)
      for (int i = 1; i < chain.length(); ++i) {
        DEChain local = esh(chain, i);
        CHECK(local == esh_by_evacuation(chain, i));
        CHECK(esh(local, i) == chain);
        for (int j = 0; j < chain.length(); ++j)
          if (j != i - 1 && j != i)
            CHECK(local.classes()[j] == chain.classes()[j]);
      }
  }
}

TEST_CASE("esh_1 equals sh_1") {
  Rectangle rect(3, 3);
  std::vector<Partition> types{Partition{2, 1}, Partition{2, 1},
                               Partition{2, 1}};
  auto set = chain_set(rect, types);
  CHECK(!set.empty());
  for (const DEChain& chain : set) CHECK(esh(chain, 1) == sh(chain, 1));
}

TEST_CASE("sh and esh commute at distance at least two") {
  Rectangle rect(2, 4);
  std::vector<Partition> types{Partition{2}, Partition{2}, Partition{2},
                               Partition{2}};
  auto set = chain_set(rect, types);
  CHECK(!set.empty());
  for (const DEChain& chain : set)
    for (int i = 1; i < chain.length(); ++i)
      for (int j = i + 2; j < chain.length(); ++j) {
        CHECK(sh(sh(chain, i), j) == sh(sh(chain, j), i));
        CHECK(esh(sh(chain, i), j) == sh(esh(chain, j), i));
        CHECK(esh(esh(chain, i), j) == esh(esh(chain, j), i));
      }
}

TEST_CASE("esh requires a chain starting at the empty shape") {
  auto set = enumerate_chains(Partition{1}, Partition{2, 2},
                              {Partition{1}, Partition{2}});
  REQUIRE(!set.empty());
  CHECK_THROWS_AS(esh(set[0], 1), std::invalid_argument);
  CHECK_NOTHROW(sh(set[0], 1));
}

TEST_CASE("decgd symmetries hold and rows shuffle down") {
  Rectangle rect(2, 3);
  std::vector<Partition> types{Partition{2}, Partition{2}, Partition{2}};
  for (const DEChain& seed : chain_set(rect, types)) {
    DualCylindricalGrowthDiagram decgd(seed, rect);  // self-checks
    CHECK(decgd.row(0) == seed);
    int r = decgd.period();
    for (int jj = 0; jj < r; ++jj) {
      // sh_{r-1} ... sh_1 of a row reproduces the next row except that its
      // final entry is the vertical class, not the forced horizontal one.
      DEChain pushed = decgd.row(jj);
      for (int t = 1; t <= r - 1; ++t) pushed = sh(pushed, t);
      for (int t = 0; t < r - 1; ++t)
        CHECK(pushed.classes()[t] == decgd.hrow(jj + 1, t));
      CHECK(pushed.classes()[r - 1] == decgd.vcol(jj + 1, r - 1));
    }
  }
}

TEST_CASE("decgd superdiagonal reads off the type") {
  Rectangle rect(3, 3);
  std::vector<Partition> types{Partition{2, 1}, Partition{2, 1},
                               Partition{2, 1}};
  auto set = chain_set(rect, types);
  CHECK(!set.empty());
  for (const DEChain& seed : set) {
    DualCylindricalGrowthDiagram decgd(seed, rect);
    for (int jj = 0; jj < decgd.period(); ++jj)
      CHECK(decgd.vertex(jj, 1) == types[jj]);
  }
}
