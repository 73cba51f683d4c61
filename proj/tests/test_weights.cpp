#include <doctest.h>

#include "supercup/weights.hpp"
#include "testutil.hpp"

using namespace supercup;
using testutil::Rng;

namespace {

SuperWeight w(int m, int n, std::vector<Int> top, std::vector<Int> bottom) {
  return SuperWeight(m, n, std::move(top), std::move(bottom));
}

}  // namespace

TEST_CASE("weight_to_diagram on the standard examples") {
  SUBCASE("Ber_{2|2}") {
    WeightDiagram d = weight_to_diagram(w(2, 2, {1, 1}, {-1, -1}));
    CHECK(d.vees == std::set<Int>{0, 1});
    CHECK(d.crosses.empty());
    CHECK(d.circles.empty());
  }
  SUBCASE("trivial of GL(2|1)") {
    WeightDiagram d = weight_to_diagram(w(2, 1, {0, 0}, {0}));
    CHECK(d.vees == std::set<Int>{-1});
    CHECK(d.crosses == std::set<Int>{0});
    CHECK(d.circles.empty());
  }
  SUBCASE("L(0,0,0,-5 | 5,0) of GL(4|2), crosses at -1 and 0") {
    WeightDiagram d = weight_to_diagram(w(4, 2, {0, 0, 0, -5}, {5, 0}));
    CHECK(d.vees == std::set<Int>{-8, -2});
    CHECK(d.crosses == std::set<Int>{-1, 0});
    CHECK(d.circles.empty());
  }
}

TEST_CASE("diagram_to_weight inverts weight_to_diagram") {
  CHECK(diagram_to_weight(WeightDiagram({0, 1}, {}, {}, 2, 2)) == w(2, 2, {1, 1}, {-1, -1}));
  CHECK(diagram_to_weight(WeightDiagram({-1}, {0}, {}, 2, 1)) == w(2, 1, {0, 0}, {0}));

  Rng rng(20240901);
  for (int trial = 0; trial < 400; ++trial) {
    int m = static_cast<int>(testutil::pick(rng, 0, 5));
    int n = static_cast<int>(testutil::pick(rng, 0, 5));
    SuperWeight x = testutil::random_weight(rng, m, n);
    CHECK(diagram_to_weight(weight_to_diagram(x)) == x);
  }
}

TEST_CASE("diagram invariants |vees|+|crosses| = m, |vees|+|circles| = n") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    SuperWeight x = testutil::random_weight(rng, 4, 3);
    WeightDiagram d = weight_to_diagram(x);
    CHECK(d.vees.size() + d.crosses.size() == 4);
    CHECK(d.vees.size() + d.circles.size() == 3);
  }
}

TEST_CASE("atypicality") {
  CHECK(atypicality(w(2, 2, {1, 1}, {-1, -1})) == 2);
  CHECK(atypicality(w(4, 2, {0, 0, 0, -5}, {5, 0})) == 2);
  CHECK(is_maximal_atypical(w(4, 2, {0, 0, 0, -5}, {5, 0})));
  // disjoint index sets: typical
  CHECK(atypicality(w(1, 1, {1}, {0})) == 0);

  SUBCASE("invariant under Berezin twists: the diagram translates by one") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      SuperWeight x = testutil::random_weight(rng, 3, 2);
      std::vector<Int> top = x.top, bottom = x.bottom;
      for (Int& t : top) ++t;
      for (Int& b : bottom) --b;
      SuperWeight y(3, 2, top, bottom);
      CHECK(atypicality(y) == atypicality(x));
      WeightDiagram dx = weight_to_diagram(x), dy = weight_to_diagram(y);
      std::set<Int> shifted;
      for (Int v : dx.vees) shifted.insert(v + 1);
      CHECK(dy.vees == shifted);
    }
  }
}

TEST_CASE("parity") {
  CHECK(parity(w(1, 1, {1}, {-1})) == 1);   // Ber_{1|1}
  CHECK(parity(w(3, 2, {0, 0, 0}, {0, 0})) == 0);
  CHECK(parity(w(4, 2, {0, 0, 0, -5}, {5, 0})) == 1);
}

TEST_CASE("block label and classical core") {
  CHECK(classical_core_weight(BlockLabel{{0}, {}}, 1) == ClassicalWeight({0}));

  SUBCASE("the GL(6|3) splice example has core (3,2,1)") {
    BlockLabel b = block_label(w(6, 3, {3, 2, 1, -2, -3, -4}, {4, 3, 2}));
    CHECK(classical_core_weight(b, 3) == ClassicalWeight({3, 2, 1}));
  }
  SUBCASE("round trip on stable weights: core = leading top entries") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 3));
      int m = n + static_cast<int>(testutil::pick(rng, 1, 3));
      SuperWeight x = testutil::random_stable(rng, m, n);
      ClassicalWeight core = classical_core_weight(block_label(x), m - n);
      CHECK(core.entries == std::vector<Int>(x.top.begin(), x.top.begin() + (m - n)));
    }
  }
  SUBCASE("circles forbid core extraction") {
    CHECK_THROWS_AS(classical_core_weight(BlockLabel{{0}, {5}}, 1), ValidationError);
  }
}

TEST_CASE("stability") {
  CHECK(is_stable(w(6, 3, {3, 2, 1, -2, -3, -4}, {4, 3, 2})));
  CHECK(is_negatively_stable(w(6, 3, {3, 2, 1, -2, -3, -4}, {4, 3, 2})));
  CHECK(is_stable(w(2, 1, {0, 0}, {0})));
  CHECK(is_negatively_stable(w(2, 1, {0, 0}, {0})));

  SUBCASE("diagram test agrees with the coordinate characterization") {
    // stable iff w = (lambda_1..lambda_r, mu | -mu)
    CHECK(is_stable(w(2, 1, {1, 0}, {0})));
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 3));
      int m = n + static_cast<int>(testutil::pick(rng, 0, 3));
      SuperWeight x = testutil::random_max_atypical(rng, m, n);
      std::vector<Int> mu(x.top.begin() + (m - n), x.top.end());
      std::vector<Int> neg(mu.rbegin(), mu.rend());
      for (Int& e : neg) e = -e;
      CHECK(is_stable(x) == (x.bottom == neg));
      if (is_stable(x)) CHECK(is_negatively_stable(x) == (mu[0] <= 0));
    }
  }
  SUBCASE("non-maximal-atypical input is rejected") {
    CHECK_THROWS_AS(is_stable(w(1, 1, {1}, {0})), ValidationError);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(w(2, 2, {0, 1}, {0, 0}), ValidationError);
  CHECK_THROWS_AS(w(2, 1, {0, 0}, {}), ValidationError);
  CHECK_THROWS_AS(WeightDiagram({0}, {0}, {}, 2, 1), ValidationError);
  CHECK_THROWS_AS(WeightDiagram({0}, {1}, {}, 3, 1), ValidationError);
}
