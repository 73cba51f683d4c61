#include <doctest.h>

#include "supercup/fusion.hpp"
#include "testutil.hpp"

using namespace supercup;
using testutil::Rng;

namespace {

SuperWeight w(int m, int n, std::vector<Int> top, std::vector<Int> bottom) {
  return SuperWeight(m, n, std::move(top), std::move(bottom));
}

SuperWeight unit(int m, int n) { return w(m, n, std::vector<Int>(m, 0), std::vector<Int>(n, 0)); }

SuperWeight berezin(int m, int n, Int k) {
  return w(m, n, std::vector<Int>(m, k), std::vector<Int>(n, -k));
}

SuperWeight pi_power_weight(int m, int n, int ell) {
  SuperWeight cur = unit(m, n);
  for (int i = 0; i < ell; ++i) cur = pi_shift_any_rank(cur);
  for (int i = 0; i > ell; --i) cur = pi_unshift_any_rank(cur);
  return cur;
}

const SuperWeight kStableLeft = w(6, 3, {3, 2, 1, -2, -3, -4}, {4, 3, 2});
const SuperWeight kStableRight = w(6, 3, {4, 2, 1, 0, -1, -2}, {2, 1, 0});

PrincipalFusionSpec gsp6() { return {PrincipalFusionSpec::Family::GSp, 6, 1, false}; }

}  // namespace

TEST_CASE("negligibility") {
  CHECK(is_negligible_irreducible(w(1, 1, {1}, {0})));           // typical
  CHECK_FALSE(is_negligible_irreducible(berezin(3, 2, 1)));      // Ber
  // Lambda^2(V) for GL(2|1): atypicality drops, covariance criterion agrees
  SuperWeight lambda2 = w(2, 1, {1, 1}, {0});
  CHECK(is_negligible_irreducible(lambda2));
  CHECK_FALSE(is_covariant_max_atypical({1, 1}, 1));
}

TEST_CASE("splice") {
  SUBCASE("the GL(6|3) example splits as (3,2,1) x [-2,-3,-4]") {
    SplitWeight s = splice(kStableLeft);
    CHECK(s.classical == ClassicalWeight({3, 2, 1}));
    CHECK(s.principal == w(3, 3, {-2, -3, -4}, {4, 3, 2}));
    CHECK(s.pi_power == 0);
  }
  SUBCASE("units and Pi") {
    SplitWeight s = splice(unit(3, 1));
    CHECK(s.classical == ClassicalWeight({0, 0}));
    CHECK(s.principal == unit(1, 1));
    CHECK(s.pi_power == 0);

    SplitWeight p = splice(pi_power_weight(3, 1, 1));
    CHECK(p.classical == ClassicalWeight({0, 0}));
    CHECK(p.principal == berezin(1, 1, -1));
    CHECK(p.pi_power == 0);
  }
  SUBCASE("reassembly returns the original weight") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 3));
      int m = n + static_cast<int>(testutil::pick(rng, 0, 3));
      SuperWeight x = testutil::random_max_atypical(rng, m, n);
      SplitWeight s = splice(x);
      CHECK(is_negatively_stable(s.principal));
      // merge classical and principal coordinates back into a stable weight
      std::vector<Int> top = s.classical.entries;
      top.insert(top.end(), s.principal.top.begin(), s.principal.top.end());
      SuperWeight merged(m, n, std::move(top), s.principal.bottom);
      for (long long i = 0; i < s.pi_power; ++i) merged = pi_unshift_any_rank(merged);
      CHECK(merged == x);
    }
  }
}

TEST_CASE("image") {
  SUBCASE("Ber_{m|n} -> det boxtimes Ber_{n|n}") {
    for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {2, 2}, {5, 1}}) {
      SemisimpleImage im = image(berezin(m, n, 1));
      CHECK_FALSE(im.zero);
      CHECK(im.classical == ClassicalWeight(std::vector<Int>(m - n, 1)));
      CHECK(im.principal == berezin(n, n, 1));
    }
  }
  SUBCASE("Lambda^r(V) -> det boxtimes 1") {
    SuperWeight lam = w(4, 2, {1, 1, 0, 0}, {0, 0});
    SemisimpleImage im = image(lam);
    CHECK(im.classical == ClassicalWeight({1, 1}));
    CHECK(im.principal == unit(2, 2));
  }
  SUBCASE("Pi^l -> 1 boxtimes Ber_{n|n}^{-l} for l in {-2..2}") {
    for (int ell = -2; ell <= 2; ++ell) {
      SemisimpleImage im = image(pi_power_weight(4, 2, ell));
      CHECK(im.classical == ClassicalWeight({0, 0}));
      CHECK(im.principal == berezin(2, 2, -ell));
    }
  }
  SUBCASE("negligible input yields the zero image") {
    CHECK(image(w(1, 1, {1}, {0})).zero);
  }
  SUBCASE("multiplicativity against the splicing factors") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 3));
      int m = n + static_cast<int>(testutil::pick(rng, 1, 3));
      // negatively stable with polynomial classical part
      std::vector<Int> cls = testutil::random_partition(rng, m - n, 4);
      cls.resize(m - n, 0);
      std::vector<Int> mu(n);
      for (auto& x : mu) x = testutil::pick(rng, -4, 0);
      std::sort(mu.begin(), mu.end(), std::greater<>());
      std::vector<Int> top = cls;
      top.insert(top.end(), mu.begin(), mu.end());
      std::vector<Int> bottom(mu.rbegin(), mu.rend());
      for (Int& x : bottom) x = -x;
      SuperWeight whole(m, n, top, bottom);

      std::vector<Int> cls_top = cls;
      cls_top.resize(m, 0);
      SuperWeight cl_factor(m, n, cls_top, std::vector<Int>(n, 0));
      std::vector<Int> pr_top(m - n, 0);
      pr_top.insert(pr_top.end(), mu.begin(), mu.end());
      SuperWeight pr_factor(m, n, pr_top, bottom);

      SemisimpleImage im = image(whole);
      CHECK(im.classical == image(cl_factor).classical);
      CHECK(im.principal == image(pr_factor).principal);
    }
  }
}

TEST_CASE("sdim") {
  CHECK(sdim(unit(3, 2)) == 1);
  CHECK(sdim(w(2, 2, {1, 0}, {0, -1})) == -2);
  SUBCASE("Ber_{m|n} has superdimension (-1)^n") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {3, 3}, {5, 2}}) {
      CHECK(sdim(berezin(m, n, 1)) == (n % 2 ? -1 : 1));
    }
  }
  CHECK(sdim(w(1, 1, {1}, {0})) == 0);
  SUBCASE("|sdim| is invariant under the weight-level dual") {
    // the sign may flip: L(w)^vee is L(dual w) only up to a parity shift
    Rng rng(45);
    using boost::multiprecision::abs;
    for (int trial = 0; trial < 60; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 4));
      int m = n + static_cast<int>(testutil::pick(rng, 0, 3));
      SuperWeight x = testutil::random_max_atypical(rng, m, n);
      CHECK(abs(sdim(dual(x))) == abs(sdim(x)));
    }
  }
}

TEST_CASE("tensor_blockwise") {
  SUBCASE("the GL(6|3) model pair lands in 6 blocks with total multiplicity 7") {
    FusionResult r = tensor_blockwise(kStableLeft, kStableRight);
    REQUIRE(r.summands.size() == 6);
    CHECK(r.total_multiplicity() == 7);
    long long two = 0;
    for (const auto& s : r.summands)
      if (s.multiplicity == 2) {
        ++two;
        CHECK(s.classical == ClassicalWeight({6, 4, 3}));
      }
    CHECK(two == 1);
    CHECK(r.negligible_dropped);
  }
  SUBCASE("X (x) 1 stays in the block of X") {
    FusionResult r = tensor_blockwise(kStableLeft, unit(6, 3));
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].classical == ClassicalWeight({3, 2, 1}));
    CHECK(r.summands[0].multiplicity == 1);
  }
}

TEST_CASE("tensor_ground_states") {
  SUBCASE("V (x) V in GL(2|1): the Lambda^2 part drops") {
    FusionResult r = tensor_ground_states(w(2, 1, {1, 0}, {0}), w(2, 1, {1, 0}, {0}));
    REQUIRE(r.summands.size() == 1);
    CHECK(std::get<SuperWeight>(r.summands[0].principal) == w(2, 1, {2, 0}, {0}));
    CHECK(r.summands[0].multiplicity == 1);
  }
  SUBCASE("1 (x) G = G") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 4));
      int m = n + static_cast<int>(testutil::pick(rng, 0, 3));
      SuperWeight g = ground_state(testutil::random_block(rng, m, n),
                                   testutil::pick(rng, 0, 3), m, n);
      FusionResult r = tensor_ground_states(unit(m, n), g);
      REQUIRE(r.summands.size() == 1);
      CHECK(std::get<SuperWeight>(r.summands[0].principal) == g);
      CHECK(r.summands[0].multiplicity == 1);
    }
  }
  SUBCASE("superdimension conservation") {
    Rng rng(44);
    for (int trial = 0; trial < 30; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 4));
      int m = n + static_cast<int>(testutil::pick(rng, 0, 3));
      SuperWeight g1 = ground_state(testutil::random_block(rng, m, n),
                                    testutil::pick(rng, 0, 2), m, n);
      SuperWeight g2 = ground_state(testutil::random_block(rng, m, n),
                                    testutil::pick(rng, 0, 2), m, n);
      FusionResult r = tensor_ground_states(g1, g2);
      BigInt total = 0;
      for (const auto& s : r.summands) {
        const auto& sw = std::get<SuperWeight>(s.principal);
        CHECK(is_ground_state(sw));
        total += BigInt(s.multiplicity) * sdim(sw);
      }
      CHECK(total == sdim(g1) * sdim(g2));
    }
  }
  SUBCASE("non-ground-states are rejected") {
    CHECK_THROWS_AS(tensor_ground_states(w(2, 2, {1, 0}, {0, -1}), unit(2, 2)),
                    ValidationError);
  }
  SUBCASE("projecting the full route to blocks matches tensor_blockwise") {
    Rng rng(46);
    for (int trial = 0; trial < 30; ++trial) {
      int n = static_cast<int>(testutil::pick(rng, 1, 3));
      int m = n + static_cast<int>(testutil::pick(rng, 1, 3));
      SuperWeight g1 = ground_state(testutil::random_block(rng, m, n),
                                    testutil::pick(rng, 0, 2), m, n);
      SuperWeight g2 = ground_state(testutil::random_block(rng, m, n),
                                    testutil::pick(rng, 0, 2), m, n);
      std::map<ClassicalWeight, long long> projected;
      for (const auto& s : tensor_ground_states(g1, g2).summands)
        projected[s.classical] += s.multiplicity;
      std::map<ClassicalWeight, long long> blocks;
      for (const auto& s : tensor_blockwise(g1, g2).summands)
        blocks[s.classical] += s.multiplicity;
      CHECK(projected == blocks);
    }
  }
}

TEST_CASE("tensor_mod_negligible") {
  SUBCASE("the GL(6|3) model product with GSp(6): 21 summands") {
    FusionResult r = tensor_mod_negligible(kStableLeft, kStableRight, gsp6(), gsp6());
    CHECK(r.summands.size() == 18);  // 6 blocks x 3 principal labels
    CHECK(r.total_multiplicity() == 21);
    std::set<ClassicalWeight> blocks;
    for (const auto& s : r.summands) blocks.insert(s.classical);
    CHECK(blocks.size() == 6);
  }
  SUBCASE("X (x) 1 via inequivalent specs keeps the LR structure") {
    PrincipalFusionSpec triv{PrincipalFusionSpec::Family::GL, 1, 0, false};
    FusionResult r = tensor_mod_negligible(kStableLeft, unit(6, 3), gsp6(), triv);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].classical == ClassicalWeight({3, 2, 1}));
    const auto& lab = std::get<GroupRepLabel>(r.summands[0].principal);
    CHECK(lab.dim == 6);  // external product of dimensions 6 and 1
  }
  SUBCASE("opaque specs raise and carry the blockwise partial output") {
    PrincipalFusionSpec opaque;
    opaque.degree = 6;
    try {
      tensor_mod_negligible(kStableLeft, kStableRight, gsp6(), opaque);
      FAIL("expected FusionNeedsExternalTable");
    } catch (const FusionNeedsExternalTable& e) {
      CHECK(e.blockwise.summands.size() == 6);
      CHECK(e.blockwise.total_multiplicity() == 7);
    }
  }
  SUBCASE("wrong degree is rejected") {
    PrincipalFusionSpec bad = gsp6();
    bad.degree = 4;
    CHECK_THROWS_AS(tensor_mod_negligible(kStableLeft, kStableRight, bad, bad), ValidationError);
  }
  SUBCASE("blockwise projection agrees") {
    FusionResult full = tensor_mod_negligible(kStableLeft, kStableRight, gsp6(), gsp6());
    FusionResult blocks = tensor_blockwise(kStableLeft, kStableRight);
    std::map<ClassicalWeight, long long> projected;
    for (const auto& s : full.summands) projected[s.classical] += s.multiplicity;
    for (const auto& s : blocks.summands)
      CHECK(projected.at(s.classical) == s.multiplicity * 3);
  }
  SUBCASE("superdimension bookkeeping balances") {
    FusionResult full = tensor_mod_negligible(kStableLeft, kStableRight, gsp6(), gsp6());
    BigInt total = 0;
    for (const auto& s : full.summands)
      total += BigInt(s.multiplicity) * weyl_dim(s.classical) *
               std::get<GroupRepLabel>(s.principal).dim;
    using boost::multiprecision::abs;
    CHECK(total == abs(sdim(kStableLeft)) * abs(sdim(kStableRight)));
  }
}

TEST_CASE("determinant") {
  SUBCASE("one-dimensional objects are their own determinant") {
    DeterminantExpr lam = determinant(w(4, 2, {1, 1, 0, 0}, {0, 0}));  // Lambda^r(V)
    CHECK(lam.classical_det_power == 1);
    CHECK(lam.principal_resolved);
    CHECK(lam.principal_ber_power == 0);

    DeterminantExpr ber = determinant(berezin(4, 2, 1));
    CHECK(ber.classical_det_power == 1);
    CHECK(ber.principal_resolved);
    CHECK(ber.principal_ber_power == 1);
  }
  SUBCASE("principal-block stable weights: trivial classical factor, symbolic rest") {
    DeterminantExpr d = determinant(w(4, 2, {0, 0, -1, -2}, {2, 1}));
    CHECK(d.classical_det_power == 0);
    CHECK_FALSE(d.principal_resolved);
    CHECK(d.principal_multiplier == 1);
    CHECK(d.principal_weight == w(2, 2, {-1, -2}, {2, 1}));
  }
  SUBCASE("negligible input is out of domain") {
    CHECK_THROWS_AS(determinant(w(1, 1, {1}, {0})), ValidationError);
  }
}
