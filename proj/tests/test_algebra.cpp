#include <doctest.h>

#include "oracle.hpp"
#include "pairlab/algebra.hpp"
#include "pairlab/errors.hpp"

using namespace pairlab;

namespace {
const PairingParams kDesk = PairingParams::desk_scale();
}

TEST_CASE("params_from_q reproduces the desk instance") {
  PairingParams p = params_from_q(11);
  CHECK(p.q == 11);
  CHECK(p.p == 23);
  CHECK(p.gt_gen == 2);
  // gt_gen really has order q: gt_gen^q = 1, gt_gen != 1
  CHECK(oracle::pow_mod(p.gt_gen, p.q, p.p) == 1);
  CHECK(p.gt_gen != 1);
  p.validate();
}

TEST_CASE("params reject a unit generator and a composite order") {
  PairingParams bad{11, 23, 1};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  CHECK_THROWS_AS(params_from_q(15), ConfigError);
}

TEST_CASE("make_params is deterministic and valid") {
  PairingParams a = make_params(12, 42);
  PairingParams b = make_params(12, 42);
  CHECK(a == b);
  a.validate();
  CHECK(a.q >= (1u << 11));
  CHECK(a.q < (1u << 12));
  CHECK(make_params(12, 43).q != a.q);  // different seed, different search start
  CHECK_THROWS_AS(make_params(3, 0), ConfigError);

  PairingParams large = PairingParams::large_scale();
  large.validate();
  CHECK(large == params_from_q(large.q));
}

TEST_CASE("group law on G1/G2 matches the modular oracle") {
  Algebra alg(kDesk);
  CHECK(alg.add(G1Elem{7}, G1Elem{8}) == G1Elem{oracle::add_mod(7, 8, 11)});
  CHECK(alg.add(G1Elem{7}, G1Elem{8}).v == 4);
  for (std::uint64_t x = 0; x < 11; ++x) {
    CHECK(alg.add(G1Elem{x}, G1Elem{0}) == G1Elem{x});
    CHECK(alg.add(G1Elem{x}, alg.neg(G1Elem{x})) == G1Elem{0});
    CHECK(alg.add(G2Elem{x}, alg.neg(G2Elem{x})) == G2Elem{0});
  }
}

TEST_CASE("scalar multiplication") {
  Algebra alg(kDesk);
  CHECK(alg.mul(Scalar{3}, G1Elem{5}).v == oracle::mul_mod(3, 5, 11));
  CHECK(alg.mul(Scalar{3}, G1Elem{5}).v == 4);
  for (std::uint64_t x = 0; x < 11; ++x) {
    CHECK(alg.mul(Scalar{1}, G1Elem{x}) == G1Elem{x});
    CHECK(alg.mul(Scalar{0}, G1Elem{x}) == G1Elem{0});
    CHECK(alg.mul(Scalar{1}, G2Elem{x}) == G2Elem{x});
  }
}

TEST_CASE("pairing matches the oracle on frozen points") {
  Algebra alg(kDesk);
  CHECK(alg.pair(G1Elem{3}, G2Elem{4}).v == 2);
  CHECK(alg.pair(G1Elem{3}, G2Elem{4}).v == oracle::pair(3, 4, 11, 23, 2));
  for (std::uint64_t b = 0; b < 11; ++b) CHECK(alg.pair(G1Elem{0}, G2Elem{b}).v == 1);
  CHECK(alg.pair(G1Elem{2}, G2Elem{3}).v == 18);
  CHECK(alg.pair(G1Elem{2}, G2Elem{3}) == alg.gt_pow(alg.pair(G1Elem{1}, G2Elem{1}), Scalar{6}));
}

TEST_CASE("GT group operations") {
  Algebra alg(kDesk);
  CHECK(alg.gt_mul(GTElem{18}, GTElem{2}).v == 13);
  CHECK(alg.gt_pow(GTElem{2}, Scalar{0}).v == 1);
  for (std::uint64_t k = 0; k < 11; ++k) {
    GTElem x = alg.gt_pow(GTElem{2}, Scalar{k});
    CHECK(alg.gt_mul(x, alg.gt_inv(x)).v == 1);
  }
  CHECK_THROWS_AS(alg.gt(5), CodecError);  // 5 is outside the order-11 subgroup of Z_23^*
  CHECK_THROWS_AS(alg.gt(0), CodecError);
}

TEST_CASE("bilinearity, exhaustive at desk scale") {
  Algebra alg(kDesk);
  GTElem base = alg.pair(G1Elem{1}, G2Elem{1});
  CHECK(base.v != 1);  // non-degenerate
  for (std::uint64_t a = 0; a < 11; ++a) {
    for (std::uint64_t b = 0; b < 11; ++b) {
      GTElem lhs = alg.pair(alg.mul(Scalar{a}, G1Elem{1}), alg.mul(Scalar{b}, G2Elem{1}));
      CHECK(lhs == alg.gt_pow(base, alg.s_mul(Scalar{a}, Scalar{b})));
    }
  }
}

TEST_CASE("multiplicativity in each pairing slot") {
  Algebra alg(kDesk);
  for (std::uint64_t p1 = 0; p1 < 11; ++p1) {
    for (std::uint64_t p2 = 0; p2 < 11; ++p2) {
      for (std::uint64_t qv : {0ull, 1ull, 5ull, 10ull}) {
        G2Elem q_el{qv};
        CHECK(alg.pair(alg.add(G1Elem{p1}, G1Elem{p2}), q_el) ==
              alg.gt_mul(alg.pair(G1Elem{p1}, q_el), alg.pair(G1Elem{p2}, q_el)));
      }
    }
  }
}

TEST_CASE("closure: everything the operations emit stays in the subgroup") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    GTElem x = alg.pair(alg.random_g1(rng), alg.random_g2(rng));
    GTElem y = alg.random_gt(rng);
    CHECK(alg.in_gt(x.v));
    CHECK(alg.in_gt(alg.gt_mul(x, y).v));
    CHECK(alg.in_gt(alg.gt_inv(x).v));
    CHECK(alg.in_gt(alg.gt_pow(y, alg.random_scalar(rng)).v));
  }
}

TEST_CASE("attached counters see exactly the performed operations") {
  OpCounter ops;
  Algebra alg = Algebra(kDesk).counted(ops);
  alg.add(G1Elem{1}, G1Elem{2});
  alg.add(G2Elem{1}, G2Elem{2});
  alg.mul(Scalar{2}, G1Elem{3});
  GTElem x = alg.pair(G1Elem{1}, G2Elem{1});
  alg.gt_mul(x, x);
  alg.gt_inv(x);
  alg.gt_pow(x, Scalar{3});
  CHECK(ops.group_adds == 2);
  CHECK(ops.scalar_muls == 1);
  CHECK(ops.pairings == 1);
  CHECK(ops.gt_muls == 1);
  CHECK(ops.gt_invs == 1);
  CHECK(ops.gt_pows == 1);

  OpCounter none;
  Algebra quiet(kDesk);
  quiet.pair(G1Elem{1}, G2Elem{1});
  CHECK(none == OpCounter{});
}

TEST_CASE("seeded rng streams are deterministic") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.below(11) == b.below(11));
  Algebra alg(kDesk);
  Rng c(5);
  for (int i = 0; i < 200; ++i) {
    CHECK(alg.random_nonzero_scalar(c).v != 0);
    CHECK(alg.random_scalar(c).v < 11);
  }
}
