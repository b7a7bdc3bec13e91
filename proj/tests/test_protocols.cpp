#include <doctest.h>

#include "oracle.hpp"
#include "pairlab/errors.hpp"
#include "pairlab/protocols.hpp"

using namespace pairlab;

namespace {

const PairingParams kDesk = PairingParams::desk_scale();

// V-tuple of the worked example: bases (2, 5), scalars (3, 7).
RandTable example_table() {
  Algebra alg(kDesk);
  std::vector<SixTuple> rows;
  rows.push_back(make_six_tuple(alg, Scalar{3}, Scalar{7}, G1Elem{2}, G2Elem{5}));
  rows.push_back(make_six_tuple(alg, Scalar{1}, Scalar{4}, G1Elem{6}, G2Elem{1}));
  rows.push_back(make_six_tuple(alg, Scalar{2}, Scalar{3}, G1Elem{4}, G2Elem{5}));
  return RandTable(std::move(rows));
}

GTElem tamper(const Algebra& alg, GTElem value, std::uint64_t factor_exp) {
  return alg.gt_mul(value, alg.gt_pow(GTElem{alg.params().gt_gen}, Scalar{factor_exp}));
}

}  // namespace

TEST_CASE("chen_prepare emits the worked query layout") {
  Algebra alg(kDesk);
  RandTable table = example_table();
  ChenPrepared prep = chen_prepare(alg, G1Elem{3}, G2Elem{4}, table);

  REQUIRE(prep.to_u1.pairs.size() == 4);
  REQUIRE(prep.to_u2.pairs.size() == 4);
  CHECK(prep.to_u1.pairs[0] == std::pair{G1Elem{9}, G2Elem{6}});
  CHECK(prep.to_u1.pairs[1] == std::pair{G1Elem{9}, G2Elem{5}});
  CHECK(prep.to_u2.pairs[0] == std::pair{G1Elem{5}, G2Elem{2}});
  CHECK(prep.to_u2.pairs[1] == std::pair{G1Elem{6}, G2Elem{9}});
  // check pairs are shared verbatim between the two servers
  CHECK(prep.to_u1.pairs[2] == prep.to_u2.pairs[2]);
  CHECK(prep.to_u1.pairs[3] == prep.to_u2.pairs[3]);
  CHECK(table.remaining() == 0);
  CHECK(prep.secrets.sent_u1 == prep.to_u1);
  CHECK(prep.secrets.sent_u2 == prep.to_u2);
}

TEST_CASE("chen_prepare costs the outsourcer only additions") {
  OpCounter ops;
  Algebra alg = Algebra(kDesk).counted(ops);
  RandTable table = example_table();
  chen_prepare(alg, G1Elem{3}, G2Elem{4}, table);
  CHECK(ops.pairings == 0);
  CHECK(ops.scalar_muls == 0);
  CHECK(ops.group_adds == 5);
}

TEST_CASE("chen_prepare propagates exhaustion") {
  Algebra alg(kDesk);
  RandTable table = generate_table(alg, 2, 5);
  CHECK_THROWS_AS(chen_prepare(alg, G1Elem{1}, G2Elem{1}, table), TableExhausted);
}

TEST_CASE("honest_eval pairs every slot") {
  Algebra alg(kDesk);
  Response r = honest_eval(alg, Query{{{G1Elem{9}, G2Elem{6}}}});
  REQUIRE(r.values.size() == 1);
  CHECK(r.values[0].v == 12);  // 2^(54 mod 11) mod 23
  CHECK(r.values[0].v == oracle::pair(9, 6, 11, 23, 2));

  CHECK(honest_eval(alg, Query{{{G1Elem{0}, G2Elem{7}}}}).values[0].v == 1);
  CHECK(honest_eval(alg, Query{}).values.empty());
}

TEST_CASE("chen_verify reads only the check slots") {
  Algebra alg(kDesk);
  RandTable table = example_table();
  ChenPrepared prep = chen_prepare(alg, G1Elem{3}, G2Elem{4}, table);
  Response r1 = honest_eval(alg, prep.to_u1);
  Response r2 = honest_eval(alg, prep.to_u2);
  CHECK(chen_verify(r1, r2));

  // the flaw: replacing delta is invisible to the check
  Response subverted = r1;
  subverted.values[kDeltaSlot] = tamper(alg, r1.values[kDeltaSlot], 3);
  CHECK(chen_verify(subverted, r2));

  // a touched check slot is caught
  Response bad = r2;
  bad.values[kBeta1Slot] = tamper(alg, bad.values[kBeta1Slot], 5);
  CHECK_FALSE(chen_verify(r1, bad));

  Response short_resp{{GTElem{1}, GTElem{1}}};
  CHECK_THROWS_AS(chen_verify(r1, short_resp), MalformedResponse);
}

TEST_CASE("chen recovery is exact, exhaustively at desk scale") {
  Algebra alg(kDesk);
  for (std::uint64_t a = 0; a < 11; ++a) {
    for (std::uint64_t b = 0; b < 11; ++b) {
      RandTable table = generate_table(alg, 3, 100 + a * 11 + b);
      ChenPrepared prep = chen_prepare(alg, G1Elem{a}, G2Elem{b}, table);
      Response r1 = honest_eval(alg, prep.to_u1);
      Response r2 = honest_eval(alg, prep.to_u2);
      REQUIRE(chen_verify(r1, r2));
      CHECK(chen_recover(alg, r1, r2, prep.secrets) == alg.pair(G1Elem{a}, G2Elem{b}));
    }
  }
}

TEST_CASE("chen recovery is exact over random large-order sessions") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(2024);
  for (int i = 0; i < 150; ++i) {
    RandTable table = generate_table(alg, 3, rng.next());
    G1Elem a = alg.random_g1(rng);
    G2Elem b = alg.random_g2(rng);
    ChenPrepared prep = chen_prepare(alg, a, b, table);
    Response r1 = honest_eval(alg, prep.to_u1);
    Response r2 = honest_eval(alg, prep.to_u2);
    REQUIRE(chen_verify(r1, r2));
    CHECK(chen_recover(alg, r1, r2, prep.secrets) == alg.pair(a, b));
  }
}

TEST_CASE("delta substitution corrupts the output by the predicted factor") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    RandTable table = generate_table(alg, 3, rng.next());
    const SixTuple v_row = table.rows()[0];
    G1Elem a = alg.random_g1(rng);
    G2Elem b = alg.random_g2(rng);
    ChenPrepared prep = chen_prepare(alg, a, b, table);
    Response r1 = honest_eval(alg, prep.to_u1);
    Response r2 = honest_eval(alg, prep.to_u2);

    GTElem rho = alg.random_gt(rng);
    r1.values[kDeltaSlot] = rho;
    REQUIRE(chen_verify(r1, r2));  // still accepted

    GTElem out = chen_recover(alg, r1, r2, prep.secrets);
    REQUIRE(v_row.secrets.has_value());
    Scalar neg_sum = alg.s_neg(alg.s_add(v_row.secrets->s1, v_row.secrets->s2));
    GTElem expected = alg.gt_mul(
        alg.gt_mul(alg.pair(a, b), alg.gt_pow(alg.pair(v_row.base1, v_row.base2), neg_sum)), rho);
    CHECK(out == expected);
  }
}

TEST_CASE("chen recovery with identity inputs") {
  Algebra alg(kDesk);
  RandTable table = generate_table(alg, 3, 4);
  ChenPrepared prep = chen_prepare(alg, G1Elem{0}, G2Elem{0}, table);
  Response r1 = honest_eval(alg, prep.to_u1);
  Response r2 = honest_eval(alg, prep.to_u2);
  CHECK(chen_recover(alg, r1, r2, prep.secrets).v == 1);
}

TEST_CASE("revised queries are the first two Chen pairs") {
  Algebra alg(kDesk);
  RandTable chen_table = example_table();
  RandTable revised_table = example_table();
  ChenPrepared chen = chen_prepare(alg, G1Elem{3}, G2Elem{4}, chen_table);
  ChenPrepared revised = revised_prepare(alg, G1Elem{3}, G2Elem{4}, revised_table);

  REQUIRE(revised.to_u1.pairs.size() == 2);
  REQUIRE(revised.to_u2.pairs.size() == 2);
  CHECK(revised.to_u1.pairs[0] == chen.to_u1.pairs[0]);
  CHECK(revised.to_u1.pairs[1] == chen.to_u1.pairs[1]);
  CHECK(revised.to_u2.pairs[0] == chen.to_u2.pairs[0]);
  CHECK(revised.to_u2.pairs[1] == chen.to_u2.pairs[1]);
  CHECK(revised_table.cursor() == 1);
  CHECK(chen_table.cursor() == 3);
}

TEST_CASE("revised recovery is exact under honest evaluation") {
  Algebra alg(kDesk);
  for (std::uint64_t a = 0; a < 11; ++a) {
    for (std::uint64_t b = 0; b < 11; ++b) {
      RandTable table = generate_table(alg, 1, 300 + a * 11 + b);
      ChenPrepared prep = revised_prepare(alg, G1Elem{a}, G2Elem{b}, table);
      Response r1 = honest_eval(alg, prep.to_u1);
      Response r2 = honest_eval(alg, prep.to_u2);
      CHECK(revised_recover(alg, r1, r2, prep.secrets) == alg.pair(G1Elem{a}, G2Elem{b}));
    }
  }
  RandTable table = generate_table(alg, 1, 1);
  ChenPrepared prep = revised_prepare(alg, G1Elem{5}, G2Elem{0}, table);
  CHECK(revised_recover(alg, honest_eval(alg, prep.to_u1), honest_eval(alg, prep.to_u2),
                        prep.secrets)
            .v == 1);
}

TEST_CASE("revised trades detection away: deviations pass through") {
  Algebra alg(kDesk);
  RandTable table = generate_table(alg, 1, 8);
  ChenPrepared prep = revised_prepare(alg, G1Elem{4}, G2Elem{9}, table);
  Response r1 = honest_eval(alg, prep.to_u1);
  Response r2 = honest_eval(alg, prep.to_u2);
  r1.values[0] = tamper(alg, r1.values[0], 4);
  GTElem out = revised_recover(alg, r1, r2, prep.secrets);
  CHECK(out != alg.pair(G1Elem{4}, G2Elem{9}));  // wrong and nothing to catch it
}

TEST_CASE("cm_prepare emits the worked query layout") {
  Algebra alg(kDesk);
  CMSetup setup{G1Elem{1}, G2Elem{1}, alg.pair(G1Elem{1}, G2Elem{1})};
  CMSessionKeys keys{Scalar{2}, Scalar{5}, Scalar{3}, Scalar{7}, Scalar{2}, Scalar{6}};
  CMPrepared prep = cm_prepare_with_keys(alg, G1Elem{3}, G2Elem{4}, setup, keys);
  REQUIRE(prep.to_server.pairs.size() == 4);
  CHECK(prep.to_server.pairs[0] == std::pair{G1Elem{5}, G2Elem{1}});
  CHECK(prep.to_server.pairs[1] == std::pair{G1Elem{1}, G2Elem{9}});
  CHECK(prep.to_server.pairs[2] == std::pair{G1Elem{5}, G2Elem{9}});
  CHECK(prep.to_server.pairs[3] == std::pair{G1Elem{5}, G2Elem{3}});
}

TEST_CASE("cm_prepare draws nonzero keys and costs six scalar products") {
  Algebra alg(kDesk);
  Rng setup_rng(1);
  CMSetup setup = make_cm_setup(alg, setup_rng);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    OpCounter ops;
    Algebra counted = alg.counted(ops);
    CMPrepared prep = cm_prepare(counted, G1Elem{3}, G2Elem{4}, setup, rng);
    const CMSessionKeys& k = prep.secrets.keys;
    for (Scalar s : {k.g1, k.g2, k.a1, k.r1, k.a2, k.r2}) CHECK(s.v != 0);
    CHECK(ops.scalar_muls == 6);
    CHECK(ops.group_adds == 4);
    CHECK(ops.pairings == 0);
  }
  CHECK_THROWS_AS(cm_prepare_with_keys(alg, G1Elem{1}, G2Elem{1}, setup,
                                       CMSessionKeys{Scalar{0}, Scalar{1}, Scalar{1}, Scalar{1},
                                                     Scalar{1}, Scalar{1}}),
                  ConfigError);
}

TEST_CASE("cm recovery and verification are exact under honest evaluation") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(31);
  CMSetup setup = make_cm_setup(alg, rng);
  for (int i = 0; i < 300; ++i) {
    G1Elem a = alg.random_g1(rng);
    G2Elem b = alg.random_g2(rng);
    CMPrepared prep = cm_prepare(alg, a, b, setup, rng);
    Response resp = honest_eval(alg, prep.to_server);
    GTElem recovered = cm_recover(alg, resp, prep.secrets);
    CHECK(recovered == alg.pair(a, b));
    CHECK(cm_verify(alg, resp, recovered, prep.secrets));
    CHECK(cm_verify_expanded(alg, resp, prep.secrets));
  }
}

TEST_CASE("cm recovery with identity input") {
  Algebra alg(kDesk);
  Rng rng(5);
  CMSetup setup = make_cm_setup(alg, rng);
  CMPrepared prep = cm_prepare(alg, G1Elem{0}, G2Elem{6}, setup, rng);
  Response resp = honest_eval(alg, prep.to_server);
  CHECK(cm_recover(alg, resp, prep.secrets).v == 1);
}

TEST_CASE("cm recovery is linear in the third response slot") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(53);
  CMSetup setup = make_cm_setup(alg, rng);
  for (int i = 0; i < 50; ++i) {
    G1Elem a = alg.random_g1(rng);
    G2Elem b = alg.random_g2(rng);
    CMPrepared prep = cm_prepare(alg, a, b, setup, rng);
    Response resp = honest_eval(alg, prep.to_server);
    GTElem factor = alg.gt_pow(GTElem{big.gt_gen}, alg.random_nonzero_scalar(rng));
    resp.values[2] = alg.gt_mul(resp.values[2], factor);
    CHECK(cm_recover(alg, resp, prep.secrets) == alg.gt_mul(alg.pair(a, b), factor));
  }
}

TEST_CASE("cm verification catches every alpha3/alpha4 tamper") {
  PairingParams big = PairingParams::large_scale();
  Algebra alg(big);
  Rng rng(71);
  CMSetup setup = make_cm_setup(alg, rng);
  for (int i = 0; i < 200; ++i) {
    CMPrepared prep = cm_prepare(alg, alg.random_g1(rng), alg.random_g2(rng), setup, rng);
    Response honest = honest_eval(alg, prep.to_server);
    std::size_t index = (i % 2) ? 3 : 2;
    Response bad = honest;
    bad.values[index] = tamper(alg, bad.values[index], rng.nonzero_below(big.q));
    GTElem recovered = cm_recover(alg, bad, prep.secrets);
    CHECK_FALSE(cm_verify(alg, bad, recovered, prep.secrets));
    // the two formulations agree on tampered responses too
    CHECK(cm_verify_expanded(alg, bad, prep.secrets) ==
          cm_verify(alg, bad, recovered, prep.secrets));
  }
}

TEST_CASE("cm degenerate key sets mask alpha1/alpha2 tampering") {
  Algebra alg(kDesk);
  Rng rng(13);
  CMSetup setup = make_cm_setup(alg, rng);

  // r2 = a2*g2 makes the alpha1 check exponent vanish
  CMSessionKeys k1{Scalar{4}, Scalar{3}, Scalar{5}, Scalar{7}, Scalar{2}, alg.s_mul(Scalar{2}, Scalar{3})};
  CMPrepared prep1 = cm_prepare_with_keys(alg, G1Elem{6}, G2Elem{2}, setup, k1);
  Response bad1 = honest_eval(alg, prep1.to_server);
  bad1.values[0] = tamper(alg, bad1.values[0], 5);
  CHECK(cm_verify(alg, bad1, cm_recover(alg, bad1, prep1.secrets), prep1.secrets));

  // r1 = a1*g1 symmetrically masks alpha2
  CMSessionKeys k2{Scalar{4}, Scalar{3}, Scalar{5}, alg.s_mul(Scalar{5}, Scalar{4}), Scalar{2}, Scalar{9}};
  CMPrepared prep2 = cm_prepare_with_keys(alg, G1Elem{6}, G2Elem{2}, setup, k2);
  Response bad2 = honest_eval(alg, prep2.to_server);
  bad2.values[1] = tamper(alg, bad2.values[1], 5);
  CHECK(cm_verify(alg, bad2, cm_recover(alg, bad2, prep2.secrets), prep2.secrets));

  // and with non-degenerate keys the same tampers are caught
  CMSessionKeys k3{Scalar{4}, Scalar{3}, Scalar{5}, Scalar{7}, Scalar{2}, Scalar{9}};
  CMPrepared prep3 = cm_prepare_with_keys(alg, G1Elem{6}, G2Elem{2}, setup, k3);
  Response bad3 = honest_eval(alg, prep3.to_server);
  bad3.values[0] = tamper(alg, bad3.values[0], 5);
  CHECK_FALSE(cm_verify(alg, bad3, cm_recover(alg, bad3, prep3.secrets), prep3.secrets));
}

TEST_CASE("responses of the wrong shape are rejected as malformed") {
  Algebra alg(kDesk);
  Rng rng(3);
  CMSetup setup = make_cm_setup(alg, rng);
  CMPrepared prep = cm_prepare(alg, G1Elem{1}, G2Elem{1}, setup, rng);
  Response short_resp{{GTElem{1}}};
  CHECK_THROWS_AS(cm_recover(alg, short_resp, prep.secrets), MalformedResponse);
  CHECK_THROWS_AS(cm_verify(alg, short_resp, GTElem{1}, prep.secrets), MalformedResponse);

  RandTable table = generate_table(alg, 1, 2);
  ChenPrepared rev = revised_prepare(alg, G1Elem{1}, G2Elem{1}, table);
  CHECK_THROWS_AS(revised_recover(alg, short_resp, short_resp, rev.secrets), MalformedResponse);
}
