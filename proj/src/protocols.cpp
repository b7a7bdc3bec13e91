#include "pairlab/protocols.hpp"

#include <string>

#include "pairlab/errors.hpp"

namespace pairlab {
namespace {

void require_length(const Response& r, std::size_t n, const char* who) {
  if (r.values.size() != n) {
    throw MalformedResponse(std::string(who) + ": expected " + std::to_string(n) +
                            " values, got " + std::to_string(r.values.size()));
  }
}

// alpha1 * alpha2^-1 * alpha3^-1 * delta * pre^-1
GTElem recovery_product(const Algebra& alg, GTElem alpha1, GTElem alpha2, GTElem alpha3,
                        GTElem delta, GTElem pre) {
  GTElem out = alg.gt_mul(alpha1, alg.gt_inv(alpha2));
  out = alg.gt_mul(out, alg.gt_inv(alpha3));
  out = alg.gt_mul(out, delta);
  return alg.gt_mul(out, alg.gt_inv(pre));
}

}  // namespace

ChenPrepared chen_prepare(const Algebra& alg, G1Elem a, G2Elem b, RandTable& table) {
  auto rows = table.take_tuples(3);
  const SixTuple& v = rows[0];
  const SixTuple& x = rows[1];
  const SixTuple& y = rows[2];

  ChenPrepared out;
  out.to_u1.pairs = {
      {alg.add(a, v.blind1), alg.add(b, v.blind2)},
      {alg.add(v.blind1, v.cross), v.base2},
      {x.blind1, x.blind2},
      {y.blind1, y.blind2},
  };
  out.to_u2.pairs = {
      {alg.add(a, v.base1), v.blind2},
      {v.blind1, alg.add(b, v.base2)},
      {x.blind1, x.blind2},
      {y.blind1, y.blind2},
  };
  out.secrets = {std::move(rows), out.to_u1, out.to_u2};
  return out;
}

Response honest_eval(const Algebra& alg, const Query& query) {
  Response r;
  r.values.reserve(query.pairs.size());
  for (const auto& [g1e, g2e] : query.pairs) r.values.push_back(alg.pair(g1e, g2e));
  return r;
}

bool chen_verify(const Response& from_u1, const Response& from_u2) {
  require_length(from_u1, 4, "chen_verify(U1)");
  require_length(from_u2, 4, "chen_verify(U2)");
  return from_u1.values[kBeta1Slot] == from_u2.values[kBeta1Slot] &&
         from_u1.values[kBeta2Slot] == from_u2.values[kBeta2Slot];
}

GTElem chen_recover(const Algebra& alg, const Response& from_u1, const Response& from_u2,
                    const ChenSecrets& secrets) {
  require_length(from_u1, 4, "chen_recover(U1)");
  require_length(from_u2, 4, "chen_recover(U2)");
  return recovery_product(alg, from_u1.values[0], from_u2.values[0], from_u2.values[1],
                          from_u1.values[kDeltaSlot], secrets.v().pairing);
}

ChenPrepared revised_prepare(const Algebra& alg, G1Elem a, G2Elem b, RandTable& table) {
  auto rows = table.take_tuples(1);
  const SixTuple& v = rows[0];

  ChenPrepared out;
  out.to_u1.pairs = {
      {alg.add(a, v.blind1), alg.add(b, v.blind2)},
      {alg.add(v.blind1, v.cross), v.base2},
  };
  out.to_u2.pairs = {
      {alg.add(a, v.base1), v.blind2},
      {v.blind1, alg.add(b, v.base2)},
  };
  out.secrets = {std::move(rows), out.to_u1, out.to_u2};
  return out;
}

GTElem revised_recover(const Algebra& alg, const Response& from_u1, const Response& from_u2,
                       const ChenSecrets& secrets) {
  require_length(from_u1, 2, "revised_recover(U1)");
  require_length(from_u2, 2, "revised_recover(U2)");
  return recovery_product(alg, from_u1.values[0], from_u2.values[0], from_u2.values[1],
                          from_u1.values[kDeltaSlot], secrets.v().pairing);
}

CMSetup make_cm_setup(const Algebra& alg, Rng& rng) {
  CMSetup s;
  s.p1 = {rng.nonzero_below(alg.params().q)};
  s.p2 = {rng.nonzero_below(alg.params().q)};
  s.pre = alg.pair(s.p1, s.p2);
  return s;
}

CMPrepared cm_prepare(const Algebra& alg, G1Elem a, G2Elem b, const CMSetup& setup, Rng& rng) {
  CMSessionKeys keys{alg.random_nonzero_scalar(rng), alg.random_nonzero_scalar(rng),
                     alg.random_nonzero_scalar(rng), alg.random_nonzero_scalar(rng),
                     alg.random_nonzero_scalar(rng), alg.random_nonzero_scalar(rng)};
  return cm_prepare_with_keys(alg, a, b, setup, keys);
}

CMPrepared cm_prepare_with_keys(const Algebra& alg, G1Elem a, G2Elem b, const CMSetup& setup,
                                const CMSessionKeys& keys) {
  for (Scalar k : {keys.g1, keys.g2, keys.a1, keys.r1, keys.a2, keys.r2}) {
    if (k.v == 0) throw ConfigError("cm session keys must be nonzero");
  }
  G1Elem a_blinded = alg.add(a, alg.mul(keys.g1, setup.p1));
  G2Elem b_blinded = alg.add(b, alg.mul(keys.g2, setup.p2));
  G1Elem a_check = alg.add(alg.mul(keys.a1, a), alg.mul(keys.r1, setup.p1));
  G2Elem b_check = alg.add(alg.mul(keys.a2, b), alg.mul(keys.r2, setup.p2));

  CMPrepared out;
  out.to_server.pairs = {
      {a_blinded, setup.p2},
      {setup.p1, b_blinded},
      {a_blinded, b_blinded},
      {a_check, b_check},
  };
  out.secrets = {keys, setup};
  return out;
}

GTElem cm_recover(const Algebra& alg, const Response& resp, const CMSecrets& secrets) {
  require_length(resp, 4, "cm_recover");
  const CMSessionKeys& k = secrets.keys;
  GTElem out = alg.gt_pow(resp.values[0], alg.s_neg(k.g2));
  out = alg.gt_mul(out, alg.gt_pow(resp.values[1], alg.s_neg(k.g1)));
  out = alg.gt_mul(out, resp.values[2]);
  return alg.gt_mul(out, alg.gt_pow(secrets.setup.pre, alg.s_mul(k.g1, k.g2)));
}

bool cm_verify(const Algebra& alg, const Response& resp, GTElem recovered,
               const CMSecrets& secrets) {
  require_length(resp, 4, "cm_verify");
  const CMSessionKeys& k = secrets.keys;
  Scalar pre_exp = alg.s_sub(alg.s_sub(alg.s_mul(k.r1, k.r2), alg.s_mul(k.a1, alg.s_mul(k.g1, k.r2))),
                             alg.s_mul(k.a2, alg.s_mul(k.g2, k.r1)));
  GTElem rhs = alg.gt_pow(recovered, alg.s_mul(k.a1, k.a2));
  rhs = alg.gt_mul(rhs, alg.gt_pow(resp.values[0], alg.s_mul(k.a1, k.r2)));
  rhs = alg.gt_mul(rhs, alg.gt_pow(resp.values[1], alg.s_mul(k.a2, k.r1)));
  rhs = alg.gt_mul(rhs, alg.gt_pow(secrets.setup.pre, pre_exp));
  return resp.values[3] == rhs;
}

bool cm_verify_expanded(const Algebra& alg, const Response& resp, const CMSecrets& secrets) {
  require_length(resp, 4, "cm_verify_expanded");
  const CMSessionKeys& k = secrets.keys;
  Scalar a1a2 = alg.s_mul(k.a1, k.a2);
  Scalar e1 = alg.s_sub(alg.s_mul(k.a1, k.r2), alg.s_mul(k.g2, a1a2));
  Scalar e2 = alg.s_sub(alg.s_mul(k.a2, k.r1), alg.s_mul(k.g1, a1a2));
  Scalar e_pre = alg.s_add(alg.s_mul(alg.s_mul(k.g1, k.g2), a1a2),
                           alg.s_sub(alg.s_sub(alg.s_mul(k.r1, k.r2),
                                               alg.s_mul(k.a1, alg.s_mul(k.g1, k.r2))),
                                     alg.s_mul(k.a2, alg.s_mul(k.g2, k.r1))));
  GTElem rhs = alg.gt_pow(resp.values[0], e1);
  rhs = alg.gt_mul(rhs, alg.gt_pow(resp.values[1], e2));
  rhs = alg.gt_mul(rhs, alg.gt_pow(resp.values[2], a1a2));
  rhs = alg.gt_mul(rhs, alg.gt_pow(secrets.setup.pre, e_pre));
  return resp.values[3] == rhs;
}

}  // namespace pairlab
