#ifndef PAIRLAB_PROTOCOLS_HPP
#define PAIRLAB_PROTOCOLS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pairlab/algebra.hpp"
#include "pairlab/randtable.hpp"
#include "pairlab/rng.hpp"

namespace pairlab {

// Ordered (G1, G2) pairs sent to one server for evaluation.
struct Query {
  std::vector<std::pair<G1Elem, G2Elem>> pairs;
  bool operator==(const Query&) const = default;
};

// GT values returned by one server, positionally matching its query.
struct Response {
  std::vector<GTElem> values;
  bool operator==(const Response&) const = default;
};

// Slot layout shared by the two-server protocols. The verification slots are
// built from table rows only; that they never involve the inputs is the
// mechanism under test here.
inline constexpr std::size_t kDeltaSlot = 1;
inline constexpr std::size_t kBeta1Slot = 2;
inline constexpr std::size_t kBeta2Slot = 3;

// Outsourcer-side session state for the two-server protocols: the consumed
// table rows in role order (V, X, Y — revised keeps only V) and copies of
// the queries as sent.
struct ChenSecrets {
  std::vector<SixTuple> tuples;
  Query sent_u1;
  Query sent_u2;

  const SixTuple& v() const { return tuples[0]; }
  const SixTuple& x() const { return tuples[1]; }
  const SixTuple& y() const { return tuples[2]; }
};

struct ChenPrepared {
  Query to_u1;
  Query to_u2;
  ChenSecrets secrets;
};

// Four pairs per server, consuming three table rows. The outsourcer only
// adds group elements: no scalar multiplication and no pairing.
ChenPrepared chen_prepare(const Algebra& alg, G1Elem a, G2Elem b, RandTable& table);

// What a correct server does: pair every query position.
Response honest_eval(const Algebra& alg, const Query& query);

// Accepts iff the two check slots coincide across servers. Reads nothing
// else. Throws MalformedResponse unless both responses have four values.
bool chen_verify(const Response& from_u1, const Response& from_u2);

// alpha1 * alpha2^-1 * alpha3^-1 * delta * e(blind1, blind2)^-1, the last
// factor read from the V row, never recomputed via pair().
GTElem chen_recover(const Algebra& alg, const Response& from_u1, const Response& from_u2,
                    const ChenSecrets& secrets);

// The semi-honest variant: first two pairs of each query only, one table row,
// no verification step.
ChenPrepared revised_prepare(const Algebra& alg, G1Elem a, G2Elem b, RandTable& table);

// Same recovery product as chen_recover; responses are two values each.
GTElem revised_recover(const Algebra& alg, const Response& from_u1, const Response& from_u2,
                       const ChenSecrets& secrets);

// ---------------------------------------------------------------------------
// Single-server protocol with randomized verification.

// Fixed public base points and their precomputed pairing.
struct CMSetup {
  G1Elem p1;
  G2Elem p2;
  GTElem pre;  // e(p1, p2)
  bool operator==(const CMSetup&) const = default;
};

// Random nonzero base points; pairing cost lands on `alg`'s counter.
CMSetup make_cm_setup(const Algebra& alg, Rng& rng);

// Per-session blinding scalars, all in Z_q^*.
struct CMSessionKeys {
  Scalar g1, g2, a1, r1, a2, r2;
  bool operator==(const CMSessionKeys&) const = default;
};

struct CMSecrets {
  CMSessionKeys keys;
  CMSetup setup;
};

struct CMPrepared {
  Query to_server;
  CMSecrets secrets;
};

// [(A+g1P1, P2), (P1, B+g2P2), (A+g1P1, B+g2P2), (a1A+r1P1, a2B+r2P2)]
// with fresh session keys. Exactly six scalar multiplications on the
// outsourcer.
CMPrepared cm_prepare(const Algebra& alg, G1Elem a, G2Elem b, const CMSetup& setup, Rng& rng);

// Same query with caller-chosen keys; used to construct the degenerate key
// sets in tests.
CMPrepared cm_prepare_with_keys(const Algebra& alg, G1Elem a, G2Elem b, const CMSetup& setup,
                                const CMSessionKeys& keys);

// alpha1^-g2 * alpha2^-g1 * alpha3 * e(P1,P2)^(g1 g2); exponents mod q.
GTElem cm_recover(const Algebra& alg, const Response& resp, const CMSecrets& secrets);

// alpha4 ?= recovered^(a1 a2) * alpha1^(a1 r2) * alpha2^(a2 r1)
//           * e(P1,P2)^(r1 r2 - a1 g1 r2 - a2 g2 r1).
// `recovered` must be cm_recover's output for the same response.
bool cm_verify(const Algebra& alg, const Response& resp, GTElem recovered,
               const CMSecrets& secrets);

// The same check with the recovery product substituted in and exponents
// collected per response slot. Agrees with cm_verify on every response.
bool cm_verify_expanded(const Algebra& alg, const Response& resp, const CMSecrets& secrets);

}  // namespace pairlab

#endif  // PAIRLAB_PROTOCOLS_HPP
