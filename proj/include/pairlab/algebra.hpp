#ifndef PAIRLAB_ALGEBRA_HPP
#define PAIRLAB_ALGEBRA_HPP

#include <compare>
#include <cstdint>

#include "pairlab/rng.hpp"

namespace pairlab {

// Public description of one toy pairing instance: two additive groups of
// prime order q realized as Z_q, and a target group realized as the order-q
// subgroup of Z_p^* (q | p-1), generated by gt_gen.
struct PairingParams {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t gt_gen = 0;

  // q=11, p=23, gt_gen=2. Small enough for exhaustive checks.
  static PairingParams desk_scale();
  // q=2^31-1. For randomized trials.
  static PairingParams large_scale();

  // Throws ConfigError if any invariant fails (primality, subgroup order).
  void validate() const;

  bool operator==(const PairingParams&) const = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Smallest even k with p = k*q + 1 prime, then smallest c >= 2 of
// multiplicative order exactly q mod p. Throws ParamSearchError if the
// bounded search fails, ConfigError if q is not prime.
PairingParams params_from_q(std::uint64_t q);

// Seeded search for a prime q of the given bit length, then params_from_q.
// bits in [4, 40]; deterministic per (bits, seed).
PairingParams make_params(unsigned bits, std::uint64_t seed);

// Residue mod q. Also used for exponents of order-q elements.
struct Scalar {
  std::uint64_t v = 0;
  auto operator<=>(const Scalar&) const = default;
};

// Elements of the additive groups, stored as discrete logs with respect to
// the canonical generator 1. G1 and G2 are distinct types on purpose: the
// pairing map is asymmetric and slot swaps should not compile.
struct G1Elem {
  std::uint64_t v = 0;
  auto operator<=>(const G1Elem&) const = default;
};

struct G2Elem {
  std::uint64_t v = 0;
  auto operator<=>(const G2Elem&) const = default;
};

// Element of the order-q subgroup of Z_p^*.
struct GTElem {
  std::uint64_t v = 1;
  auto operator<=>(const GTElem&) const = default;
};

// Operation tallies for one party. Incremented by Algebra when a counter is
// attached; Z_q scalar bookkeeping is deliberately not counted.
struct OpCounter {
  std::uint64_t pairings = 0;
  std::uint64_t scalar_muls = 0;
  std::uint64_t group_adds = 0;
  std::uint64_t gt_muls = 0;
  std::uint64_t gt_pows = 0;
  std::uint64_t gt_invs = 0;

  OpCounter& operator+=(const OpCounter& o);
  bool operator==(const OpCounter&) const = default;
};

// Arithmetic context for one pairing instance. Cheap to copy; a party in the
// simulator holds its own instance bound to its own counter.
class Algebra {
 public:
  explicit Algebra(const PairingParams& params, OpCounter* counter = nullptr)
      : prm_(params), counter_(counter) {}

  const PairingParams& params() const { return prm_; }

  // Same instance, ops tallied into `counter`.
  Algebra counted(OpCounter& counter) const { return Algebra(prm_, &counter); }

  // -- construction / reduction ------------------------------------------
  Scalar scalar(std::uint64_t v) const { return {v % prm_.q}; }
  G1Elem g1(std::uint64_t v) const { return {v % prm_.q}; }
  G2Elem g2(std::uint64_t v) const { return {v % prm_.q}; }
  // Throws CodecError if v is not in the order-q subgroup.
  GTElem gt(std::uint64_t v) const;
  bool in_gt(std::uint64_t v) const;

  // -- G1 / G2 group law (counted) ---------------------------------------
  G1Elem add(G1Elem a, G1Elem b) const;
  G2Elem add(G2Elem a, G2Elem b) const;
  G1Elem neg(G1Elem a) const { return {a.v ? prm_.q - a.v : 0}; }
  G2Elem neg(G2Elem a) const { return {a.v ? prm_.q - a.v : 0}; }
  G1Elem sub(G1Elem a, G1Elem b) const { return add(a, neg(b)); }
  G2Elem sub(G2Elem a, G2Elem b) const { return add(a, neg(b)); }
  G1Elem mul(Scalar k, G1Elem a) const;
  G2Elem mul(Scalar k, G2Elem a) const;

  // -- pairing (counted) ---------------------------------------------------
  GTElem pair(G1Elem a, G2Elem b) const;

  // -- GT group law (counted) ----------------------------------------------
  GTElem gt_one() const { return {1}; }
  GTElem gt_mul(GTElem a, GTElem b) const;
  GTElem gt_inv(GTElem a) const;  // exponentiation by p-2
  GTElem gt_pow(GTElem a, Scalar k) const;

  // -- Z_q bookkeeping (not counted) ---------------------------------------
  Scalar s_add(Scalar a, Scalar b) const { return {(a.v + b.v) % prm_.q}; }
  Scalar s_sub(Scalar a, Scalar b) const { return {(a.v + prm_.q - b.v) % prm_.q}; }
  Scalar s_neg(Scalar a) const { return {a.v ? prm_.q - a.v : 0}; }
  Scalar s_mul(Scalar a, Scalar b) const;

  // -- seeded sampling (not counted) ----------------------------------------
  Scalar random_scalar(Rng& rng) const { return {rng.below(prm_.q)}; }
  Scalar random_nonzero_scalar(Rng& rng) const { return {rng.nonzero_below(prm_.q)}; }
  G1Elem random_g1(Rng& rng) const { return {rng.below(prm_.q)}; }
  G2Elem random_g2(Rng& rng) const { return {rng.below(prm_.q)}; }
  // Uniform over the whole order-q subgroup (includes the unit).
  GTElem random_gt(Rng& rng) const;

 private:
  PairingParams prm_;
  OpCounter* counter_;
};

}  // namespace pairlab

#endif  // PAIRLAB_ALGEBRA_HPP
