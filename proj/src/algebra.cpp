#include "pairlab/algebra.hpp"

#include <string>

#include "pairlab/errors.hpp"

namespace pairlab {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases decide primality for every n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PairingParams params_from_q(u64 q) {
  if (!is_prime(q)) throw ConfigError("group order q must be prime, got " + std::to_string(q));
  constexpr u64 kMaxCofactor = 100000;
  u64 p = 0;
  for (u64 k = 2; k <= kMaxCofactor; k += 2) {
    u64 cand = k * q + 1;
    if (cand / k != q) break;  // overflow
    if (is_prime(cand)) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw ParamSearchError("no prime p = k*q + 1 found for q = " + std::to_string(q));
  // Smallest c of multiplicative order exactly q: c^q = 1 and c != 1.
  constexpr u64 kMaxGenScan = 1000000;
  for (u64 c = 2; c < kMaxGenScan && c < p; ++c) {
    if (pow_mod(c, q, p) == 1) return {q, p, c};
  }
  throw ParamSearchError("no order-q generator found for p = " + std::to_string(p));
}

PairingParams make_params(unsigned bits, u64 seed) {
  if (bits < 4 || bits > 40) throw ConfigError("make_params: bits must be in [4, 40]");
  Rng rng(derive_seed(seed, 0xA11CE));
  u64 lo = 1ull << (bits - 1);
  u64 hi = 1ull << bits;
  constexpr int kMaxAttempts = 100000;
  u64 cand = lo + rng.below(hi - lo);
  cand |= 1;
  for (int i = 0; i < kMaxAttempts; ++i) {
    if (cand >= hi) cand = lo | 1;
    if (is_prime(cand)) return params_from_q(cand);
    cand += 2;
  }
  throw ParamSearchError("make_params: no prime of requested size found");
}

PairingParams PairingParams::desk_scale() { return {11, 23, 2}; }

PairingParams PairingParams::large_scale() { return {2147483647ull, 98784247763ull, 95ull}; }

void PairingParams::validate() const {
  if (!is_prime(q)) throw ConfigError("params: q is not prime");
  if (!is_prime(p)) throw ConfigError("params: p is not prime");
  if ((p - 1) % q != 0) throw ConfigError("params: q does not divide p-1");
  if (gt_gen % p <= 1) throw ConfigError("params: gt_gen must not be the unit");
  if (pow_mod(gt_gen, q, p) != 1) throw ConfigError("params: gt_gen does not have order q");
}

OpCounter& OpCounter::operator+=(const OpCounter& o) {
  pairings += o.pairings;
  scalar_muls += o.scalar_muls;
  group_adds += o.group_adds;
  gt_muls += o.gt_muls;
  gt_pows += o.gt_pows;
  gt_invs += o.gt_invs;
  return *this;
}

bool Algebra::in_gt(u64 v) const {
  v %= prm_.p;
  return v != 0 && pow_mod(v, prm_.q, prm_.p) == 1;
}

GTElem Algebra::gt(u64 v) const {
  if (!in_gt(v)) throw CodecError("value " + std::to_string(v) + " is not in the order-q subgroup");
  return {v % prm_.p};
}

G1Elem Algebra::add(G1Elem a, G1Elem b) const {
  if (counter_) ++counter_->group_adds;
  return {(a.v + b.v) % prm_.q};
}

G2Elem Algebra::add(G2Elem a, G2Elem b) const {
  if (counter_) ++counter_->group_adds;
  return {(a.v + b.v) % prm_.q};
}

G1Elem Algebra::mul(Scalar k, G1Elem a) const {
  if (counter_) ++counter_->scalar_muls;
  return {mul_mod(k.v, a.v, prm_.q)};
}

G2Elem Algebra::mul(Scalar k, G2Elem a) const {
  if (counter_) ++counter_->scalar_muls;
  return {mul_mod(k.v, a.v, prm_.q)};
}

GTElem Algebra::pair(G1Elem a, G2Elem b) const {
  if (counter_) ++counter_->pairings;
  return {pow_mod(prm_.gt_gen, mul_mod(a.v, b.v, prm_.q), prm_.p)};
}

GTElem Algebra::gt_mul(GTElem a, GTElem b) const {
  if (counter_) ++counter_->gt_muls;
  return {mul_mod(a.v, b.v, prm_.p)};
}

GTElem Algebra::gt_inv(GTElem a) const {
  if (counter_) ++counter_->gt_invs;
  return {pow_mod(a.v, prm_.p - 2, prm_.p)};
}

GTElem Algebra::gt_pow(GTElem a, Scalar k) const {
  if (counter_) ++counter_->gt_pows;
  return {pow_mod(a.v, k.v, prm_.p)};
}

Scalar Algebra::s_mul(Scalar a, Scalar b) const { return {mul_mod(a.v, b.v, prm_.q)}; }

GTElem Algebra::random_gt(Rng& rng) const {
  return {pow_mod(prm_.gt_gen, rng.below(prm_.q), prm_.p)};
}

}  // namespace pairlab
