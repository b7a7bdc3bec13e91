#include "pairlab/randtable.hpp"

#include <string>

#include "pairlab/errors.hpp"

namespace pairlab {

SixTuple make_six_tuple(const Algebra& alg, Scalar s1, Scalar s2, G1Elem base1, G2Elem base2) {
  if (s1.v == 0 || s2.v == 0) throw ConfigError("six-tuple scalars must be nonzero");
  SixTuple t;
  t.base1 = base1;
  t.base2 = base2;
  t.blind1 = alg.mul(s1, base1);
  t.cross = alg.mul(s2, base1);
  t.blind2 = alg.mul(s2, base2);
  t.pairing = alg.pair(t.blind1, t.blind2);
  t.secrets = SixTuple::Secrets{s1, s2};
  return t;
}

std::vector<SixTuple> RandTable::take_tuples(std::size_t k) {
  if (cursor_ + k > rows_.size()) {
    throw TableExhausted("table exhausted: need " + std::to_string(k) + " rows, " +
                         std::to_string(rows_.size() - cursor_) + " remain");
  }
  std::vector<SixTuple> out(rows_.begin() + cursor_, rows_.begin() + cursor_ + k);
  cursor_ += k;
  return out;
}

RandTable generate_table(const Algebra& alg, std::size_t n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x7AB1E));
  std::vector<SixTuple> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s1 = alg.random_nonzero_scalar(rng);
    Scalar s2 = alg.random_nonzero_scalar(rng);
    G1Elem base1 = alg.random_g1(rng);
    G2Elem base2 = alg.random_g2(rng);
    rows.push_back(make_six_tuple(alg, s1, s2, base1, base2));
  }
  return RandTable(std::move(rows));
}

OpCounter per_row_setup_cost() {
  OpCounter c;
  c.scalar_muls = 3;
  c.pairings = 1;
  return c;
}

}  // namespace pairlab
