#ifndef PAIRLAB_RANDTABLE_HPP
#define PAIRLAB_RANDTABLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pairlab/algebra.hpp"
#include "pairlab/rng.hpp"

namespace pairlab {

// One precomputed blinding row: two random bases, the derived points the
// protocols send, and the pairing of the two blinders.
struct SixTuple {
  G1Elem base1;   // random base in G1
  G2Elem base2;   // random base in G2
  G1Elem blind1;  // s1 * base1
  G1Elem cross;   // s2 * base1
  G2Elem blind2;  // s2 * base2
  GTElem pairing; // e(blind1, blind2), stored so the outsourcer never pairs

  // Generation-time scalars. Test oracles only: protocol code must not read
  // them, and they are never serialized. Absent on rows loaded from a file.
  struct Secrets {
    Scalar s1, s2;
    bool operator==(const Secrets&) const = default;
  };
  std::optional<Secrets> secrets;

  bool operator==(const SixTuple&) const = default;
};

// Derives the dependent entries from (s1, s2, base1, base2). s1, s2 must be
// nonzero. Pairing cost lands on `alg`'s counter (the trusted setup party).
SixTuple make_six_tuple(const Algebra& alg, Scalar s1, Scalar s2, G1Elem base1, G2Elem base2);

// The precomputed table provisioned by the trusted setup party. Rows are
// consumed strictly in order and never re-issued.
class RandTable {
 public:
  RandTable() = default;
  explicit RandTable(std::vector<SixTuple> rows) : rows_(std::move(rows)) {}

  // Next k rows; advances the cursor. Throws TableExhausted if fewer remain.
  std::vector<SixTuple> take_tuples(std::size_t k);

  std::size_t remaining() const { return rows_.size() - cursor_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t cursor() const { return cursor_; }
  const std::vector<SixTuple>& rows() const { return rows_; }

 private:
  std::vector<SixTuple> rows_;
  std::size_t cursor_ = 0;
};

// n independent rows from the seeded generator; deterministic per
// (n, params, seed). Setup-party costs land on `alg`'s counter.
RandTable generate_table(const Algebra& alg, std::size_t n, std::uint64_t seed);

// Provisioning cost of one row under the counting convention.
OpCounter per_row_setup_cost();

}  // namespace pairlab

#endif  // PAIRLAB_RANDTABLE_HPP
