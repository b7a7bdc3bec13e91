#ifndef PAIRLAB_ADVERSARIES_HPP
#define PAIRLAB_ADVERSARIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pairlab/algebra.hpp"
#include "pairlab/protocols.hpp"
#include "pairlab/rng.hpp"

namespace pairlab {

// How a server answers queries.
//   honest            — pair every position.
//   semi_honest       — honest answers, but every query is logged.
//   rho_substitution  — honest answers except the delta slot, which is
//                       replaced by a random GT value != the honest one.
//   index_tamper      — honest answers with position `index` multiplied by a
//                       random factor != 1.
//   random_response   — every position uniform in the GT subgroup.
struct BehaviorSpec {
  enum class Kind { honest, semi_honest, rho_substitution, index_tamper, random_response };

  Kind kind = Kind::honest;
  std::size_t index = 0;  // index_tamper only
  std::uint64_t seed = 0;

  static Kind kind_from_string(const std::string& s);
  static std::string kind_to_string(Kind k);
};

// One server for one session run. Owns its randomness and its logs.
class ServerBehavior {
 public:
  ServerBehavior(const BehaviorSpec& spec, const PairingParams& params);

  // Answer a query under the configured behavior. `alg` carries the server's
  // cost counter. Throws ConfigError if a tamper index is out of range.
  Response respond(const Algebra& alg, const Query& query);

  // Everything the server has seen. Populated by semi_honest only.
  const std::vector<Query>& view() const { return view_; }

  // Substituted values / tamper factors, in injection order. Test hook.
  const std::vector<GTElem>& injected() const { return injected_; }

  const BehaviorSpec& spec() const { return spec_; }

 private:
  BehaviorSpec spec_;
  PairingParams params_;
  Rng rng_;
  std::vector<Query> view_;
  std::vector<GTElem> injected_;
};

}  // namespace pairlab

#endif  // PAIRLAB_ADVERSARIES_HPP
