#ifndef PAIRLAB_SIMNET_HPP
#define PAIRLAB_SIMNET_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pairlab/adversaries.hpp"
#include "pairlab/algebra.hpp"
#include "pairlab/protocols.hpp"
#include "pairlab/randtable.hpp"

namespace pairlab {

enum class Protocol { chen, revised, cm };

Protocol protocol_from_string(const std::string& s);
std::string protocol_to_string(Protocol p);

// Directed channels. The two-server protocols use the first four, the
// single-server protocol the last two.
enum class Channel { t_to_u1, t_to_u2, u1_to_t, u2_to_t, t_to_u, u_to_t };
inline constexpr std::size_t kChannelCount = 6;

std::string channel_to_string(Channel c);  // directed, e.g. "T->U1"
std::string channel_endpoint(Channel c);   // server id: "U1", "U2", or "U"

struct ChannelMessage {
  std::uint64_t session = 0;
  Protocol protocol = Protocol::chen;
  Channel channel = Channel::t_to_u1;
  std::variant<Query, Response> payload;
  bool encrypted = false;

  bool is_query() const { return payload.index() == 0; }
  const Query& query() const { return std::get<Query>(payload); }
  const Response& response() const { return std::get<Response>(payload); }
};

// Ordered message log of one or more sessions.
using Transcript = std::vector<ChannelMessage>;

struct ChannelStat {
  std::uint64_t messages = 0;
  std::uint64_t bytes = 0;
  bool operator==(const ChannelStat&) const = default;
};

// Per-party operation counts and per-channel traffic for one session.
// Trusted-setup counts are the provisioning cost of the table rows the
// session consumed.
struct CostReport {
  OpCounter outsourcer;
  OpCounter server_u1;  // the only server, for the single-server protocol
  OpCounter server_u2;
  OpCounter trusted_setup;
  std::array<ChannelStat, kChannelCount> channels{};
  std::uint64_t tuples_consumed = 0;

  ChannelStat& channel(Channel c) { return channels[static_cast<std::size_t>(c)]; }
  const ChannelStat& channel(Channel c) const { return channels[static_cast<std::size_t>(c)]; }
  std::uint64_t total_bytes() const;
  std::uint64_t total_messages() const;
};

enum class Verdict { accepted, rejected, no_verification };

std::string verdict_to_string(Verdict v);

struct SessionResult {
  Protocol protocol = Protocol::chen;
  std::uint64_t session_id = 0;
  G1Elem input_a;
  G2Elem input_b;
  Verdict verdict = Verdict::accepted;
  std::optional<GTElem> output;  // absent iff rejected
  GTElem truth;                  // direct pairing oracle, behavior-independent
  Transcript transcript;
  CostReport costs;
};

struct SessionConfig {
  std::uint64_t session_id = 0;
  G1Elem a;
  G2Elem b;
  BehaviorSpec u1;  // the single server, for the single-server protocol
  BehaviorSpec u2;  // ignored by the single-server protocol
  bool encrypted = false;
  std::uint64_t encryption_overhead = 0;  // extra bytes per encrypted message
  std::uint64_t seed = 0;
};

// Two-server session: prepare -> send -> evaluate -> (verify) -> recover.
// protocol must be chen or revised; consumes rows from `table`.
SessionResult run_session(Protocol protocol, const PairingParams& params,
                          const SessionConfig& cfg, RandTable& table);

// Single-server session against the given setup.
SessionResult run_cm_session(const PairingParams& params, const SessionConfig& cfg,
                             const CMSetup& setup);

// The wiretap composition: subtract the U2 blinders from the U1 blinded
// inputs. Returns the inputs exactly when the tapped queries are in the
// clear, nullopt when either is encrypted. Throws MalformedTranscript on a
// transcript without the two-server query layout.
std::optional<std::pair<G1Elem, G2Elem>> eavesdrop_recover(const PairingParams& params,
                                                           const Transcript& transcript);

// Per-protocol aggregate of session costs. Raw counts only; no verdict on
// whether delegation pays off.
struct ProtocolCostSummary {
  std::uint64_t sessions = 0;
  OpCounter outsourcer;
  OpCounter servers;  // both servers combined
  OpCounter trusted_setup;
  std::uint64_t tuples_consumed = 0;
  std::uint64_t messages = 0;
  std::uint64_t bytes = 0;
  std::uint64_t response_gt_values = 0;  // GT elements moved server -> outsourcer
};

struct CostComparison {
  // Fixed order: chen, revised, cm; entry present iff the input had sessions
  // of that protocol.
  std::vector<std::pair<Protocol, ProtocolCostSummary>> entries;
};

CostComparison compare_costs(const std::vector<SessionResult>& results);

// Aligned-column rendering of a comparison.
std::string format_cost_table(const CostComparison& cmp);

}  // namespace pairlab

#endif  // PAIRLAB_SIMNET_HPP
