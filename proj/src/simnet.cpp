#include "pairlab/simnet.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pairlab/codec.hpp"
#include "pairlab/errors.hpp"

namespace pairlab {
namespace {

// Per-session, per-channel behavior seed, so scenario-level behavior seeds
// decorrelate across sessions.
std::uint64_t behavior_seed(std::uint64_t session_seed, unsigned channel_tag,
                            std::uint64_t spec_seed) {
  return derive_seed(derive_seed(session_seed, channel_tag), spec_seed);
}

void record(SessionResult& result, ChannelMessage msg, std::uint64_t overhead) {
  ChannelStat& stat = result.costs.channel(msg.channel);
  stat.messages += 1;
  stat.bytes += payload_bytes(msg) + (msg.encrypted ? overhead : 0);
  result.transcript.push_back(std::move(msg));
}

OpCounter scaled(OpCounter c, std::uint64_t n) {
  c.pairings *= n;
  c.scalar_muls *= n;
  c.group_adds *= n;
  c.gt_muls *= n;
  c.gt_pows *= n;
  c.gt_invs *= n;
  return c;
}

}  // namespace

Protocol protocol_from_string(const std::string& s) {
  if (s == "chen") return Protocol::chen;
  if (s == "revised") return Protocol::revised;
  if (s == "cm") return Protocol::cm;
  throw ConfigError("unknown protocol: " + s);
}

std::string protocol_to_string(Protocol p) {
  switch (p) {
    case Protocol::chen: return "chen";
    case Protocol::revised: return "revised";
    case Protocol::cm: return "cm";
  }
  throw ConfigError("unknown protocol");
}

std::string channel_to_string(Channel c) {
  switch (c) {
    case Channel::t_to_u1: return "T->U1";
    case Channel::t_to_u2: return "T->U2";
    case Channel::u1_to_t: return "U1->T";
    case Channel::u2_to_t: return "U2->T";
    case Channel::t_to_u: return "T->U";
    case Channel::u_to_t: return "U->T";
  }
  throw ConfigError("unknown channel");
}

std::string channel_endpoint(Channel c) {
  switch (c) {
    case Channel::t_to_u1:
    case Channel::u1_to_t: return "U1";
    case Channel::t_to_u2:
    case Channel::u2_to_t: return "U2";
    case Channel::t_to_u:
    case Channel::u_to_t: return "U";
  }
  throw ConfigError("unknown channel");
}

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::no_verification: return "no_verification";
  }
  throw ConfigError("unknown verdict");
}

std::uint64_t CostReport::total_bytes() const {
  std::uint64_t n = 0;
  for (const ChannelStat& s : channels) n += s.bytes;
  return n;
}

std::uint64_t CostReport::total_messages() const {
  std::uint64_t n = 0;
  for (const ChannelStat& s : channels) n += s.messages;
  return n;
}

SessionResult run_session(Protocol protocol, const PairingParams& params,
                          const SessionConfig& cfg, RandTable& table) {
  if (protocol != Protocol::chen && protocol != Protocol::revised) {
    throw ConfigError("run_session with a table expects a two-server protocol");
  }
  const bool chen = (protocol == Protocol::chen);

  SessionResult result;
  result.protocol = protocol;
  result.session_id = cfg.session_id;
  result.input_a = cfg.a;
  result.input_b = cfg.b;
  result.truth = Algebra(params).pair(cfg.a, cfg.b);

  OpCounter t_ops, u1_ops, u2_ops;
  Algebra t_alg(params, &t_ops);
  Algebra u1_alg(params, &u1_ops);
  Algebra u2_alg(params, &u2_ops);

  ChenPrepared prep = chen ? chen_prepare(t_alg, cfg.a, cfg.b, table)
                           : revised_prepare(t_alg, cfg.a, cfg.b, table);

  BehaviorSpec u1_spec = cfg.u1;
  u1_spec.seed = behavior_seed(cfg.seed, 1, cfg.u1.seed);
  BehaviorSpec u2_spec = cfg.u2;
  u2_spec.seed = behavior_seed(cfg.seed, 2, cfg.u2.seed);
  ServerBehavior u1(u1_spec, params);
  ServerBehavior u2(u2_spec, params);

  // U1 exchange first, then U2; fixed order keeps transcripts deterministic.
  record(result, {cfg.session_id, protocol, Channel::t_to_u1, prep.to_u1, cfg.encrypted},
         cfg.encryption_overhead);
  Response r1 = u1.respond(u1_alg, prep.to_u1);
  record(result, {cfg.session_id, protocol, Channel::u1_to_t, r1, cfg.encrypted},
         cfg.encryption_overhead);

  record(result, {cfg.session_id, protocol, Channel::t_to_u2, prep.to_u2, cfg.encrypted},
         cfg.encryption_overhead);
  Response r2 = u2.respond(u2_alg, prep.to_u2);
  record(result, {cfg.session_id, protocol, Channel::u2_to_t, r2, cfg.encrypted},
         cfg.encryption_overhead);

  if (chen) {
    if (chen_verify(r1, r2)) {
      result.verdict = Verdict::accepted;
      result.output = chen_recover(t_alg, r1, r2, prep.secrets);
    } else {
      result.verdict = Verdict::rejected;
    }
  } else {
    result.verdict = Verdict::no_verification;
    result.output = revised_recover(t_alg, r1, r2, prep.secrets);
  }

  result.costs.outsourcer = t_ops;
  result.costs.server_u1 = u1_ops;
  result.costs.server_u2 = u2_ops;
  result.costs.tuples_consumed = chen ? 3 : 1;
  result.costs.trusted_setup = scaled(per_row_setup_cost(), result.costs.tuples_consumed);
  return result;
}

SessionResult run_cm_session(const PairingParams& params, const SessionConfig& cfg,
                             const CMSetup& setup) {
  SessionResult result;
  result.protocol = Protocol::cm;
  result.session_id = cfg.session_id;
  result.input_a = cfg.a;
  result.input_b = cfg.b;
  result.truth = Algebra(params).pair(cfg.a, cfg.b);

  OpCounter t_ops, u_ops;
  Algebra t_alg(params, &t_ops);
  Algebra u_alg(params, &u_ops);

  Rng key_rng(derive_seed(cfg.seed, 0x5E55));
  CMPrepared prep = cm_prepare(t_alg, cfg.a, cfg.b, setup, key_rng);

  BehaviorSpec u_spec = cfg.u1;
  u_spec.seed = behavior_seed(cfg.seed, 1, cfg.u1.seed);
  ServerBehavior u(u_spec, params);

  record(result, {cfg.session_id, Protocol::cm, Channel::t_to_u, prep.to_server, cfg.encrypted},
         cfg.encryption_overhead);
  Response resp = u.respond(u_alg, prep.to_server);
  record(result, {cfg.session_id, Protocol::cm, Channel::u_to_t, resp, cfg.encrypted},
         cfg.encryption_overhead);

  GTElem recovered = cm_recover(t_alg, resp, prep.secrets);
  if (cm_verify(t_alg, resp, recovered, prep.secrets)) {
    result.verdict = Verdict::accepted;
    result.output = recovered;
  } else {
    result.verdict = Verdict::rejected;
  }

  result.costs.outsourcer = t_ops;
  result.costs.server_u1 = u_ops;
  return result;
}

std::optional<std::pair<G1Elem, G2Elem>> eavesdrop_recover(const PairingParams& params,
                                                           const Transcript& transcript) {
  const ChannelMessage* to_u1 = nullptr;
  const ChannelMessage* to_u2 = nullptr;
  for (const ChannelMessage& m : transcript) {
    if (!m.is_query()) continue;
    if (m.channel == Channel::t_to_u1 && !to_u1) to_u1 = &m;
    if (m.channel == Channel::t_to_u2 && !to_u2) to_u2 = &m;
  }
  if (!to_u1 || !to_u2) {
    throw MalformedTranscript("eavesdropping needs the two-server query layout");
  }
  if (to_u1->encrypted || to_u2->encrypted) return std::nullopt;

  const Query& q1 = to_u1->query();
  const Query& q2 = to_u2->query();
  if (q1.pairs.size() < 2 || q2.pairs.size() < 2) {
    throw MalformedTranscript("tapped queries are too short");
  }
  Algebra alg(params);
  // first U1 pair carries (A + blind1, B + blind2); U2 exposes blind1 in its
  // second pair and blind2 in its first.
  G1Elem a = alg.sub(q1.pairs[0].first, q2.pairs[1].first);
  G2Elem b = alg.sub(q1.pairs[0].second, q2.pairs[0].second);
  return std::make_pair(a, b);
}

CostComparison compare_costs(const std::vector<SessionResult>& results) {
  if (results.empty()) throw ConfigError("compare_costs: empty result list");
  CostComparison cmp;
  for (Protocol p : {Protocol::chen, Protocol::revised, Protocol::cm}) {
    ProtocolCostSummary s;
    for (const SessionResult& r : results) {
      if (r.protocol != p) continue;
      s.sessions += 1;
      s.outsourcer += r.costs.outsourcer;
      s.servers += r.costs.server_u1;
      s.servers += r.costs.server_u2;
      s.trusted_setup += r.costs.trusted_setup;
      s.tuples_consumed += r.costs.tuples_consumed;
      s.messages += r.costs.total_messages();
      s.bytes += r.costs.total_bytes();
      for (const ChannelMessage& m : r.transcript) {
        if (!m.is_query()) s.response_gt_values += m.response().values.size();
      }
    }
    if (s.sessions > 0) cmp.entries.emplace_back(p, s);
  }
  return cmp;
}

std::string format_cost_table(const CostComparison& cmp) {
  std::ostringstream out;
  out << std::left << std::setw(9) << "protocol" << std::right << std::setw(9) << "sessions"
      << std::setw(8) << "T.pair" << std::setw(8) << "T.smul" << std::setw(8) << "T.add"
      << std::setw(9) << "T.gtmul" << std::setw(9) << "T.gtpow" << std::setw(9) << "T.gtinv"
      << std::setw(10) << "srv.pair" << std::setw(8) << "tuples" << std::setw(7) << "msgs"
      << std::setw(10) << "bytes" << std::setw(9) << "resp.gt" << '\n';
  for (const auto& [protocol, s] : cmp.entries) {
    out << std::left << std::setw(9) << protocol_to_string(protocol) << std::right << std::setw(9)
        << s.sessions << std::setw(8) << s.outsourcer.pairings << std::setw(8)
        << s.outsourcer.scalar_muls << std::setw(8) << s.outsourcer.group_adds << std::setw(9)
        << s.outsourcer.gt_muls << std::setw(9) << s.outsourcer.gt_pows << std::setw(9)
        << s.outsourcer.gt_invs << std::setw(10) << s.servers.pairings << std::setw(8)
        << s.tuples_consumed << std::setw(7) << s.messages << std::setw(10) << s.bytes
        << std::setw(9) << s.response_gt_values << '\n';
  }
  return out.str();
}

}  // namespace pairlab
