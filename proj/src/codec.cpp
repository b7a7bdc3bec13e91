#include "pairlab/codec.hpp"

#include <charconv>

#include "pairlab/errors.hpp"

namespace pairlab {
namespace {

std::uint64_t decode_string(const std::string& s) {
  if (s.empty()) throw CodecError("empty element encoding");
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw CodecError("not a decimal element encoding: \"" + s + "\"");
  }
  if (std::to_string(v) != s) throw CodecError("non-canonical element encoding: \"" + s + "\"");
  return v;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw CodecError(std::string("missing field \"") + key + "\"");
  return *it;
}

G1Elem decode_g1(const Algebra& alg, const Json& j) {
  std::uint64_t v = decode_u64(j);
  if (v >= alg.params().q) throw CodecError("G1 element out of range: " + std::to_string(v));
  return {v};
}

G2Elem decode_g2(const Algebra& alg, const Json& j) {
  std::uint64_t v = decode_u64(j);
  if (v >= alg.params().q) throw CodecError("G2 element out of range: " + std::to_string(v));
  return {v};
}

GTElem decode_gt(const Algebra& alg, const Json& j) { return alg.gt(decode_u64(j)); }

}  // namespace

std::string encode_u64(std::uint64_t v) { return std::to_string(v); }

std::uint64_t decode_u64(const Json& j) {
  if (!j.is_string()) throw CodecError("element encodings are decimal strings");
  return decode_string(j.get<std::string>());
}

Json params_to_json(const PairingParams& p) {
  return Json{{"q", encode_u64(p.q)}, {"p", encode_u64(p.p)}, {"gt_gen", encode_u64(p.gt_gen)}};
}

PairingParams params_from_json(const Json& j) {
  PairingParams p{decode_u64(field(j, "q")), decode_u64(field(j, "p")),
                  decode_u64(field(j, "gt_gen"))};
  p.validate();
  return p;
}

Json tuple_to_json(const SixTuple& t) {
  return Json{{"base1", encode_u64(t.base1.v)},   {"base2", encode_u64(t.base2.v)},
              {"blind1", encode_u64(t.blind1.v)}, {"cross", encode_u64(t.cross.v)},
              {"blind2", encode_u64(t.blind2.v)}, {"pairing", encode_u64(t.pairing.v)}};
}

SixTuple tuple_from_json(const Algebra& alg, const Json& j) {
  SixTuple t;
  t.base1 = decode_g1(alg, field(j, "base1"));
  t.base2 = decode_g2(alg, field(j, "base2"));
  t.blind1 = decode_g1(alg, field(j, "blind1"));
  t.cross = decode_g1(alg, field(j, "cross"));
  t.blind2 = decode_g2(alg, field(j, "blind2"));
  t.pairing = decode_gt(alg, field(j, "pairing"));
  // The one derived entry checkable without the generation scalars.
  if (t.pairing != Algebra(alg.params()).pair(t.blind1, t.blind2)) {
    throw CodecError("six-tuple pairing entry does not match its blinders");
  }
  return t;
}

Json table_to_json(const PairingParams& params, const RandTable& table) {
  Json rows = Json::array();
  for (const SixTuple& t : table.rows()) rows.push_back(tuple_to_json(t));
  return Json{{"params", params_to_json(params)}, {"rows", std::move(rows)}};
}

RandTable table_from_json(const Json& j, PairingParams& params_out) {
  params_out = params_from_json(field(j, "params"));
  Algebra alg(params_out);
  std::vector<SixTuple> rows;
  for (const Json& row : field(j, "rows")) rows.push_back(tuple_from_json(alg, row));
  return RandTable(std::move(rows));
}

Json query_to_json(const Query& q) {
  Json out = Json::array();
  for (const auto& [a, b] : q.pairs) out.push_back(Json{encode_u64(a.v), encode_u64(b.v)});
  return out;
}

Query query_from_json(const Algebra& alg, const Json& j) {
  if (!j.is_array()) throw CodecError("query payload must be an array of pairs");
  Query q;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw CodecError("query entries are element pairs");
    q.pairs.emplace_back(decode_g1(alg, pair[0]), decode_g2(alg, pair[1]));
  }
  return q;
}

Json response_to_json(const Response& r) {
  Json out = Json::array();
  for (GTElem v : r.values) out.push_back(encode_u64(v.v));
  return out;
}

Response response_from_json(const Algebra& alg, const Json& j) {
  if (!j.is_array()) throw CodecError("response payload must be an array");
  Response r;
  for (const Json& v : j) r.values.push_back(decode_gt(alg, v));
  return r;
}

std::uint64_t payload_bytes(const ChannelMessage& m) {
  const Json payload = m.is_query() ? query_to_json(m.query()) : response_to_json(m.response());
  return payload.dump().size();
}

Json message_to_json(const ChannelMessage& m) {
  return Json{{"protocol", protocol_to_string(m.protocol)},
              {"session", m.session},
              {"channel", channel_endpoint(m.channel)},
              {"direction", channel_to_string(m.channel)},
              {"kind", m.is_query() ? "query" : "response"},
              {"encrypted", m.encrypted},
              {"payload", m.is_query() ? query_to_json(m.query()) : response_to_json(m.response())}};
}

std::string transcript_to_jsonl(const Transcript& t) {
  std::string out;
  for (const ChannelMessage& m : t) {
    out += message_to_json(m).dump();
    out += '\n';
  }
  return out;
}

Json op_counter_to_json(const OpCounter& c) {
  return Json{{"pairings", c.pairings},   {"scalar_muls", c.scalar_muls},
              {"group_adds", c.group_adds}, {"gt_muls", c.gt_muls},
              {"gt_pows", c.gt_pows},     {"gt_invs", c.gt_invs}};
}

Json cost_report_to_json(const CostReport& c) {
  Json channels = Json::object();
  for (std::size_t i = 0; i < kChannelCount; ++i) {
    if (c.channels[i].messages == 0) continue;
    channels[channel_to_string(static_cast<Channel>(i))] =
        Json{{"messages", c.channels[i].messages}, {"bytes", c.channels[i].bytes}};
  }
  return Json{{"outsourcer", op_counter_to_json(c.outsourcer)},
              {"server_u1", op_counter_to_json(c.server_u1)},
              {"server_u2", op_counter_to_json(c.server_u2)},
              {"trusted_setup", op_counter_to_json(c.trusted_setup)},
              {"channels", std::move(channels)},
              {"tuples_consumed", c.tuples_consumed}};
}

Json cost_comparison_to_json(const CostComparison& cmp) {
  Json out = Json::object();
  for (const auto& [protocol, s] : cmp.entries) {
    const double sessions = double(s.sessions);
    const std::uint64_t outsourcer_ops = s.outsourcer.pairings + s.outsourcer.scalar_muls +
                                         s.outsourcer.group_adds + s.outsourcer.gt_muls +
                                         s.outsourcer.gt_pows + s.outsourcer.gt_invs;
    // what the delegation buys (pairings done elsewhere) against what it
    // costs on the wire; the verdict is left to the reader
    Json derived{{"bytes_per_session", double(s.bytes) / sessions},
                 {"delegated_pairings_per_session", double(s.servers.pairings) / sessions},
                 {"outsourcer_ops_per_session", double(outsourcer_ops) / sessions},
                 {"bytes_per_delegated_pairing",
                  s.servers.pairings ? double(s.bytes) / double(s.servers.pairings) : 0.0}};
    out[protocol_to_string(protocol)] =
        Json{{"sessions", s.sessions},
             {"outsourcer", op_counter_to_json(s.outsourcer)},
             {"servers", op_counter_to_json(s.servers)},
             {"trusted_setup", op_counter_to_json(s.trusted_setup)},
             {"tuples_consumed", s.tuples_consumed},
             {"messages", s.messages},
             {"bytes", s.bytes},
             {"response_gt_values", s.response_gt_values},
             {"derived", std::move(derived)}};
  }
  return out;
}

Json session_to_json(const SessionResult& r) {
  Json j{{"session", r.session_id},
         {"protocol", protocol_to_string(r.protocol)},
         {"a", encode_u64(r.input_a.v)},
         {"b", encode_u64(r.input_b.v)},
         {"verdict", verdict_to_string(r.verdict)},
         {"truth", encode_u64(r.truth.v)}};
  if (r.output) {
    j["output"] = encode_u64(r.output->v);
    j["output_equals_truth"] = (*r.output == r.truth);
  } else {
    j["output"] = nullptr;
  }
  j["costs"] = cost_report_to_json(r.costs);
  return j;
}

}  // namespace pairlab
