#ifndef PAIRLAB_CODEC_HPP
#define PAIRLAB_CODEC_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pairlab/algebra.hpp"
#include "pairlab/protocols.hpp"
#include "pairlab/randtable.hpp"
#include "pairlab/simnet.hpp"

namespace pairlab {

// Key order is meaningful for byte-stable files.
using Json = nlohmann::ordered_json;

// Canonical element encoding: decimal strings. Decoding is strict: digits
// only, no leading zeros, value inside the group.
std::string encode_u64(std::uint64_t v);
std::uint64_t decode_u64(const Json& j);

Json params_to_json(const PairingParams& p);
PairingParams params_from_json(const Json& j);  // validates

Json tuple_to_json(const SixTuple& t);  // generation scalars never exported
SixTuple tuple_from_json(const Algebra& alg, const Json& j);

Json table_to_json(const PairingParams& params, const RandTable& table);
RandTable table_from_json(const Json& j, PairingParams& params_out);

Json query_to_json(const Query& q);
Query query_from_json(const Algebra& alg, const Json& j);

Json response_to_json(const Response& r);
Response response_from_json(const Algebra& alg, const Json& j);

// Serialized size of a message payload under the canonical encoding.
std::uint64_t payload_bytes(const ChannelMessage& m);

Json message_to_json(const ChannelMessage& m);
std::string transcript_to_jsonl(const Transcript& t);  // one message per line

Json op_counter_to_json(const OpCounter& c);
Json cost_report_to_json(const CostReport& c);
Json cost_comparison_to_json(const CostComparison& c);

// Core session summary: verdict, output vs truth, costs. Callers may attach
// further fields (residuals, eavesdropping results).
Json session_to_json(const SessionResult& r);

}  // namespace pairlab

#endif  // PAIRLAB_CODEC_HPP
