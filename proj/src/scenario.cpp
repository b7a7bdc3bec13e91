#include "pairlab/scenario.hpp"

#include <fstream>

#include "pairlab/errors.hpp"

namespace pairlab {
namespace {

namespace fs = std::filesystem;

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("parse error in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

PairingParams resolve_params(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("\"params\" must be an object");
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "desk") return PairingParams::desk_scale();
    if (preset == "large") return PairingParams::large_scale();
    throw ConfigError("unknown params preset: " + preset);
  }
  if (j.contains("file")) {
    return params_from_json(read_json_file(base_dir / j.at("file").get<std::string>()));
  }
  if (j.contains("bits")) {
    return make_params(j.at("bits").get<unsigned>(), j.value("seed", 0ull));
  }
  if (j.contains("p") || j.contains("gt_gen")) return params_from_json(j);
  if (j.contains("q")) return params_from_q(decode_u64(j.at("q")));
  throw ConfigError("\"params\" needs one of preset/file/bits/q");
}

BehaviorSpec behavior_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("behavior must be an object");
  BehaviorSpec spec;
  spec.kind = BehaviorSpec::kind_from_string(j.value("kind", std::string("honest")));
  spec.seed = j.value("seed", 0ull);
  if (spec.kind == BehaviorSpec::Kind::index_tamper) {
    if (!j.contains("index")) throw ConfigError("index_tamper behavior needs \"index\"");
    spec.index = j.at("index").get<std::size_t>();
  }
  return spec;
}

std::uint64_t rows_per_session(Protocol p) {
  switch (p) {
    case Protocol::chen: return 3;
    case Protocol::revised: return 1;
    case Protocol::cm: return 0;
  }
  return 0;
}

struct ExpectationCheck {
  bool met = false;
  std::string detail;
};

ExpectationCheck check_expectation(Expectation expect, const SessionResult& r,
                                   const std::optional<std::pair<G1Elem, G2Elem>>& tapped) {
  const bool correct = r.output && *r.output == r.truth;
  switch (expect) {
    case Expectation::honest_correct:
      if (r.verdict == Verdict::rejected) return {false, "verdict=rejected"};
      if (!correct) return {false, "output differs from truth"};
      return {true, {}};
    case Expectation::attack_undetected:
      if (r.verdict == Verdict::rejected) return {false, "deviation was detected"};
      if (!r.output || *r.output == r.truth) return {false, "output not corrupted"};
      return {true, {}};
    case Expectation::all_rejected:
      if (r.verdict != Verdict::rejected) return {false, "verdict=" + verdict_to_string(r.verdict)};
      return {true, {}};
    case Expectation::eavesdrop_recovers:
      if (!tapped) return {false, "wiretap recovered nothing"};
      if (tapped->first != r.input_a || tapped->second != r.input_b) {
        return {false, "wiretap recovered wrong inputs"};
      }
      return {true, {}};
    case Expectation::eavesdrop_blocked:
      if (tapped) return {false, "wiretap recovered the inputs"};
      return {true, {}};
  }
  throw ConfigError("unknown expectation");
}

}  // namespace

Expectation expectation_from_string(const std::string& s) {
  if (s == "honest_correct") return Expectation::honest_correct;
  if (s == "attack_undetected") return Expectation::attack_undetected;
  if (s == "all_rejected") return Expectation::all_rejected;
  if (s == "eavesdrop_recovers") return Expectation::eavesdrop_recovers;
  if (s == "eavesdrop_blocked") return Expectation::eavesdrop_blocked;
  throw ConfigError("unknown expectation: " + s);
}

std::string expectation_to_string(Expectation e) {
  switch (e) {
    case Expectation::honest_correct: return "honest_correct";
    case Expectation::attack_undetected: return "attack_undetected";
    case Expectation::all_rejected: return "all_rejected";
    case Expectation::eavesdrop_recovers: return "eavesdrop_recovers";
    case Expectation::eavesdrop_blocked: return "eavesdrop_blocked";
  }
  throw ConfigError("unknown expectation");
}

namespace {
Scenario scenario_from_json_impl(const Json& j, const fs::path& base_dir);
}

Scenario scenario_from_json(const Json& j, const fs::path& base_dir) {
  try {
    return scenario_from_json_impl(j, base_dir);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad scenario config: ") + e.what());
  }
}

namespace {
Scenario scenario_from_json_impl(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("scenario config must be a JSON object");
  Scenario s;
  s.name = j.value("name", std::string("scenario"));
  if (!j.contains("protocol")) throw ConfigError("scenario needs \"protocol\"");
  s.protocol = protocol_from_string(j.at("protocol").get<std::string>());
  if (!j.contains("params")) throw ConfigError("scenario needs \"params\"");
  s.params = resolve_params(j.at("params"), base_dir);
  s.seed = j.value("seed", 0ull);

  if (!j.contains("inputs")) throw ConfigError("scenario needs \"inputs\"");
  const Json& inputs = j.at("inputs");
  if (inputs.contains("a") || inputs.contains("b")) {
    std::uint64_t a = decode_u64(inputs.at("a"));
    std::uint64_t b = decode_u64(inputs.at("b"));
    if (a >= s.params.q || b >= s.params.q) throw ConfigError("explicit input out of range");
    s.explicit_input = {G1Elem{a}, G2Elem{b}};
  } else if (inputs.contains("random")) {
    s.random_count = inputs.at("random").get<std::uint64_t>();
    if (*s.random_count < 1) throw ConfigError("\"random\" session count must be >= 1");
  } else if (inputs.value("exhaustive", false)) {
    if (s.params.q > 64) throw ConfigError("exhaustive inputs need q <= 64");
    s.exhaustive = true;
  } else {
    throw ConfigError("\"inputs\" needs a/b, random, or exhaustive");
  }

  if (j.contains("behaviors")) {
    const Json& b = j.at("behaviors");
    if (b.contains("u")) s.u1 = behavior_from_json(b.at("u"));
    if (b.contains("u1")) s.u1 = behavior_from_json(b.at("u1"));
    if (b.contains("u2")) s.u2 = behavior_from_json(b.at("u2"));
  }
  s.encrypted = j.value("encrypted", false);
  s.encryption_overhead = j.value("encryption_overhead", 0ull);

  if (!j.contains("expect")) throw ConfigError("scenario needs \"expect\"");
  s.expect = expectation_from_string(j.at("expect").get<std::string>());
  if ((s.expect == Expectation::eavesdrop_recovers || s.expect == Expectation::eavesdrop_blocked) &&
      s.protocol == Protocol::cm) {
    throw ConfigError("eavesdrop expectations apply to the two-server protocols only");
  }

  if (j.contains("table")) {
    const Json& t = j.at("table");
    if (t.contains("seed")) s.table_seed = t.at("seed").get<std::uint64_t>();
    if (t.contains("size")) {
      s.table_size = t.at("size").get<std::uint64_t>();
      if (*s.table_size < 1) throw ConfigError("table size must be >= 1");
    }
    if (t.contains("file")) s.table_file = base_dir / t.at("file").get<std::string>();
  }
  if (j.contains("setup_seed")) s.setup_seed = j.at("setup_seed").get<std::uint64_t>();
  return s;
}
}  // namespace

Scenario load_scenario(const fs::path& config_path) {
  Json j = read_json_file(config_path);
  Scenario s = scenario_from_json(j, config_path.parent_path());
  if (!j.contains("name")) s.name = config_path.stem().string();
  return s;
}

ScenarioOutcome run_scenario(const Scenario& scenario, std::optional<std::uint64_t> seed_override) {
  const PairingParams& params = scenario.params;
  const std::uint64_t seed = seed_override.value_or(scenario.seed);
  Algebra oracle(params);

  // inputs
  std::vector<std::pair<G1Elem, G2Elem>> inputs;
  if (scenario.explicit_input) {
    inputs.push_back(*scenario.explicit_input);
  } else if (scenario.random_count) {
    Rng rng(derive_seed(seed, 2));
    for (std::uint64_t i = 0; i < *scenario.random_count; ++i) {
      inputs.push_back({oracle.random_g1(rng), oracle.random_g2(rng)});
    }
  } else {
    for (std::uint64_t a = 0; a < params.q; ++a) {
      for (std::uint64_t b = 0; b < params.q; ++b) inputs.push_back({G1Elem{a}, G2Elem{b}});
    }
  }

  // table / single-server setup
  RandTable table;
  const std::uint64_t per_session = rows_per_session(scenario.protocol);
  if (scenario.protocol != Protocol::cm) {
    if (scenario.table_file) {
      PairingParams table_params;
      table = table_from_json(read_json_file(*scenario.table_file), table_params);
      if (table_params != params) throw ConfigError("table fixture params differ from scenario params");
    } else {
      std::uint64_t rows = scenario.table_size.value_or(per_session * inputs.size());
      table = generate_table(oracle, rows, scenario.table_seed.value_or(derive_seed(seed, 1)));
    }
  }
  CMSetup setup;
  if (scenario.protocol == Protocol::cm) {
    Rng rng(derive_seed(scenario.setup_seed.value_or(derive_seed(seed, 3)), 0xCE));
    setup = make_cm_setup(oracle, rng);
  }

  ScenarioOutcome outcome;
  Json sessions = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    SessionConfig cfg;
    cfg.session_id = i;
    cfg.a = inputs[i].first;
    cfg.b = inputs[i].second;
    cfg.u1 = scenario.u1;
    cfg.u2 = scenario.u2;
    cfg.encrypted = scenario.encrypted;
    cfg.encryption_overhead = scenario.encryption_overhead;
    cfg.seed = derive_seed(seed, 1000 + i);

    SessionResult r = scenario.protocol == Protocol::cm
                          ? run_cm_session(params, cfg, setup)
                          : run_session(scenario.protocol, params, cfg, table);

    std::optional<std::pair<G1Elem, G2Elem>> tapped;
    if (scenario.protocol != Protocol::cm) tapped = eavesdrop_recover(params, r.transcript);

    Json entry = session_to_json(r);
    if (r.output && *r.output != r.truth) {
      GTElem residual = oracle.gt_mul(*r.output, oracle.gt_inv(r.truth));
      entry["residual"] = encode_u64(residual.v);
      // With the substitution attack and a locally generated table the
      // corruption factor is predictable; check it right here.
      if (scenario.protocol != Protocol::cm &&
          scenario.u1.kind == BehaviorSpec::Kind::rho_substitution) {
        const SixTuple& v_row = table.rows()[i * per_session];
        const Response& from_u1 = r.transcript[1].response();
        if (v_row.secrets) {
          Scalar neg_sum = oracle.s_neg(oracle.s_add(v_row.secrets->s1, v_row.secrets->s2));
          GTElem predicted = oracle.gt_mul(
              oracle.gt_pow(oracle.pair(v_row.base1, v_row.base2), neg_sum),
              from_u1.values[kDeltaSlot]);
          entry["residual_predicted"] = encode_u64(predicted.v);
          entry["residual_matches"] = (predicted == residual);
        }
      }
    }
    if (scenario.protocol != Protocol::cm) {
      Json ev;
      if (tapped) {
        ev["recovered"] = Json{encode_u64(tapped->first.v), encode_u64(tapped->second.v)};
        ev["matches_inputs"] = (tapped->first == r.input_a && tapped->second == r.input_b);
      } else {
        ev["recovered"] = nullptr;
      }
      entry["eavesdrop"] = std::move(ev);
    }

    ExpectationCheck check = check_expectation(scenario.expect, r, tapped);
    if (!check.met) {
      outcome.violations.push_back("session " + std::to_string(i) + ": " + check.detail);
    }
    sessions.push_back(std::move(entry));
    outcome.results.push_back(std::move(r));
  }

  outcome.expectation_met = outcome.violations.empty();
  for (const SessionResult& r : outcome.results) {
    outcome.transcript_jsonl += transcript_to_jsonl(r.transcript);
  }

  outcome.report = Json{{"scenario", scenario.name},
                        {"protocol", protocol_to_string(scenario.protocol)},
                        {"params", params_to_json(params)},
                        {"seed", seed},
                        {"encrypted", scenario.encrypted},
                        {"expectation", expectation_to_string(scenario.expect)},
                        {"expectation_met", outcome.expectation_met},
                        {"sessions", std::move(sessions)},
                        {"cost_comparison", cost_comparison_to_json(compare_costs(outcome.results))},
                        {"violations", outcome.violations}};
  return outcome;
}

ScenarioOutcome run_scenario_to_files(const Scenario& scenario, const fs::path& out_dir,
                                      std::optional<std::uint64_t> seed_override) {
  ScenarioOutcome outcome = run_scenario(scenario, seed_override);
  fs::create_directories(out_dir);
  write_text_file(out_dir / (scenario.name + ".report.json"), outcome.report.dump(2) + "\n");
  write_text_file(out_dir / (scenario.name + ".transcript.jsonl"), outcome.transcript_jsonl);
  return outcome;
}

void gen_fixtures(const PairingParams& params, std::size_t table_rows, std::uint64_t table_seed,
                  const fs::path& out_dir) {
  if (table_rows < 1) throw ConfigError("fixture table needs at least one row");
  params.validate();
  fs::create_directories(out_dir);
  write_text_file(out_dir / "params.json", params_to_json(params).dump(2) + "\n");
  Algebra alg(params);
  RandTable table = generate_table(alg, table_rows, table_seed);
  write_text_file(out_dir / "rand_table.json", table_to_json(params, table).dump(2) + "\n");
}

}  // namespace pairlab
