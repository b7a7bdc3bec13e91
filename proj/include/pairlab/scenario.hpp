#ifndef PAIRLAB_SCENARIO_HPP
#define PAIRLAB_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pairlab/adversaries.hpp"
#include "pairlab/codec.hpp"
#include "pairlab/simnet.hpp"

namespace pairlab {

// What a scenario claims about every one of its sessions; the run's exit
// status is the claim's truth value.
enum class Expectation {
  honest_correct,     // output present and equal to the truth
  attack_undetected,  // verdict accepted yet output != truth
  all_rejected,       // verdict rejected
  eavesdrop_recovers, // wiretap returns exactly (A, B)
  eavesdrop_blocked,  // wiretap returns nothing
};

Expectation expectation_from_string(const std::string& s);
std::string expectation_to_string(Expectation e);

// A declarative experiment: protocol, parameters, inputs, behaviors, and the
// expectation to enforce.
struct Scenario {
  std::string name;
  Protocol protocol = Protocol::chen;
  PairingParams params;
  std::uint64_t seed = 0;

  // inputs: exactly one mode
  std::optional<std::pair<G1Elem, G2Elem>> explicit_input;
  std::optional<std::uint64_t> random_count;
  bool exhaustive = false;

  BehaviorSpec u1;
  BehaviorSpec u2;
  bool encrypted = false;
  std::uint64_t encryption_overhead = 0;
  Expectation expect = Expectation::honest_correct;

  std::optional<std::uint64_t> table_seed;   // default derived from seed
  std::optional<std::uint64_t> table_size;   // default: sessions * rows-per-session
  std::optional<std::filesystem::path> table_file;
  std::optional<std::uint64_t> setup_seed;   // single-server base points
};

// Parses and validates a scenario config. Relative file references resolve
// against the config's directory. Throws ConfigError on any problem.
Scenario load_scenario(const std::filesystem::path& config_path);
Scenario scenario_from_json(const Json& j, const std::filesystem::path& base_dir);

struct ScenarioOutcome {
  bool expectation_met = false;
  std::vector<std::string> violations;  // one line per violating session
  Json report;                          // full summary document
  std::string transcript_jsonl;         // all sessions, one message per line
  std::vector<SessionResult> results;
};

// Runs every session of the scenario; pure compute, no files touched.
ScenarioOutcome run_scenario(const Scenario& scenario,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

// Runs and writes <name>.report.json and <name>.transcript.jsonl to out_dir.
ScenarioOutcome run_scenario_to_files(const Scenario& scenario,
                                      const std::filesystem::path& out_dir,
                                      std::optional<std::uint64_t> seed_override = std::nullopt);

// Fixture generation: params.json plus rand_table.json, reproducible per
// seed. table_rows must be >= 1.
void gen_fixtures(const PairingParams& params, std::size_t table_rows, std::uint64_t table_seed,
                  const std::filesystem::path& out_dir);

}  // namespace pairlab

#endif  // PAIRLAB_SCENARIO_HPP
