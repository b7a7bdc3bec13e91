#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairlab/errors.hpp"
#include "pairlab/scenario.hpp"

namespace fs = std::filesystem;

namespace {

int cmd_run(const std::vector<std::string>& scenario_paths, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override, const std::string& format) {
  std::vector<pairlab::SessionResult> all_results;
  pairlab::Json summary = pairlab::Json::array();
  bool all_met = true;

  for (const std::string& path : scenario_paths) {
    pairlab::Scenario scenario = pairlab::load_scenario(path);
    pairlab::ScenarioOutcome outcome =
        pairlab::run_scenario_to_files(scenario, out_dir, seed_override);
    all_met = all_met && outcome.expectation_met;

    if (format == "text") {
      std::cout << scenario.name << ": expect " << pairlab::expectation_to_string(scenario.expect)
                << " over " << outcome.results.size() << " sessions -> "
                << (outcome.expectation_met ? "OK" : "VIOLATED") << '\n';
      for (const std::string& v : outcome.violations) std::cout << "  " << v << '\n';
    } else {
      summary.push_back(pairlab::Json{{"scenario", scenario.name},
                                      {"expectation", expectation_to_string(scenario.expect)},
                                      {"expectation_met", outcome.expectation_met},
                                      {"sessions", outcome.results.size()},
                                      {"violations", outcome.violations}});
    }
    for (pairlab::SessionResult& r : outcome.results) all_results.push_back(std::move(r));
  }

  pairlab::CostComparison cmp = pairlab::compare_costs(all_results);
  fs::create_directories(out_dir);
  {
    std::ofstream costs_json(fs::path(out_dir) / "costs.json", std::ios::binary);
    costs_json << pairlab::cost_comparison_to_json(cmp).dump(2) << '\n';
    std::ofstream costs_txt(fs::path(out_dir) / "costs.txt", std::ios::binary);
    costs_txt << pairlab::format_cost_table(cmp);
  }

  if (format == "text") {
    std::cout << '\n' << pairlab::format_cost_table(cmp);
  } else {
    std::cout << pairlab::Json{{"scenarios", std::move(summary)},
                               {"cost_comparison", pairlab::cost_comparison_to_json(cmp)}}
                     .dump(2)
              << '\n';
  }
  return all_met ? 0 : 1;
}

int cmd_gen_fixtures(std::optional<std::uint64_t> q, std::optional<unsigned> bits,
                     std::uint64_t param_seed, const std::string& preset, std::size_t table_size,
                     std::uint64_t table_seed, const std::string& out_dir) {
  pairlab::PairingParams params;
  if (q) {
    params = pairlab::params_from_q(*q);
  } else if (bits) {
    params = pairlab::make_params(*bits, param_seed);
  } else if (preset == "desk") {
    params = pairlab::PairingParams::desk_scale();
  } else if (preset == "large") {
    params = pairlab::PairingParams::large_scale();
  } else {
    throw pairlab::ConfigError("gen-fixtures needs --q, --bits, or --preset desk|large");
  }
  pairlab::gen_fixtures(params, table_size, table_seed, out_dir);
  std::cout << "wrote " << (fs::path(out_dir) / "params.json").string() << '\n'
            << "wrote " << (fs::path(out_dir) / "rand_table.json").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairing delegation protocol lab"};
  app.require_subcommand(1);

  // run
  std::vector<std::string> scenario_paths;
  std::string out_dir = ".";
  std::string format = "text";
  std::optional<std::uint64_t> seed_override;
  CLI::App* run = app.add_subcommand("run", "run scenario files and enforce their expectations");
  run->add_option("scenarios", scenario_paths, "scenario JSON files")->required()->expected(-1);
  run->add_option("--out", out_dir, "output directory for reports and transcripts");
  run->add_option("--seed-override", seed_override, "replace every scenario's base seed");
  run->add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"json", "text"}));

  // gen-fixtures
  std::optional<std::uint64_t> q;
  std::optional<unsigned> bits;
  std::uint64_t param_seed = 0;
  std::string preset;
  std::size_t table_size = 16;
  std::uint64_t table_seed = 0;
  std::string fixture_out = ".";
  CLI::App* gen = app.add_subcommand("gen-fixtures", "write params and table fixture files");
  gen->add_option("--q", q, "explicit prime group order");
  gen->add_option("--bits", bits, "bit length for a searched group order");
  gen->add_option("--seed", param_seed, "seed for the --bits search");
  gen->add_option("--preset", preset, "desk or large");
  gen->add_option("--table-size", table_size, "number of table rows");
  gen->add_option("--table-seed", table_seed, "table generation seed");
  gen->add_option("--out", fixture_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(scenario_paths, out_dir, seed_override, format);
    if (gen->parsed()) {
      return cmd_gen_fixtures(q, bits, param_seed, preset, table_size, table_seed, fixture_out);
    }
  } catch (const pairlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
