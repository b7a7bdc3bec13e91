#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "pairlab/codec.hpp"
#include "pairlab/errors.hpp"
#include "pairlab/scenario.hpp"
#include "pairlab/simnet.hpp"

namespace py = pybind11;
using namespace pairlab;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& v : j) out.append(json_to_py(v));
      return out;
    }
    default: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
  }
}

BehaviorSpec behavior_from_dict(const py::dict& d) {
  BehaviorSpec spec;
  if (d.contains("kind")) {
    spec.kind = BehaviorSpec::kind_from_string(d["kind"].cast<std::string>());
  }
  if (d.contains("seed")) spec.seed = d["seed"].cast<std::uint64_t>();
  if (d.contains("index")) spec.index = d["index"].cast<std::size_t>();
  return spec;
}

SessionResult py_run_session(const PairingParams& params, const std::string& protocol,
                             std::uint64_t a, std::uint64_t b, const py::dict& u1,
                             const py::dict& u2, RandTable* table, std::uint64_t setup_seed,
                             std::uint64_t seed, bool encrypted,
                             std::uint64_t encryption_overhead) {
  Protocol proto = protocol_from_string(protocol);
  Algebra alg(params);
  SessionConfig cfg;
  cfg.a = alg.g1(a);
  cfg.b = alg.g2(b);
  cfg.u1 = behavior_from_dict(u1);
  cfg.u2 = behavior_from_dict(u2);
  cfg.encrypted = encrypted;
  cfg.encryption_overhead = encryption_overhead;
  cfg.seed = seed;
  if (proto == Protocol::cm) {
    Rng rng(derive_seed(setup_seed, 0xCE));
    return run_cm_session(params, cfg, make_cm_setup(alg, rng));
  }
  if (!table) throw ConfigError("two-server protocols need a table");
  return run_session(proto, params, cfg, *table);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Protocol lab for outsourced bilinear-pairing schemes over a transparent toy pairing";

  auto base = py::register_exception<Error>(m, "PairlabError");
  py::register_exception<ParamSearchError>(m, "ParamSearchError", base);
  py::register_exception<TableExhausted>(m, "TableExhausted", base);
  py::register_exception<MalformedResponse>(m, "MalformedResponse", base);
  py::register_exception<MalformedTranscript>(m, "MalformedTranscript", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<CodecError>(m, "CodecError", base);

  py::class_<PairingParams>(m, "PairingParams")
      .def_readonly("q", &PairingParams::q)
      .def_readonly("p", &PairingParams::p)
      .def_readonly("gt_gen", &PairingParams::gt_gen)
      .def_static("desk_scale", &PairingParams::desk_scale)
      .def_static("large_scale", &PairingParams::large_scale)
      .def("__eq__", [](const PairingParams& a, const PairingParams& b) { return a == b; })
      .def("__repr__", [](const PairingParams& p) {
        return "PairingParams(q=" + std::to_string(p.q) + ", p=" + std::to_string(p.p) +
               ", gt_gen=" + std::to_string(p.gt_gen) + ")";
      });

  m.def("make_params", &make_params, py::arg("bits"), py::arg("seed") = 0);
  m.def("params_from_q", &params_from_q, py::arg("q"));

  m.def(
      "pair",
      [](const PairingParams& p, std::uint64_t a, std::uint64_t b) {
        Algebra alg(p);
        return alg.pair(alg.g1(a), alg.g2(b)).v;
      },
      py::arg("params"), py::arg("a"), py::arg("b"));
  m.def(
      "gt_mul",
      [](const PairingParams& p, std::uint64_t x, std::uint64_t y) {
        Algebra alg(p);
        return alg.gt_mul(alg.gt(x), alg.gt(y)).v;
      },
      py::arg("params"), py::arg("x"), py::arg("y"));
  m.def(
      "gt_pow",
      [](const PairingParams& p, std::uint64_t x, std::uint64_t k) {
        Algebra alg(p);
        return alg.gt_pow(alg.gt(x), alg.scalar(k)).v;
      },
      py::arg("params"), py::arg("x"), py::arg("k"));
  m.def(
      "gt_inv",
      [](const PairingParams& p, std::uint64_t x) {
        Algebra alg(p);
        return alg.gt_inv(alg.gt(x)).v;
      },
      py::arg("params"), py::arg("x"));

  py::class_<RandTable>(m, "RandTable")
      .def_property_readonly("size", &RandTable::size)
      .def_property_readonly("remaining", &RandTable::remaining)
      .def("to_dict", [](const RandTable& t, const PairingParams& p) {
        return json_to_py(table_to_json(p, t));
      });

  m.def(
      "generate_table",
      [](const PairingParams& params, std::size_t n, std::uint64_t seed) {
        Algebra alg(params);
        return generate_table(alg, n, seed);
      },
      py::arg("params"), py::arg("n"), py::arg("seed") = 0);

  py::class_<SessionResult>(m, "SessionResult")
      .def_property_readonly("protocol",
                             [](const SessionResult& r) { return protocol_to_string(r.protocol); })
      .def_property_readonly("verdict",
                             [](const SessionResult& r) { return verdict_to_string(r.verdict); })
      .def_property_readonly("a", [](const SessionResult& r) { return r.input_a.v; })
      .def_property_readonly("b", [](const SessionResult& r) { return r.input_b.v; })
      .def_property_readonly("truth", [](const SessionResult& r) { return r.truth.v; })
      .def_property_readonly("output",
                             [](const SessionResult& r) -> std::optional<std::uint64_t> {
                               if (!r.output) return std::nullopt;
                               return r.output->v;
                             })
      .def_property_readonly("costs",
                             [](const SessionResult& r) {
                               return json_to_py(cost_report_to_json(r.costs));
                             })
      .def_property_readonly("transcript_jsonl",
                             [](const SessionResult& r) { return transcript_to_jsonl(r.transcript); })
      .def("to_dict", [](const SessionResult& r) { return json_to_py(session_to_json(r)); });

  m.def("run_session", &py_run_session, py::arg("params"), py::arg("protocol"), py::arg("a"),
        py::arg("b"), py::arg("u1") = py::dict(), py::arg("u2") = py::dict(),
        py::arg("table") = nullptr, py::arg("setup_seed") = 0, py::arg("seed") = 0,
        py::arg("encrypted") = false, py::arg("encryption_overhead") = 0);

  m.def(
      "eavesdrop_recover",
      [](const PairingParams& params, const SessionResult& r)
          -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
        auto tapped = eavesdrop_recover(params, r.transcript);
        if (!tapped) return std::nullopt;
        return std::make_pair(tapped->first.v, tapped->second.v);
      },
      py::arg("params"), py::arg("result"));

  m.def(
      "run_scenario_file",
      [](const std::string& path, const std::string& out_dir,
         std::optional<std::uint64_t> seed_override) {
        Scenario scenario = load_scenario(path);
        ScenarioOutcome outcome = run_scenario_to_files(scenario, out_dir, seed_override);
        return json_to_py(outcome.report);
      },
      py::arg("path"), py::arg("out_dir"), py::arg("seed_override") = std::nullopt);
}
