#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "qsplice/analytics.hpp"
#include "qsplice/bench.hpp"
#include "qsplice/circuit.hpp"
#include "qsplice/guard.hpp"
#include "qsplice/metrics.hpp"
#include "qsplice/money.hpp"
#include "qsplice/pricing.hpp"
#include "qsplice/sim.hpp"
#include "qsplice/splice.hpp"
#include "qsplice/text.hpp"

namespace py = pybind11;

namespace {

qsplice::NoiseModel make_noise(bool noiseless, double eps_read, double eps_condx) {
    if (noiseless) return qsplice::NoiseModel::noiseless();
    qsplice::NoiseModel noise = qsplice::NoiseModel::defaults();
    if (eps_read >= 0) noise.eps_read_1to0 = noise.eps_read_0to1 = eps_read;
    if (eps_condx >= 0) noise.eps_condx = eps_condx;
    return noise;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "circuit splicing, shot simulation, and billing analysis core";

    py::register_exception<qsplice::ParseError>(m, "CircuitParseError", PyExc_ValueError);

    py::class_<qsplice::GateCensus>(m, "GateCensus")
        .def_readonly("n_1q", &qsplice::GateCensus::n_1q)
        .def_readonly("n_2q", &qsplice::GateCensus::n_2q)
        .def_readonly("n_meas", &qsplice::GateCensus::n_meas)
        .def_readonly("n_reset", &qsplice::GateCensus::n_reset)
        .def_readonly("depth", &qsplice::GateCensus::depth)
        .def("total_ops", &qsplice::GateCensus::total_ops)
        .def("__repr__", [](const qsplice::GateCensus& g) {
            return "GateCensus(n_1q=" + std::to_string(g.n_1q) +
                   ", n_2q=" + std::to_string(g.n_2q) + ", n_meas=" + std::to_string(g.n_meas) +
                   ", n_reset=" + std::to_string(g.n_reset) +
                   ", depth=" + std::to_string(g.depth) + ")";
        });

    py::class_<qsplice::Circuit>(m, "Circuit")
        .def_readonly("width", &qsplice::Circuit::width)
        .def_readonly("label", &qsplice::Circuit::label)
        .def_property_readonly(
            "num_ops", [](const qsplice::Circuit& c) { return c.ops.size(); })
        .def("census", [](const qsplice::Circuit& c) { return qsplice::census(c); })
        .def("__repr__", [](const qsplice::Circuit& c) {
            return "Circuit(label='" + c.label + "', width=" + std::to_string(c.width) +
                   ", ops=" + std::to_string(c.ops.size()) + ")";
        });

    py::class_<qsplice::CountsTable>(m, "CountsTable")
        .def_readonly("counts", &qsplice::CountsTable::counts)
        .def_readonly("shots", &qsplice::CountsTable::shots)
        .def_readonly("seed", &qsplice::CountsTable::seed)
        .def_readonly("rng", &qsplice::CountsTable::rng)
        .def("total", &qsplice::CountsTable::total)
        .def("__repr__", [](const qsplice::CountsTable& t) {
            return "CountsTable(shots=" + std::to_string(t.shots) +
                   ", keys=" + std::to_string(t.counts.size()) + ")";
        });

    py::class_<qsplice::SpliceMap>(m, "SpliceMap")
        .def_readonly("total_bits", &qsplice::SpliceMap::total_bits)
        .def_readonly("effective_shots_factor", &qsplice::SpliceMap::effective_shots_factor)
        .def_property_readonly(
            "part_labels",
            [](const qsplice::SpliceMap& map) {
                std::vector<std::string> labels;
                for (const auto& p : map.parts) labels.push_back(p.label);
                return labels;
            })
        .def("to_text", [](const qsplice::SpliceMap& map) {
            return qsplice::splice_map_to_text(map);
        });

    m.def("parse", [](const std::string& text) { return qsplice::parse(text); },
          py::arg("text"), "parse circuit text into a Circuit");
    m.def("parse_file", &qsplice::parse_file, py::arg("path"));
    m.def("serialize", &qsplice::serialize, py::arg("circuit"),
          "render a Circuit back to canonical circuit text");
    m.def("validate",
          [](const qsplice::Circuit& c) {
              std::vector<std::string> out;
              for (const auto& v : qsplice::validate(c)) out.push_back(v.message);
              return out;
          },
          py::arg("circuit"), "structural violations, empty when the circuit is well formed");

    m.def("benchmark_names", [] {
        std::vector<std::string> names;
        for (qsplice::BenchKind kind : qsplice::default_mix_pool(true)) {
            names.push_back(qsplice::bench_kind_name(kind));
        }
        return names;
    });
    m.def("build_benchmark",
          [](const std::string& name) {
              return qsplice::build(
                  qsplice::BenchSpec::defaults(qsplice::bench_kind_from_name(name)));
          },
          py::arg("name"), "build one benchmark circuit with its default parameters");
    m.def("build_reset_test", &qsplice::build_reset_test, py::arg("k"));
    m.def("preset_mix_names", &qsplice::preset_mix_names);
    m.def("build_preset_mix",
          [](const std::string& name, uint32_t resets) {
              qsplice::SpliceSpec spec;
              spec.k_resets = resets;
              for (const auto& bench : qsplice::preset_mix(name)) {
                  spec.parts.push_back(qsplice::build(bench));
              }
              qsplice::SpliceResult result = qsplice::splice(spec);
              result.circuit.label = name;
              return py::make_tuple(result.circuit, result.map);
          },
          py::arg("name"), py::arg("resets") = 4);

    m.def("run",
          [](const qsplice::Circuit& c, uint64_t shots, uint64_t seed, bool noiseless,
             double eps_read, double eps_condx) {
              return qsplice::run_shots(c, make_noise(noiseless, eps_read, eps_condx), shots,
                                        seed);
          },
          py::arg("circuit"), py::arg("shots") = 1000, py::arg("seed") = 1,
          py::arg("noiseless") = false, py::arg("eps_read") = -1.0, py::arg("eps_condx") = -1.0,
          "sample shots; negative eps values keep the default noise model");

    m.def("splice",
          [](std::vector<qsplice::Circuit> parts, uint32_t resets) {
              qsplice::SpliceSpec spec;
              spec.parts = std::move(parts);
              spec.k_resets = resets;
              qsplice::SpliceResult result = qsplice::splice(spec);
              return py::make_tuple(result.circuit, result.map);
          },
          py::arg("parts"), py::arg("resets") = 4,
          "pack circuits into one composite; returns (circuit, map)");
    m.def("split_counts", &qsplice::split_counts, py::arg("composite_counts"), py::arg("map"),
          "slice composite counts back into per-part counts tables");

    m.def("normalize", &qsplice::normalize, py::arg("counts"));
    m.def("tvd", &qsplice::tvd, py::arg("p"), py::arg("q"),
          "total variation distance between outcome distributions");

    m.def("reset_residual",
          [](uint32_t k) { return qsplice::residual_after_k(qsplice::ResetChannel::defaults(k)); },
          py::arg("k") = 1, "P(|1> survives) after k resets under default noise");
    m.def("reset_fidelity",
          [] { return qsplice::effective_reset_fidelity(qsplice::ResetChannel::defaults(1)); },
          "single-reset success probability under default noise");

    m.def("bill",
          [](const qsplice::Circuit& c, const std::string& model_name, uint64_t shots,
             uint64_t wall_time_s, uint64_t parts) {
              const qsplice::PricingModel* model = qsplice::builtin_catalog().find(model_name);
              if (!model) throw py::value_error("no catalog entry named '" + model_name + "'");
              qsplice::TaskReceipt receipt;
              receipt.shots = shots;
              receipt.wall_time_s = wall_time_s;
              receipt.census = qsplice::census(c);
              receipt.parts = parts;
              qsplice::Money cost = qsplice::price(*model, receipt);
              return py::make_tuple(cost.to_string(), qsplice::currency_name(cost.currency));
          },
          py::arg("circuit"), py::arg("model"), py::arg("shots") = 1000,
          py::arg("wall_time_s") = 0, py::arg("parts") = 1,
          "price a task under a builtin catalog model; returns (amount, currency)");
    m.def("catalog_models", [] {
        std::vector<std::string> names;
        for (const auto& e : qsplice::builtin_catalog().entries) names.push_back(e.name);
        return names;
    });

    m.def("detect",
          [](const qsplice::Circuit& c) {
              std::vector<qsplice::AbuseFinding> findings = qsplice::detect_full_reset_cuts(c);
              auto reps = qsplice::detect_repetition(c);
              findings.insert(findings.end(), reps.begin(), reps.end());
              std::vector<py::tuple> out;
              for (const auto& f : findings) {
                  out.push_back(py::make_tuple(qsplice::finding_kind_name(f.kind), f.span_begin,
                                               f.span_end, f.note));
              }
              return out;
          },
          py::arg("circuit"),
          "run the splice detectors; returns (kind, begin, end, note) tuples");
}
