#include "iqaoa/circuit.hpp"
#include "iqaoa/enumerator.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/fixtures.hpp"
#include "iqaoa/optimizer.hpp"
#include "iqaoa/rank_codec.hpp"
#include "iqaoa/report.hpp"
#include "iqaoa/schedule.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace iqaoa;

namespace {

BigInt to_bigint(const py::int_& value) { return parse_bigint(py::str(value).cast<std::string>()); }

py::int_ to_pyint(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(value).c_str(), nullptr, 10));
}

py::dict schedule_dict(const JsspInstance& inst, const Schedule& s) {
    py::dict d;
    d["makespan"] = s.makespan;
    d["start"] = s.start;
    std::vector<std::vector<std::pair<int, int>>> orders;
    for (const auto& machine : s.machine_order) {
        auto& row = orders.emplace_back();
        for (const auto& op : machine) row.emplace_back(op.job, op.index);
    }
    d["machine_order"] = orders;
    d["issues"] = check_schedule(inst, s);
    return d;
}

CircuitParams make_params(std::vector<double> gammas, std::vector<double> betas, int mixer,
                          const std::string& initial) {
    CircuitParams p{std::move(gammas), std::move(betas), mixer_from_tag(mixer), initial_state_from_name(initial)};
    p.validate();
    return p;
}

py::dict objective_dict(const ObjectiveValue& v) {
    py::dict d;
    d["c"] = v.c;
    d["mean_makespan"] = v.mean_makespan;
    d["min_makespan"] = v.min_makespan;
    d["min_count"] = v.min_count;
    d["m_term"] = v.m_term;
    return d;
}

}  // namespace

PYBIND11_MODULE(_iqaoa, m) {
    m.doc() = "Indirect QAOA for small job-shop instances";
    m.attr("__version__") = IQAOA_VERSION;

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
    static py::exception<BudgetError> budget_error(m, "BudgetError", PyExc_MemoryError);
    static py::exception<IoError> io_error(m, "IoError", PyExc_OSError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const ValidationError& e) {
            py::set_error(validation_error, e.what());
        } catch (const BudgetError& e) {
            py::set_error(budget_error, e.what());
        } catch (const IoError& e) {
            py::set_error(io_error, e.what());
        }
    });

    py::class_<JsspInstance>(m, "Instance")
        .def(py::init([](int n_machines, const std::vector<std::vector<std::pair<int, int>>>& jobs) {
                 std::vector<std::vector<Operation>> ops;
                 for (const auto& job : jobs) {
                     auto& row = ops.emplace_back();
                     for (const auto& [machine, duration] : job) row.push_back({machine, duration});
                 }
                 return JsspInstance(n_machines, std::move(ops));
             }),
             py::arg("n_machines"), py::arg("jobs"))
        .def_static("parse", &parse_instance, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_instance(path); }, py::arg("path"))
        .def_property_readonly("n_jobs", &JsspInstance::n_jobs)
        .def_property_readonly("n_machines", &JsspInstance::n_machines)
        .def_property_readonly("n_operations", &JsspInstance::n_operations)
        .def_property_readonly("jobs",
                               [](const JsspInstance& inst) {
                                   std::vector<std::vector<std::pair<int, int>>> out;
                                   for (const auto& job : inst.jobs()) {
                                       auto& row = out.emplace_back();
                                       for (const auto& op : job) row.emplace_back(op.machine, op.duration);
                                   }
                                   return out;
                               })
        .def("render", &render_instance)
        .def("__eq__", [](const JsspInstance& a, const JsspInstance& b) { return a == b; })
        .def("__repr__", [](const JsspInstance& inst) {
            return "<Instance " + std::to_string(inst.n_jobs()) + "x" + std::to_string(inst.n_machines()) + ">";
        });

    m.def("fixtures", [] {
        std::vector<py::dict> out;
        for (const auto& f : fixtures()) {
            py::dict d;
            d["name"] = std::string(f.name);
            d["default_mixer"] = mixer_tag(f.default_mixer);
            out.push_back(d);
        }
        return out;
    });
    m.def("load_fixture", [](const std::string& name) { return load_fixture(name); }, py::arg("name"));

    m.def("total_vector_count", [](const JsspInstance& inst) { return to_pyint(total_vector_count(inst)); });
    m.def("qubit_count", &qubit_count, py::arg("instance"));
    m.def("decode",
          [](const JsspInstance& inst, const std::vector<int>& v) { return schedule_dict(inst, decode(inst, v)); },
          py::arg("instance"), py::arg("vector"));
    m.def("rank_of", [](const JsspInstance& inst, const std::vector<int>& v) { return to_pyint(rank_of(inst, v)); },
          py::arg("instance"), py::arg("vector"));
    m.def("unrank", [](const JsspInstance& inst, const py::int_& r) { return unrank(inst, to_bigint(r)); },
          py::arg("instance"), py::arg("rank"));
    m.def("bits_to_rank",
          [](const JsspInstance& inst, const std::vector<std::uint8_t>& bits) {
              return to_pyint(bits_to_rank(bits, inst));
          },
          py::arg("instance"), py::arg("bits"));

    m.def("enumerate_distribution",
          [](const JsspInstance& inst, std::uint64_t budget, unsigned workers) {
              MakespanDistribution d;
              {
                  py::gil_scoped_release release;
                  d = enumerate_distribution(inst, {budget, workers});
              }
              return d.counts;
          },
          py::arg("instance"), py::arg("budget") = EnumerationOptions{}.budget, py::arg("workers") = 0,
          "Exact {makespan: count} over every job-repetition vector.");
    m.def("lower_quartile",
          [](const std::map<int, std::uint64_t>& counts) {
              MakespanDistribution d;
              for (const auto& [ms, n] : counts) d.add(ms, n);
              return lower_quartile(d);
          },
          py::arg("counts"));

    m.def("run_circuit",
          [](unsigned qubits, std::vector<double> gammas, std::vector<double> betas, int mixer,
             const std::string& initial) {
              const auto params = make_params(std::move(gammas), std::move(betas), mixer, initial);
              StateVector s = StateVector::basis(1, 0);
              {
                  py::gil_scoped_release release;
                  s = run_circuit(qubits, params);
              }
              const auto amps = s.amplitudes();
              return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(amps.size()), amps.data());
          },
          py::arg("qubits"), py::arg("gammas"), py::arg("betas"), py::arg("mixer") = 1,
          py::arg("initial") = "zero", "Statevector after the layered circuit; qubit j is bit j of the index.");
    m.def("sample",
          [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& amplitudes,
             std::size_t shots, std::uint64_t seed) {
              std::vector<Amplitude> amps(amplitudes.data(), amplitudes.data() + amplitudes.size());
              return sample(StateVector::from_amplitudes(std::move(amps)), shots, seed).outcomes;
          },
          py::arg("amplitudes"), py::arg("shots"), py::arg("seed"));

    m.def("objective_from_makespans",
          [](const std::vector<int>& makespans, double xi, double theta) {
              return objective_dict(objective_from_makespans(makespans, xi, theta));
          },
          py::arg("makespans"), py::arg("xi") = 1e5, py::arg("theta") = 1.0);
    m.def("evaluate_objective",
          [](const JsspInstance& inst, std::vector<double> gammas, std::vector<double> betas, int mixer,
             const std::string& initial, std::size_t shots, std::uint64_t seed, double xi, double theta) {
              GaConfig cfg;
              cfg.shots_per_eval = shots;
              cfg.xi = xi;
              cfg.theta = theta;
              const auto params = make_params(std::move(gammas), std::move(betas), mixer, initial);
              return objective_dict(evaluate_objective(inst, params, cfg, seed));
          },
          py::arg("instance"), py::arg("gammas"), py::arg("betas"), py::arg("mixer") = 1, py::arg("initial") = "zero",
          py::arg("shots") = 1000, py::arg("seed") = 1, py::arg("xi") = 1e5, py::arg("theta") = 1.0);

    m.def("_run_ga_json",
          [](const JsspInstance& inst, const std::string& config_json, const std::string& label) {
              const auto cfg = config_from_json(Json::parse(config_json));
              OptimizationResult r;
              std::optional<MakespanDistribution> initial;
              {
                  py::gil_scoped_release release;
                  r = run_ga(inst, cfg);
                  if (total_vector_count(inst) <= EnumerationOptions{}.budget) {
                      initial = enumerate_distribution(inst);
                  }
              }
              return result_json(label, r, initial).dump();
          },
          py::arg("instance"), py::arg("config_json"), py::arg("label"));
    m.def("_default_config_json", [] { return config_json(GaConfig{}).dump(); });
}
