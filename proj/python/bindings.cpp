#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "mono/error.hpp"
#include "mono/figures.hpp"
#include "mono/io.hpp"
#include "mono/measures.hpp"
#include "mono/monogamy.hpp"
#include "mono/named_states.hpp"
#include "mono/qstate.hpp"
#include "mono/sweep.hpp"

namespace py = pybind11;
using namespace mono;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Subsystems parse_keep(std::string_view keep) {
  if (keep == "AB") return {Party::A, Party::B};
  if (keep == "AC") return {Party::A, Party::C};
  if (keep == "BC") return {Party::B, Party::C};
  if (keep == "A") return {Party::A};
  if (keep == "B") return {Party::B};
  if (keep == "C") return {Party::C};
  throw InvalidArgument("keep must be one of A, B, C, AB, AC, BC");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monogamy exponents and certificates for tripartite pure states.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  py::class_<PureTripartiteState>(m, "PureState")
      .def(py::init(&pure_state_new), py::arg("dims"), py::arg("amplitudes"))
      .def_property_readonly("dims", &PureTripartiteState::dims)
      .def_property_readonly("amplitudes", &PureTripartiteState::amplitudes)
      .def_property_readonly("renormalized", &PureTripartiteState::renormalized)
      .def("amplitude", &PureTripartiteState::amplitude, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("haar_random", &haar_random, py::arg("dims"), py::arg("seed"));
  m.def(
      "named_state", [](std::string_view spec) { return resolve_named_state(spec).state; }, py::arg("spec"),
      "ghz, w, e223, afs, wclass:b0,b1,b2,b3 or schmidt:l0,l1,l2,l3,l4,phi");
  m.def(
      "from_schmidt",
      [](double l0, double l1, double l2, double l3, double l4, double phi) {
        return from_schmidt({l0, l1, l2, l3, l4, phi});
      },
      py::arg("l0"), py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("l4"), py::arg("phi") = 0.0);
  m.def("w_class", &w_class, py::arg("b0"), py::arg("b1"), py::arg("b2"), py::arg("b3"));
  m.def(
      "reduced_density",
      [](const PureTripartiteState& s, std::string_view keep) { return reduced_density(s, parse_keep(keep)).matrix(); },
      py::arg("state"), py::arg("keep"));

  m.def(
      "wootters_concurrence", [](const CMatrix& rho) { return wootters_concurrence(DensityMatrix(rho, {2, 2})); },
      py::arg("rho"));
  m.def(
      "concurrence_of_assistance",
      [](const CMatrix& rho, std::vector<int> local_dims) {
        return concurrence_of_assistance(DensityMatrix(rho, std::move(local_dims)));
      },
      py::arg("rho"), py::arg("local_dims") = std::vector<int>{2, 2});
  m.def("eof_from_concurrence", &eof_from_concurrence, py::arg("c"));

  py::class_<MeasureTriple>(m, "MeasureTriple")
      .def(py::init([](double e_abc, double e_ab, double e_ac, std::string_view measure) {
             return MeasureTriple{e_abc, e_ab, e_ac, parse_measure_id(measure)};
           }),
           py::arg("e_abc"), py::arg("e_ab"), py::arg("e_ac"), py::arg("measure") = "c")
      .def_readonly("e_abc", &MeasureTriple::e_abc)
      .def_readonly("e_ab", &MeasureTriple::e_ab)
      .def_readonly("e_ac", &MeasureTriple::e_ac)
      .def_property_readonly("measure", [](const MeasureTriple& t) { return std::string(to_string(t.measure_id)); })
      .def("__repr__", [](const MeasureTriple& t) { return to_json(t).dump(); });

  m.def(
      "measure_triple",
      [](const PureTripartiteState& s, std::string_view measure) {
        return measure_triple(s, parse_measure_id(measure));
      },
      py::arg("state"), py::arg("measure"));

  m.def(
      "solve_x", [](const MeasureTriple& t, double y, double eps) { return to_python(to_json(solve_x(t, y, eps))); },
      py::arg("triple"), py::arg("y"), py::arg("eps") = kDefaultEps);
  m.def("residual", &residual, py::arg("triple"), py::arg("alpha"));
  m.def("in_lambda", &in_lambda, py::arg("triple"), py::arg("eps") = kDefaultEps);
  m.def("is_witness", &is_theorem2_witness, py::arg("triple"), py::arg("eps") = kDefaultEps);
  m.def(
      "min_alpha",
      [](const MeasureTriple& t, double tol, double eps) { return to_python(to_json(min_alpha(t, tol, eps))); },
      py::arg("triple"), py::arg("tol") = 1e-6, py::arg("eps") = kDefaultEps);
  m.def(
      "certify_log_base",
      [](const MeasureTriple& t, double eps) { return to_python(to_json(certify_theorem3(t, eps))); },
      py::arg("triple"), py::arg("eps") = kDefaultEps);
  m.def(
      "certify_relaxed",
      [](const MeasureTriple& t, double c, double eps) { return to_python(to_json(certify_relaxed(t, c, eps))); },
      py::arg("triple"), py::arg("c"), py::arg("eps") = kDefaultEps);
  m.def("alpha_from_bound", &alpha_from_bound, py::arg("bound"), py::arg("y0"));

  m.def(
      "sweep",
      [](std::array<int, 3> dims, std::string_view measure, double y, std::int64_t samples, std::uint64_t seed,
         std::string_view family, double eps, int threads) {
        SweepOptions o;
        o.dims = dims;
        o.measure = parse_measure_id(measure);
        o.y = y;
        o.samples = samples;
        o.seed = seed;
        o.family = parse_family(family);
        o.eps = eps;
        o.threads = threads;
        SweepReport r;
        {
          py::gil_scoped_release release;
          r = sweep(o);
        }
        return to_python(to_json(r));
      },
      py::arg("dims") = std::array<int, 3>{2, 2, 2}, py::arg("measure") = "c", py::arg("y") = 2.0,
      py::arg("samples") = 1000, py::arg("seed") = 0, py::arg("family") = "haar", py::arg("eps") = kDefaultEps,
      py::arg("threads") = 0);

  m.def("figure1_rows", [] {
    std::vector<std::pair<double, double>> out;
    for (const Fig1Row& r : figure1_rows()) out.emplace_back(r.alpha, r.f_alpha);
    return out;
  });
  m.def("figure2_rows", [] {
    std::vector<std::tuple<double, double, double>> out;
    for (const BetaRow& r : figure2_rows()) out.emplace_back(r.y, r.z1, r.z2);
    return out;
  });
}
