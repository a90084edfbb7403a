#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupring/harness.hpp"
#include "groupring/report.hpp"

namespace py = pybind11;
using namespace groupring;

namespace {

/// A parsed ring kept alive together with its group ring, if any.
class PyRing {
 public:
  PyRing(const std::string& spec, std::optional<std::size_t> cap)
      : spec_(parse_ring_spec(spec)), inst_(build_ring(spec_, cap.value_or(Limits::global().size_cap))) {}

  const FiniteRing& ring() const { return inst_.ring(); }
  std::string label() const { return spec_.canonical(); }
  bool is_group_ring() const { return inst_.group_ring.has_value(); }

  Elem check(Elem x) const {
    if (x >= ring().size()) throw py::index_error("element index out of range");
    return x;
  }

  std::vector<Elem> coefficients(Elem x) const {
    if (!inst_.group_ring) throw py::type_error("not a group ring");
    return inst_.group_ring->coefficients(check(x));
  }

  Elem encode(const std::vector<Elem>& c) const {
    if (!inst_.group_ring) throw py::type_error("not a group ring");
    return inst_.group_ring->encode(c);
  }

 private:
  RingSpec spec_;
  RingInstance inst_;
};

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite rings, group rings and structural predicates";

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<SuiteError>(m, "SuiteError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.attr("SCHEMA") = kReportSchema;
  m.attr("PREDICATES") = analyze_predicates();

  m.def("canonical_spec", [](const std::string& s) { return parse_ring_spec(s).canonical(); }, py::arg("spec"));

  py::class_<PyRing>(m, "Ring")
      .def(py::init<const std::string&, std::optional<std::size_t>>(), py::arg("spec"), py::arg("cap") = py::none())
      .def_property_readonly("label", &PyRing::label)
      .def_property_readonly("size", [](const PyRing& r) { return r.ring().size(); })
      .def_property_readonly("zero", [](const PyRing& r) { return r.ring().zero(); })
      .def_property_readonly("one", [](const PyRing& r) { return r.ring().one(); })
      .def_property_readonly("is_group_ring", &PyRing::is_group_ring)
      .def("add", [](const PyRing& r, Elem a, Elem b) { return r.ring().add(r.check(a), r.check(b)); })
      .def("mul", [](const PyRing& r, Elem a, Elem b) { return r.ring().mul(r.check(a), r.check(b)); })
      .def("neg", [](const PyRing& r, Elem a) { return r.ring().neg(r.check(a)); })
      .def("is_unit", [](const PyRing& r, Elem a) { return r.ring().is_unit(r.check(a)); })
      .def("inverse", [](const PyRing& r, Elem a) { return r.ring().inverse(r.check(a)); })
      .def("coefficients", &PyRing::coefficients)
      .def("encode", &PyRing::encode)
      .def("is_commutative", [](const PyRing& r) { return r.ring().is_commutative(); })
      .def("units", [](const PyRing& r) { return r.ring().units().to_vector(); })
      .def("idempotents", [](const PyRing& r) { return r.ring().idempotents().to_vector(); })
      .def("radical", [](const PyRing& r) { return r.ring().jacobson_radical().members().to_vector(); })
      .def("is_local", [](const PyRing& r) { return is_local(r.ring()); })
      .def("is_abelian", [](const PyRing& r) { return is_abelian_ring(r.ring()); })
      .def("is_clean", [](const PyRing& r) { return is_clean_ring(r.ring()).clean; })
      .def("all_two_units", [](const PyRing& r) { return all_two_units(r.ring()).all; })
      .def("identity_two_units", [](const PyRing& r) { return identity_two_units(r.ring()); })
      .def("clean_witness",
           [](const PyRing& r, Elem x) -> std::optional<std::tuple<Elem, Elem>> {
             if (auto w = clean_witness(r.ring(), r.check(x))) return std::make_tuple(w->idempotent, w->unit);
             return std::nullopt;
           })
      .def("two_units_witness",
           [](const PyRing& r, Elem x) -> std::optional<std::tuple<Elem, Elem>> {
             if (auto w = two_units_witness(r.ring(), r.check(x))) return std::make_tuple(w->first, w->second);
             return std::nullopt;
           })
      .def("z2_factor",
           [](const PyRing& r) -> std::optional<std::vector<Elem>> {
             if (auto c = has_factor_z2(r.ring())) return c->preimage_of_one.to_vector();
             return std::nullopt;
           },
           "Preimage of 1 under an epimorphism onto Z2, or None")
      .def("stable_range_one",
           [](const PyRing& r, std::size_t cap, bool sample, std::uint64_t seed) {
             StableRangeOptions opt;
             opt.cap = cap;
             opt.sample = sample;
             opt.seed = seed;
             py::gil_scoped_release release;
             return stable_range_one(r.ring(), opt).holds;
           },
           py::arg("cap") = kDefaultStableRangeCap, py::arg("sample") = false, py::arg("seed") = 0)
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.label() + " of size " + std::to_string(r.ring().size()) + ">"; });

  m.def(
      "analyze",
      [](const std::string& spec, std::optional<std::vector<std::string>> predicates, bool witnesses, bool sample,
         std::uint64_t seed, std::size_t sr1_cap) {
        const RingSpec parsed = parse_ring_spec(spec);
        const auto inst = build_ring(parsed);
        std::vector<std::string> preds = predicates.value_or(analyze_predicates());
        if (!predicates && inst.ring().size() > sr1_cap && !sample) preds.pop_back();
        AnalyzeOptions opt;
        opt.witnesses = witnesses;
        opt.sample = sample;
        opt.seed = seed;
        opt.stable_range_cap = sr1_cap;
        return to_python(analyze_ring(parsed.canonical(), inst.ring(), preds, opt));
      },
      py::arg("spec"), py::arg("predicates") = py::none(), py::arg("witnesses") = false, py::arg("sample") = false,
      py::arg("seed") = 0, py::arg("sr1_cap") = kDefaultStableRangeCap);

  m.def(
      "verify",
      [](const std::string& theorem, const std::string& base, const std::string& group, std::optional<std::uint32_t> p,
         bool witnesses, std::uint64_t seed) {
        if (!is_theorem_id(theorem)) throw SuiteError("unknown theorem id '" + theorem + "'");
        std::string line = theorem + " " + base + " " + (group.empty() ? "-" : group);
        if (p) line += " p=" + std::to_string(*p);
        HarnessOptions opt;
        opt.keep_witnesses = witnesses;
        opt.seed = seed;
        std::vector<TheoremReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(parse_suite(line), opt);
        }
        return to_python(verify_document(reports, seed));
      },
      py::arg("theorem"), py::arg("base"), py::arg("group") = "", py::arg("p") = py::none(),
      py::arg("witnesses") = false, py::arg("seed") = 0);

  m.def(
      "run_suite",
      [](const std::string& path, unsigned threads, std::uint64_t seed) {
        HarnessOptions opt;
        opt.seed = seed;
        std::vector<TheoremReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(load_suite(path), opt, threads);
        }
        return to_python(verify_document(reports, seed));
      },
      py::arg("path"), py::arg("threads") = 1, py::arg("seed") = 0);
}
