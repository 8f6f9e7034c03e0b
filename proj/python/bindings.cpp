#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symrig/degeneration.hpp"
#include "symrig/error.hpp"
#include "symrig/lie.hpp"
#include "symrig/report.hpp"
#include "symrig/surface.hpp"
#include "symrig/weights.hpp"

namespace py = pybind11;
using namespace symrig;

namespace {

RootType parse_root_type(const std::string& s) {
  for (RootType t : {RootType::A1, RootType::A2, RootType::C3, RootType::F4})
    if (s == to_string(t)) return t;
  throw Error(ErrorCode::kInvalidArgument, "unknown root type '" + s + "'");
}

std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

BoundaryModel start_model(const std::string& name) {
  if (name == "P2") return BoundaryModel::p2();
  if (name.size() == 2 && name[0] == 'F' && name[1] >= '0' && name[1] <= '9') return BoundaryModel::hirzebruch(name[1] - '0');
  throw Error(ErrorCode::kInvalidArgument, "unknown start surface '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(symrig, m) {
  m.doc() = "Exact computations on Jordan algebras, weights, rational surfaces and their Picard lattices.";
  py::register_exception<Error>(m, "SymrigError", PyExc_ValueError);

  m.def("algebra_tags", [] {
    std::vector<std::string> out;
    for (AlgebraTag t : kAllTags) out.emplace_back(to_string(t));
    return out;
  });

  m.def(
      "check_freudenthal",
      [](const std::string& tag, std::uint64_t seed, std::size_t samples) {
        const AlgebraTag t = parse_tag(tag);
        ScalarSampler s(seed);
        for (std::size_t i = 0; i < samples; ++i) {
          HermitianMatrix a = HermitianMatrix::random(t, s);
          const ExactScalar d = determinant(a);
          if (jordan_product(comatrix(a), a) != d * HermitianMatrix::identity(t) || triple(a, a, a) != ExactScalar(3) * d ||
              cross(comatrix(a), comatrix(a)) != d * a || d != determinant_via_traces(a))
            return false;
        }
        return true;
      },
      py::arg("tag"), py::arg("seed") = 0, py::arg("samples") = 50,
      "Check the Freudenthal identities and the trace formula for det on random elements.");

  m.def(
      "derivation_algebra_dim",
      [](const std::string& tag, bool exact) {
        return derivation_algebra_dim(parse_tag(tag), exact ? EliminationMode::kExact : EliminationMode::kModular);
      },
      py::arg("tag"), py::arg("exact") = true);
  m.def("centralizer_dim", [](const std::string& tag) { return centralizer_dim_in_J0(parse_tag(tag)); });

  m.def("select_module", [](const std::string& tag) {
    JordanModule pm = select_module(parse_tag(tag));
    return py::make_tuple(to_string(pm.root_system.type), pm.highest_weight.labels);
  });
  m.def("weyl_dim", [](const std::string& type, const std::vector<long>& labels) {
    return weyl_dim(RootSystem::make(parse_root_type(type)), Weight{labels}).get_si();
  });
  m.def("weight_multiplicities", [](const std::string& type, const std::vector<long>& labels) {
    py::dict out;
    for (const auto& [w, k] : freudenthal_multiplicities(RootSystem::make(parse_root_type(type)), Weight{labels}))
      out[py::tuple(py::cast(w.labels))] = k;
    return out;
  });

  m.def("orbit_closure_fan", [] { return orbit_closure_surface().rays(); });
  m.def("invariant_sublattice", [](const std::vector<std::string>& labels) {
    const auto all = s3_pic_actions();
    std::vector<PicAction> acts;
    for (const auto& l : labels) {
      auto it = std::find_if(all.begin(), all.end(), [&](const PicAction& a) { return a.label == l; });
      if (it == all.end()) throw Error(ErrorCode::kUnknownLabel, "no action '" + l + "'");
      acts.push_back(*it);
    }
    std::vector<std::vector<long>> out;
    for (const auto& b : invariant_sublattice(acts).basis) out.push_back(to_longs(b));
    return out;
  }, "HNF basis of the classes on Y fixed by the named actions (id, sigma12, sigma13, sigma23, sigma123, sigma132).");

  m.def("solve_coefficient_system", [] {
    py::list out;
    for (const auto& s : solve_coefficient_system()) out.append(py::tuple(py::cast(s.tuple())));
    return out;
  });
  m.def("theta0_contradiction", [](std::size_t index) {
    const auto sols = solve_coefficient_system();
    if (index >= sols.size()) throw Error(ErrorCode::kInvalidArgument, "solution index out of range");
    ContradictionResult r = contradiction_check(blowup_p2_config(true), theta0_action(sols[index]));
    return py::make_tuple(to_string(r.verdict), r.witness);
  });
  m.def("search_equivariant_models", [](const std::string& start) {
    std::vector<std::string> out;
    for (const auto& mdl : search_equivariant_models(start_model(start))) out.push_back(mdl.to_string());
    return out;
  }, py::arg("start"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples, std::optional<std::string> algebra,
         bool deep) {
        SuiteOptions o;
        o.seed = seed;
        o.samples = samples;
        o.deep = deep;
        if (algebra) o.algebra = parse_tag(*algebra);
        py::gil_scoped_release release;
        return to_json(run_suite(suite, o));
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 200, py::arg("algebra") = py::none(),
      py::arg("deep") = false, "Run a verification suite and return its JSON report.");
}
