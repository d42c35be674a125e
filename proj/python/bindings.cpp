#include "coxinv/classic_models.hpp"
#include "coxinv/report.hpp"
#include "coxinv/tables.hpp"
#include "coxinv/theorems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

namespace py = pybind11;
using namespace coxinv;

namespace {

RootSystem build(const std::string& type, std::optional<int> rank, std::optional<int> m) {
  TypeRequest req = parse_type_name(type);
  int n = req.n ? *req.n : req.family == Family::I ? m.value_or(0) : rank.value_or(0);
  if (!req.n && n == 0) throw CapabilityError("type " + type + (req.family == Family::I ? " needs m" : " needs rank"));
  return RootSystem::build(req.family, n);
}

Family family_of(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  throw CapabilityError("family must be A, B or D");
}

py::dict profile_dict(const CentralizerProfile& p) {
  py::dict d;
  d["degree"] = p.degree;
  d["label"] = p.label;
  d["class_size"] = p.class_size.get_str();
  d["order"] = p.order.get_str();
  d["order_factored"] = factored(p.order);
  d["Gminus"] = p.g_minus.to_string();
  d["TildeGminus"] = p.tilde_minus.to_string();
  d["Gplus"] = p.g_plus.to_string();
  d["TildeGplus"] = p.tilde_plus.to_string();
  d["gamma"] = p.gamma.printed;
  d["gamma_order"] = p.gamma.order;
  d["gamma_structure"] = p.gamma.structure.label;
  return d;
}

class Analysis {
 public:
  Analysis(const std::string& type, std::optional<int> rank, std::optional<int> m)
      : ga_(std::make_shared<GroupAnalysis>(build(type, rank, m))) {}

  std::string type() const { return ga_->root_system().irreducible().to_string(); }
  std::string group_order() const { return ga_->root_system().type().order().get_str(); }
  py::list profiles() const {
    py::list out;
    for (const auto& p : ga_->profiles()) out.append(profile_dict(p));
    return out;
  }
  std::string csv() const { return profiles_csv(*ga_); }
  std::string json() const { return profiles_json(*ga_); }
  std::string verify_json() const { return verify(*ga_, ExpectedTables::embedded()).to_json_string(); }
  std::string theorems_json(const std::vector<std::string>& checks) const {
    TheoremOptions opt;
    opt.only.insert(checks.begin(), checks.end());
    return run_theorems(*ga_, opt).to_json_string();
  }

 private:
  std::shared_ptr<GroupAnalysis> ga_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Centralizers of involutions in finite Coxeter groups";
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_ValueError);

  py::class_<Analysis>(m, "Analysis")
      .def(py::init<const std::string&, std::optional<int>, std::optional<int>>(), py::arg("type"),
           py::arg("rank") = py::none(), py::arg("m") = py::none(), py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("type", &Analysis::type)
      .def_property_readonly("group_order", &Analysis::group_order)
      .def("profiles", &Analysis::profiles)
      .def("csv", &Analysis::csv)
      .def("json", &Analysis::json)
      .def("verify_json", &Analysis::verify_json)
      .def("theorems_json", &Analysis::theorems_json, py::arg("checks") = std::vector<std::string>{},
           py::call_guard<py::gil_scoped_release>());

  m.def("coxeter_order", [](const std::string& t) { return CoxeterType::parse(t).order().get_str(); },
        "Order of the Coxeter group of a type such as 'A1xB3'.");
  m.def("check_ids", &check_ids);
  m.def(
      "predict_profile",
      [](const std::string& family, int n, int a, int a_prime, int b, const std::string& split) {
        switch (family_of(family)) {
          case Family::A: return profile_dict(predict_profile_A(n, b));
          case Family::B: return profile_dict(predict_profile_B(n, a, a_prime, b));
          default:
            return profile_dict(predict_profile_D(n, a, a_prime, b,
                                                  split == "+" ? DSplit::Plus : split == "-" ? DSplit::Minus : DSplit::None));
        }
      },
      py::arg("family"), py::arg("n"), py::arg("a"), py::arg("a_prime"), py::arg("b"), py::arg("split") = "");
  m.def(
      "brute_force_orders",
      [](const std::string& family, int n, int a, int a_prime, int b) {
        BruteForceOrders o = brute_force_orders(family_of(family), n, a, a_prime, b);
        py::dict d;
        d["group"] = o.group.get_str();
        d["centralizer"] = o.centralizer.get_str();
        d["minus"] = o.minus.get_str();
        d["plus"] = o.plus.get_str();
        d["g1"] = o.g1.get_str();
        d["gamma"] = o.gamma.get_str();
        d["tilde_minus"] = o.tilde_minus.get_str();
        d["tilde_plus"] = o.tilde_plus.get_str();
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("a"), py::arg("a_prime"), py::arg("b"));
}
