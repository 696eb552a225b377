#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linext/cardinality.hpp"
#include "linext/constructions.hpp"
#include "linext/error.hpp"
#include "linext/io.hpp"
#include "linext/verify.hpp"

namespace py = pybind11;
using namespace linext;

namespace {

using AutPtr = std::shared_ptr<const AutomorphismGroup>;

AutPtr automorphisms(const std::string& spec) {
  return std::make_shared<const AutomorphismGroup>(enumerate_automorphisms(parse_group_spec(spec)));
}

FiniteLoop loop_from_rows(const std::vector<std::vector<LoopElement>>& rows) { return make_loop(rows.size(), rows); }

LoopCocycle construct(const FiniteLoop& loop, const std::string& group, const std::string& mode, std::uint64_t seed) {
  const auto aut = automorphisms(group);
  ChoiceSource choice(seed);
  if (mode == "lip") return construct_lip_cocycle(loop, aut, choice);
  if (mode == "rip") return construct_rip_cocycle(loop, aut, choice);
  if (mode == "ip") return construct_ip_cocycle(loop, aut, choice);
  throw InputError("mode must be lip, rip or ip");
}

LoopCocycle cocycle_from_text(const FiniteLoop& loop, const std::string& text) {
  std::istringstream in(text);
  return parse_cocycle(in, loop);
}

FiniteLoop loop_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_loop(in);
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  for (const auto& [k, v] : r.entries) d[py::str(k)] = v;
  d["verdict"] = r.passed ? "pass" : "fail";
  return d;
}

}  // namespace

PYBIND11_MODULE(_linext, m) {
  m.doc() = "Linear abelian extensions of finite loops";

  auto base = py::register_exception<Error>(m, "Error");
  auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  (void)input;

  py::class_<FiniteLoop>(m, "Loop")
      .def(py::init(&loop_from_rows), py::arg("rows"))
      .def_property_readonly("order", &FiniteLoop::order)
      .def("mul", &FiniteLoop::mul)
      .def("left_div", &FiniteLoop::left_div)
      .def("right_div", &FiniteLoop::right_div)
      .def("rows", &FiniteLoop::rows)
      .def("__eq__", [](const FiniteLoop& a, const FiniteLoop& b) { return a == b; })
      .def("__repr__", [](const FiniteLoop& l) { return "<Loop of order " + std::to_string(l.order()) + ">"; });

  m.def("cyclic_loop", &cyclic_loop, py::arg("n"));
  m.def("parse_loop", &loop_from_text, py::arg("text"));
  m.def("load_loop", &parse_loop_file, py::arg("path"));
  m.def("emit_loop", &emit_loop);
  m.def("has_lip", [](const FiniteLoop& l) { return has_lip(l); });
  m.def("has_rip", [](const FiniteLoop& l) { return has_rip(l); });
  m.def("has_ip", [](const FiniteLoop& l) { return has_ip(l); });
  m.def("has_order3_element", &has_order3_element);
  m.def("is_associative", &is_associative);
  m.def("is_commutative", &is_commutative);
  m.def("opposite_loop", &opposite_loop);
  m.def("check_loop", [](const FiniteLoop& l) { return report_dict(check_loop(l)); });

  m.def("automorphism_tables", [](const std::string& spec) {
    std::vector<std::vector<GroupElement>> out;
    const auto aut = automorphisms(spec);
    for (const auto& f : aut->members()) out.push_back(f.table());
    return out;
  }, py::arg("group"));

  py::class_<LoopCocycle>(m, "Cocycle")
      .def_property_readonly("loop", &LoopCocycle::loop)
      .def_property_readonly("group", [](const LoopCocycle& c) { return c.group().spec(); })
      .def("P", &LoopCocycle::P)
      .def("Q", &LoopCocycle::Q)
      .def("__eq__", [](const LoopCocycle& a, const LoopCocycle& b) { return a == b; });

  m.def("construct", &construct, py::arg("loop"), py::arg("group"), py::arg("mode"), py::arg("seed") = 0);
  m.def("emit_cocycle", &emit_cocycle);
  m.def("parse_cocycle", &cocycle_from_text, py::arg("loop"), py::arg("text"));
  m.def("opposite_cocycle", &opposite_cocycle);
  m.def("extension", [](const LoopCocycle& c) { return build_extension(c).loop(); });
  m.def("check_lip_conditions", &check_lip_conditions);
  m.def("check_rip_conditions", &check_rip_conditions);
  m.def("check_ip_conditions", &check_ip_conditions);
  m.def("check_equivariance", &check_equivariance);
  m.def("check_cip", &check_cip);
  m.def("verify", [](const LoopCocycle& c, const std::string& mode) {
    VerifyTarget t = VerifyTarget::Consistency;
    if (mode == "lip") t = VerifyTarget::Lip;
    else if (mode == "rip") t = VerifyTarget::Rip;
    else if (mode == "ip") t = VerifyTarget::Ip;
    else if (!mode.empty()) throw InputError("mode must be lip, rip, ip or empty");
    return report_dict(verify_cocycle(c, t));
  }, py::arg("cocycle"), py::arg("mode") = "");

  m.def("orbits", [](const FiniteLoop& loop, const std::string& mode) {
    OrbitMode om = OrbitMode::Gamma;
    if (mode == "phi") om = OrbitMode::Phi;
    else if (mode == "psi") om = OrbitMode::Psi;
    else if (mode != "gamma") throw InputError("mode must be phi, psi or gamma");
    std::vector<std::vector<std::pair<LoopElement, LoopElement>>> out;
    for (const auto& o : orbit_decomposition(loop, om).orbits) {
      auto& members = out.emplace_back();
      for (const auto& p : o.members) members.emplace_back(p.first, p.second);
    }
    return out;
  }, py::arg("loop"), py::arg("mode") = "gamma");

  m.def("feasible", [](std::uint64_t max_l) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
    for (const auto& c : enumerate_feasible(max_l)) out.emplace_back(c.k, c.h, c.l);
    return out;
  }, py::arg("max_l") = 16);
  m.def("fingerprint", &fingerprint);
}
