#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autoarc/homology.hpp"
#include "autoarc/job.hpp"
#include "autoarc/parser.hpp"

namespace py = pybind11;
using namespace autoarc;

namespace {

CoefficientField field_of(long characteristic) {
  return characteristic == 0 ? CoefficientField::rationals()
                             : CoefficientField::prime_field(characteristic);
}

PolyRing make_ring(long characteristic, const std::vector<std::string>& vars,
                   const std::string& order) {
  MonomialOrder mo = MonomialOrder::degrevlex();
  if (order == "lex") mo = MonomialOrder::lex();
  return PolyRing(vars, field_of(characteristic), mo);
}

Ideal make_ideal(const PolyRing& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(ps));
}

std::vector<std::string> render_all(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render_polynomial(p));
  return out;
}

DeformationFamily make_family(long characteristic,
                              const std::vector<std::string>& x_vars,
                              const std::vector<std::string>& params,
                              const std::vector<std::string>& polys) {
  std::vector<std::string> all = x_vars;
  all.insert(all.end(), params.begin(), params.end());
  PolyRing R(all, field_of(characteristic));
  std::vector<Polynomial> ps;
  for (const auto& p : polys) ps.push_back(parse_polynomial(p, R));
  return DeformationFamily(x_vars, params, std::move(ps));
}

py::dict arc_system_dict(const ArcSystem& S) {
  py::dict out;
  RenderOptions pretty = report_render_options(S, false);
  py::list ideal;
  for (const auto& g : S.ideal().gens())
    ideal.append(render_polynomial(g, pretty));
  out["ideal"] = ideal;
  py::dict alias;
  for (const auto& [c, a] : S.alias_map())
    if (S.ring().index_of(c)) alias[py::str(c)] = a;
  out["alias_map"] = alias;
  out["variables"] = S.ring().vars();
  out["dimension"] = krull_dimension(S.ideal());
  out["eliminated"] = S.eliminated();
  return out;
}

}  // namespace

PYBIND11_MODULE(_autoarc, m) {
  m.doc() = "exact arc spaces of infinitesimal deformations over fat points";

  py::register_exception<ParseError>(m, "JobParseError");
  py::register_exception<ResourceError>(m, "ResourceGuardError");
  py::register_exception<UnsupportedError>(m, "UnsupportedInputError");

  m.def(
      "groebner_basis",
      [](long characteristic, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, const std::string& order) {
        PolyRing R = make_ring(characteristic, vars, order);
        Ideal I = make_ideal(R, gens);
        return render_all(groebner_basis(I).elements());
      },
      py::arg("characteristic"), py::arg("vars"), py::arg("gens"),
      py::arg("order") = "degrevlex",
      "reduced Groebner basis, rendered canonically");

  m.def(
      "krull_dimension",
      [](long characteristic, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        PolyRing R = make_ring(characteristic, vars, "degrevlex");
        Ideal I = make_ideal(R, gens);
        return krull_dimension(I);
      },
      py::arg("characteristic"), py::arg("vars"), py::arg("gens"));

  m.def(
      "radical_membership",
      [](long characteristic, const std::vector<std::string>& vars,
         const std::string& f, const std::vector<std::string>& gens) {
        PolyRing R = make_ring(characteristic, vars, "degrevlex");
        return radical_membership(parse_polynomial(f, R), make_ideal(R, gens));
      },
      py::arg("characteristic"), py::arg("vars"), py::arg("poly"),
      py::arg("gens"));

  m.def(
      "cohen_macaulay_test",
      [](long characteristic, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        PolyRing R = make_ring(characteristic, vars, "degrevlex");
        return cohen_macaulay_test(make_ideal(R, gens)).is_cm;
      },
      py::arg("characteristic"), py::arg("vars"), py::arg("gens"));

  m.def(
      "tor_one_support_dimension",
      [](long characteristic, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens_i,
         const std::vector<std::string>& gens_j) {
        PolyRing R = make_ring(characteristic, vars, "degrevlex");
        return tor_one(make_ideal(R, gens_i), make_ideal(R, gens_j))
            .support_dimension;
      },
      py::arg("characteristic"), py::arg("vars"), py::arg("gens_i"),
      py::arg("gens_j"));

  m.def(
      "arc_ideal",
      [](long characteristic, const std::vector<std::string>& x_vars,
         const std::vector<std::string>& params,
         const std::vector<std::string>& polys, int order) {
        auto Y = make_family(characteristic, x_vars, params, polys);
        FatPoint Z = make_linear_jet(order, field_of(characteristic),
                                     params.at(0));
        return arc_system_dict(build_arc_system(Y, Z));
      },
      py::arg("characteristic"), py::arg("x_vars"), py::arg("params"),
      py::arg("polys"), py::arg("order"),
      "defining ideal of the auto-arc space over the linear jet");

  m.def(
      "endo_ideal",
      [](long characteristic, int order) {
        FatPoint Z = make_linear_jet(order, field_of(characteristic));
        return arc_system_dict(build_endo_system(Z));
      },
      py::arg("characteristic"), py::arg("order"));

  m.def(
      "classify",
      [](long characteristic, const std::vector<std::string>& x_vars,
         const std::vector<std::string>& params,
         const std::vector<std::string>& polys, int order) {
        auto Y = make_family(characteristic, x_vars, params, polys);
        FatPoint Z = make_linear_jet(order, field_of(characteristic),
                                     params.at(0));
        ArcSystem S = build_arc_system(Y, Z);
        StrengthVerdict v =
            classify_deformation(S, singular_locus(Y.central_fiber()));
        py::dict out;
        out["class"] = v.cls == DeformationClass::VeryStrong ? "very-strong"
                       : v.cls == DeformationClass::Strong   ? "strong"
                                                             : "weak";
        py::dict witnesses;
        for (const auto& [name, ok] : v.witnesses)
          witnesses[py::str(name)] = ok;
        out["witnesses"] = witnesses;
        out["vacuous"] = v.vacuous;
        if (!v.failing_var.empty()) out["failing_variable"] = v.failing_var;
        return out;
      },
      py::arg("characteristic"), py::arg("x_vars"), py::arg("params"),
      py::arg("polys"), py::arg("order"));

  m.def(
      "run_job_text",
      [](const std::string& text) {
        Report r = run_job(parse_job(text));
        return render_report(r, "json");
      },
      py::arg("text"), "run a job given as text; returns the JSON payload");

  m.def(
      "run_job_file",
      [](const std::string& path) {
        Report r = run_job(load_job(path));
        return render_report(r, "json");
      },
      py::arg("path"), "run a job file; returns the JSON payload");
}
