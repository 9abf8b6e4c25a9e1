#include "autoarc/job.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "autoarc/parser.hpp"

namespace autoarc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& item : split(s, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool looks_like_pair(const std::string& fragment) {
  size_t eq = fragment.find('=');
  if (eq == std::string::npos) return false;
  std::string key = trim(fragment.substr(0, eq));
  if (key.empty()) return false;
  for (char c : key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  return true;
}

// section { key = value ; ... }; value fragments without '=' continue the
// previous value (so polynomial lists separated by ';' parse).
std::map<std::string, std::vector<std::pair<std::string, std::string>>>
parse_sections(const std::string& text) {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> out;
  size_t pos = 0;
  auto skip_ws_comments = [&] {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  while (true) {
    skip_ws_comments();
    if (pos >= text.size()) break;
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      name += text[pos++];
    }
    if (name.empty()) throw ParseError("expected section name");
    skip_ws_comments();
    if (pos >= text.size() || text[pos] != '{')
      throw ParseError("expected '{' after section " + name);
    ++pos;
    size_t close = text.find('}', pos);
    if (close == std::string::npos)
      throw ParseError("missing '}' in section " + name);
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;

    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& fragment : split(body, ';')) {
      if (fragment.empty()) continue;
      if (looks_like_pair(fragment)) {
        size_t eq = fragment.find('=');
        pairs.push_back(
            {trim(fragment.substr(0, eq)), trim(fragment.substr(eq + 1))});
      } else {
        if (pairs.empty())
          throw ParseError("value without key in section " + name);
        pairs.back().second += " ; " + fragment;
      }
    }
    if (out.count(name)) throw ParseError("duplicate section " + name);
    out[name] = std::move(pairs);
  }
  return out;
}

std::string get_required(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::string& section, const std::string& key) {
  for (const auto& [k, v] : pairs)
    if (k == key) return v;
  throw ParseError("section " + section + " missing key " + key);
}

std::optional<std::string> get_optional(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::string& key) {
  for (const auto& [k, v] : pairs)
    if (k == key) return v;
  return std::nullopt;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + what + ": " + s);
  }
}

}  // namespace

Job parse_job(const std::string& text) {
  auto sections = parse_sections(text);
  Job job;

  if (!sections.count("ring")) throw ParseError("missing ring section");
  const auto& ring = sections["ring"];
  job.characteristic = parse_long(get_required(ring, "ring", "char"), "char");
  job.ring_vars = comma_list(get_required(ring, "ring", "vars"));
  if (job.ring_vars.empty()) throw ParseError("ring has no variables");

  if (sections.count("fatpoint")) {
    const auto& fp = sections["fatpoint"];
    Job::FatPointSpec spec;
    std::string kind = get_required(fp, "fatpoint", "kind");
    if (kind == "linear") {
      spec.kind = Job::FatPointSpec::Kind::Linear;
    } else if (kind == "germ") {
      spec.kind = Job::FatPointSpec::Kind::Germ;
      spec.vars = comma_list(get_required(fp, "fatpoint", "vars"));
      spec.ideal_texts = split(get_required(fp, "fatpoint", "ideal"), ';');
    } else {
      throw ParseError("fatpoint kind must be linear or germ");
    }
    spec.order = static_cast<int>(
        parse_long(get_required(fp, "fatpoint", "order"), "order"));
    job.fatpoint = std::move(spec);
  }

  if (sections.count("deformation")) {
    const auto& df = sections["deformation"];
    Job::DeformationSpec spec;
    if (auto params = get_optional(df, "params"))
      spec.params = comma_list(*params);
    for (auto& p : split(get_required(df, "deformation", "polys"), ';'))
      if (!p.empty()) spec.poly_texts.push_back(p);
    if (spec.poly_texts.empty())
      throw ParseError("deformation has no polynomials");
    job.deformation = std::move(spec);
  }

  if (!sections.count("task")) throw ParseError("missing task section");
  const auto& task = sections["task"];
  job.task = get_required(task, "task", "run");
  static const std::vector<std::string> known = {
      "arc-ideal", "endo-ideal", "dimension", "components", "flatness",
      "classify",  "defects",    "motivic",   "validate"};
  if (std::find(known.begin(), known.end(), job.task) == known.end())
    throw ParseError("unknown task: " + job.task);
  if (auto range = get_optional(task, "range")) {
    auto dots = range->find("..");
    if (dots == std::string::npos)
      throw ParseError("range must look like 1..4");
    int lo = static_cast<int>(parse_long(trim(range->substr(0, dots)), "range"));
    int hi = static_cast<int>(parse_long(trim(range->substr(dots + 2)), "range"));
    job.range = {lo, hi};
  }
  if ((job.task == "defects" || job.task == "motivic") && !job.range)
    throw ParseError("task " + job.task + " requires a range");
  if (auto base = get_optional(task, "base"))
    job.base_override = comma_list(*base);
  if (auto line = get_optional(task, "line"))
    job.line = comma_list(*line);

  if (sections.count("output")) {
    const auto& outp = sections["output"];
    if (auto f = get_optional(outp, "format")) {
      if (*f != "text" && *f != "json")
        throw ParseError("output format must be text or json");
      job.output_format = *f;
    }
    if (auto f = get_optional(outp, "file")) job.output_file = *f;
  }
  return job;
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open job file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

namespace {

struct JobContext {
  CoefficientField field = CoefficientField::rationals();
  std::optional<FatPoint> Z;
  std::optional<DeformationFamily> family;
  std::optional<ArcSystem> system;
  std::vector<std::string> warnings;
};

FatPoint build_fatpoint(const Job& job, const CoefficientField& field) {
  if (!job.fatpoint) throw ParseError("task requires a fatpoint section");
  const auto& spec = *job.fatpoint;
  if (spec.kind == Job::FatPointSpec::Kind::Linear) {
    std::string var = "t";
    if (job.deformation && !job.deformation->params.empty())
      var = job.deformation->params[0];
    return make_linear_jet(spec.order, field, var);
  }
  PolyRing germ_ring(spec.vars, field);
  std::vector<Polynomial> gens;
  for (const auto& text : spec.ideal_texts)
    if (!trim(text).empty()) gens.push_back(parse_polynomial(text, germ_ring));
  return make_germ_jet(spec.vars, Ideal(germ_ring, std::move(gens)),
                       spec.order);
}

JobContext build_context(const Job& job) {
  JobContext ctx;
  ctx.field = job.characteristic == 0
                  ? CoefficientField::rationals()
                  : CoefficientField::prime_field(job.characteristic);
  if (job.characteristic != 0)
    ctx.warnings.push_back(
        "characteristic " + std::to_string(job.characteristic) +
        ": jet-coefficient scalings can degenerate; dimensions and verdicts "
        "may differ from characteristic zero");

  if (job.task == "endo-ideal") {
    ctx.Z = build_fatpoint(job, ctx.field);
    ctx.system = build_endo_system(*ctx.Z);
    return ctx;
  }

  if (!job.deformation)
    throw ParseError("task " + job.task + " requires a deformation section");
  const auto& def = *job.deformation;
  if (def.params.empty() &&
      (job.task == "defects" || job.task == "motivic" ||
       job.task == "validate" || job.task == "classify"))
    throw UnsupportedError("task " + job.task +
                           " needs deformation parameters");
  if (job.fatpoint && job.fatpoint->kind == Job::FatPointSpec::Kind::Germ &&
      !def.params.empty() && def.params != job.fatpoint->vars)
    throw UnsupportedError(
        "deformation parameters must match the germ variables");
  std::vector<std::string> all_vars = job.ring_vars;
  all_vars.insert(all_vars.end(), def.params.begin(), def.params.end());
  PolyRing family_ring(all_vars, ctx.field);
  std::vector<Polynomial> polys;
  for (const auto& text : def.poly_texts)
    polys.push_back(parse_polynomial(text, family_ring));

  if (def.params.empty()) {
    // Trivial deformation: the Hom system of the ideal itself.
    ctx.Z = build_fatpoint(job, ctx.field);
    PolyRing x_ring(job.ring_vars, ctx.field);
    std::vector<Polynomial> gens;
    for (const auto& p : polys) gens.push_back(ring_map(p, x_ring, {}));
    ctx.system = build_hom_system(Ideal(x_ring, std::move(gens)), *ctx.Z);
    return ctx;
  }

  ctx.family = DeformationFamily(job.ring_vars, def.params, polys);
  if (job.task == "defects" || job.task == "motivic") return ctx;
  ctx.Z = build_fatpoint(job, ctx.field);
  ctx.system = build_arc_system(*ctx.family, *ctx.Z);
  return ctx;
}

std::string resolve_var(const ArcSystem& S, const std::string& name) {
  if (S.ring().index_of(name)) return name;
  for (const auto& [canon, alias] : S.alias_map())
    if (alias == name) return canon;
  throw ParseError("unknown variable in task: " + name);
}

const char* flatness_str(Flatness f) {
  switch (f) {
    case Flatness::Flat:
      return "flat";
    case Flatness::NotFlat:
      return "not-flat";
    default:
      return "unknown";
  }
}

const char* method_str(FlatnessMethod m) {
  switch (m) {
    case FlatnessMethod::Dominance:
      return "dominance";
    case FlatnessMethod::Miracle:
      return "miracle";
    default:
      return "tor";
  }
}

const char* class_str(DeformationClass c) {
  switch (c) {
    case DeformationClass::VeryStrong:
      return "very-strong";
    case DeformationClass::Strong:
      return "strong";
    default:
      return "weak";
  }
}

ordered_json verdict_json(const FlatnessVerdict& v) {
  ordered_json evidence = ordered_json::object();
  for (const auto& [k, val] : v.evidence) evidence[k] = val;
  return ordered_json{{"method", method_str(v.method)},
                      {"verdict", flatness_str(v.verdict)},
                      {"evidence", evidence},
                      {"caveats", v.caveats}};
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

ordered_json row_json(const DefectRow& r) {
  auto opt_long = [](const std::optional<long>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  auto opt_rat = [](const std::optional<mpq_class>& v) {
    return v ? ordered_json(rat_str(*v)) : ordered_json(nullptr);
  };
  ordered_json j;
  j["n"] = r.n;
  j["l"] = r.length;
  j["delta"] = r.delta;
  j["dimA"] = r.dim_arc;
  j["dimV"] = opt_long(r.dim_v);
  j["d"] = r.d;
  j["phi"] = opt_rat(r.phi);
  j["dstar"] = opt_rat(r.dstar);
  j["e"] = opt_rat(r.e_term);
  j["R"] = opt_rat(r.r_term);
  j["validated"] =
      r.validated ? ordered_json(*r.validated) : ordered_json(nullptr);
  j["family"] = r.fingerprint;
  return j;
}

}  // namespace

Report run_job(const Job& job) {
  using Clock = std::chrono::steady_clock;
  Report report;
  ordered_json& out = report.payload;

  ordered_json job_echo;
  job_echo["char"] = job.characteristic;
  job_echo["vars"] = job.ring_vars;
  if (job.fatpoint) {
    job_echo["fatpoint"] = ordered_json{
        {"kind",
         job.fatpoint->kind == Job::FatPointSpec::Kind::Linear ? "linear"
                                                               : "germ"},
        {"order", job.fatpoint->order}};
    if (!job.fatpoint->vars.empty())
      job_echo["fatpoint"]["vars"] = job.fatpoint->vars;
    if (!job.fatpoint->ideal_texts.empty())
      job_echo["fatpoint"]["ideal"] = job.fatpoint->ideal_texts;
  }
  if (job.deformation)
    job_echo["deformation"] = ordered_json{
        {"params", job.deformation->params},
        {"polys", job.deformation->poly_texts}};
  out["job"] = job_echo;
  out["task"] = job.task;
  out["ideal"] = nullptr;
  out["alias_map"] = nullptr;
  out["dimension"] = nullptr;
  out["components"] = nullptr;
  out["flatness"] = nullptr;
  out["classification"] = nullptr;
  out["defect_table"] = nullptr;
  out["motivic"] = nullptr;
  out["warnings"] = ordered_json::array();
  out["status"] = "ok";

  auto t_start = Clock::now();
  JobContext ctx = build_context(job);
  report.timings_ms.push_back(
      {"build", std::chrono::duration<double, std::milli>(Clock::now() -
                                                          t_start)
                    .count()});

  auto add_warning = [&](const std::string& w) {
    out["warnings"].push_back(w);
  };
  for (const auto& w : ctx.warnings) add_warning(w);

  auto emit_system_common = [&](const ArcSystem& S) {
    ordered_json ideal = ordered_json::array();
    RenderOptions canon = report_render_options(S, false);
    RenderOptions pretty = report_render_options(S, true);
    for (const auto& g : S.ideal().gens()) {
      ideal.push_back(render_polynomial(g, canon));
      report.ideal_alias.push_back(render_polynomial(g, pretty));
    }
    out["ideal"] = ideal;
    ordered_json alias = ordered_json::object();
    for (const auto& [c, a] : S.alias_map())
      if (S.ring().index_of(c)) alias[c] = a;
    out["alias_map"] = alias;
    if (S.radical().status != RadicalStatus::CertifiedRadical)
      add_warning("radical status uncertified");
  };

  auto t_task = Clock::now();
  if (job.task == "arc-ideal" || job.task == "endo-ideal") {
    emit_system_common(*ctx.system);
    out["dimension"] = krull_dimension(ctx.system->ideal());
  } else if (job.task == "dimension") {
    emit_system_common(*ctx.system);
    out["dimension"] = krull_dimension(ctx.system->ideal());
  } else if (job.task == "components") {
    emit_system_common(*ctx.system);
    ComponentSet cs = split_components(ctx.system->ideal());
    ordered_json comps = ordered_json::array();
    bool heuristic = false;
    for (const auto& c : cs.components) {
      ordered_json gens = ordered_json::array();
      for (const auto& g : groebner_basis(c.ideal).elements())
        gens.push_back(render_polynomial(g));
      bool cert = c.status == ComponentStatus::CertifiedPrimeBySplitExhaustion;
      if (!cert) heuristic = true;
      comps.push_back(ordered_json{
          {"generators", gens},
          {"dimension", c.dimension},
          {"status", cert ? "certified-prime-by-split-exhaustion"
                          : "heuristic"}});
    }
    out["components"] = comps;
    if (heuristic) add_warning("component list is heuristic");
  } else if (job.task == "flatness") {
    emit_system_common(*ctx.system);
    ArcSystem S = *ctx.system;
    if (!job.base_override.empty()) {
      std::vector<std::string> base;
      for (const auto& b : job.base_override)
        base.push_back(resolve_var(S, b));
      S = S.with_base_variables(base);
    }
    ThetaSetup setup = ThetaSetup::from_arc(S);
    ordered_json verdicts = ordered_json::array();
    if (setup.base_vars.size() == 1) {
      verdicts.push_back(verdict_json(flatness_by_dominance(setup)));
    } else if (job.line) {
      std::vector<Coeff> dir;
      for (const auto& c : *job.line) dir.push_back(Coeff(c));
      verdicts.push_back(verdict_json(flatness_by_dominance(setup, dir)));
    }
    verdicts.push_back(verdict_json(flatness_by_miracle(setup)));
    std::map<std::string, Coeff> origin;
    for (const auto& v : setup.base_vars) origin.emplace(v, Coeff(0));
    verdicts.push_back(verdict_json(flatness_by_tor(setup, origin)));
    out["flatness"] = verdicts;
  } else if (job.task == "classify") {
    emit_system_common(*ctx.system);
    Ideal X_sing = singular_locus(ctx.family->central_fiber());
    StrengthVerdict v = classify_deformation(*ctx.system, X_sing);
    ordered_json witnesses = ordered_json::object();
    for (const auto& [var, ok] : v.witnesses) witnesses[var] = ok;
    ordered_json cls;
    cls["class"] = class_str(v.cls);
    cls["witnesses"] = witnesses;
    cls["det_of_linear_part_in_radical"] = v.det_membership;
    cls["vacuous"] = v.vacuous;
    if (!v.failing_var.empty()) cls["failing_variable"] = v.failing_var;
    out["classification"] = cls;
  } else if (job.task == "defects" || job.task == "motivic") {
    std::optional<GermSpec> germ;
    if (job.fatpoint &&
        job.fatpoint->kind == Job::FatPointSpec::Kind::Germ) {
      PolyRing germ_ring(job.fatpoint->vars, ctx.field);
      std::vector<Polynomial> gens;
      for (const auto& text : job.fatpoint->ideal_texts)
        if (!trim(text).empty())
          gens.push_back(parse_polynomial(text, germ_ring));
      germ = GermSpec{job.fatpoint->vars,
                      Ideal(germ_ring, std::move(gens))};
    }
    auto rows = defect_table(*ctx.family, job.range->first, job.range->second,
                             germ);
    ordered_json table = ordered_json::array();
    for (const auto& r : rows) table.push_back(row_json(r));
    out["defect_table"] = table;
    for (const auto& r : rows)
      if (r.validated && !*r.validated)
        add_warning("family is not flat at order " + std::to_string(r.n));
    if (job.task == "motivic") {
      MotivicSequence seq = motivic_sequence(rows);
      ordered_json terms = ordered_json::array();
      for (const auto& e : seq.exprs) {
        ordered_json expr = ordered_json::array();
        for (const auto& t : e.terms)
          expr.push_back(ordered_json{{"tag", t.tag},
                                      {"coefficient", t.coefficient},
                                      {"dim", t.dim_tag},
                                      {"L_power", t.power},
                                      {"virtual_dim", t.virtual_dimension()}});
        terms.push_back(expr);
      }
      out["motivic"] =
          ordered_json{{"terms", terms},
                       {"singular_virtual_dims", seq.singular_virtual_dims},
                       {"convergence", seq.convergence}};
    }
  } else if (job.task == "validate") {
    auto v = validate_deformation(*ctx.family, *ctx.Z);
    ordered_json verdicts = ordered_json::array();
    ordered_json j;
    j["method"] = "annihilator-chain";
    j["verdict"] = v ? (*v ? "flat" : "not-flat") : "unknown";
    j["evidence"] = ordered_json::object();
    j["caveats"] = ordered_json::array();
    if (!v)
      j["caveats"].push_back(
          "validation implemented for linear jets only");
    verdicts.push_back(j);
    out["flatness"] = verdicts;
  }
  report.timings_ms.push_back(
      {job.task, std::chrono::duration<double, std::milli>(Clock::now() -
                                                           t_task)
                     .count()});
  return report;
}

namespace {

std::string text_report(const Report& r) {
  const ordered_json& p = r.payload;
  std::ostringstream os;
  os << "task: " << p["task"].get<std::string>() << "\n";
  os << "status: " << p["status"].get<std::string>() << "\n";
  if (!p["ideal"].is_null()) {
    os << "ideal:\n";
    if (!r.ideal_alias.empty()) {
      for (const auto& s : r.ideal_alias) os << "  " << s << "\n";
    } else {
      for (const auto& g : p["ideal"]) os << "  " << g.get<std::string>() << "\n";
    }
  }
  if (!p["dimension"].is_null()) os << "dimension: " << p["dimension"] << "\n";
  if (!p["components"].is_null()) {
    os << "components (" << p["components"].size() << "):\n";
    for (const auto& c : p["components"]) {
      os << "  dim " << c["dimension"] << " [" << c["status"].get<std::string>()
         << "]:";
      for (const auto& g : c["generators"]) os << " " << g.get<std::string>();
      os << "\n";
    }
  }
  if (!p["flatness"].is_null()) {
    os << "flatness:\n";
    for (const auto& v : p["flatness"]) {
      os << "  " << v["method"].get<std::string>() << ": "
         << v["verdict"].get<std::string>() << "\n";
      for (auto it = v["evidence"].begin(); it != v["evidence"].end(); ++it)
        os << "      " << it.key() << " = " << it.value().get<std::string>()
           << "\n";
      for (const auto& c : v["caveats"])
        os << "      caveat: " << c.get<std::string>() << "\n";
    }
  }
  if (!p["classification"].is_null()) {
    const auto& c = p["classification"];
    os << "classification: " << c["class"].get<std::string>() << "\n";
    for (auto it = c["witnesses"].begin(); it != c["witnesses"].end(); ++it)
      os << "  " << it.key() << " in radical: "
         << (it.value().get<bool>() ? "yes" : "no") << "\n";
    if (c.contains("failing_variable"))
      os << "  failing variable: "
         << c["failing_variable"].get<std::string>() << "\n";
  }
  if (!p["defect_table"].is_null()) {
    os << "defects (n, l, delta, dimA, dimV, phi, dstar, e, R):\n";
    for (const auto& row : p["defect_table"]) {
      auto cell = [&](const char* k) {
        return row[k].is_null()
                   ? std::string("-")
                   : (row[k].is_string() ? row[k].get<std::string>()
                                         : row[k].dump());
      };
      os << "  n=" << row["n"] << " l=" << cell("l") << " delta="
         << cell("delta") << " dimA=" << cell("dimA") << " dimV="
         << cell("dimV") << " phi=" << cell("phi") << " dstar="
         << cell("dstar") << " e=" << cell("e") << " R=" << cell("R") << "\n";
    }
  }
  if (!p["motivic"].is_null()) {
    os << "motivic: singular virtual dims";
    for (const auto& v : p["motivic"]["singular_virtual_dims"])
      os << " " << v;
    os << "; strictly decreasing: "
       << (p["motivic"]["convergence"].get<bool>() ? "yes" : "no") << "\n";
  }
  for (const auto& w : p["warnings"])
    os << "warning: " << w.get<std::string>() << "\n";
  for (const auto& [name, ms] : r.timings_ms)
    os << "time " << name << ": " << ms << " ms\n";
  return os.str();
}

}  // namespace

std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return r.payload.dump(2) + "\n";
  if (format == "text") return text_report(r);
  throw ParseError("unknown report format " + format);
}

}  // namespace autoarc
