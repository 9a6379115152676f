#include "lich/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "lich/error.hpp"
#include "lich/io.hpp"
#include "lich/lcs.hpp"
#include "lich/presets.hpp"

namespace lich {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kComplexLabel = "invariant-complex";

// ---- text rendering -------------------------------------------------------

bool is_leaf(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j)
    if (!is_leaf(item)) return false;
  return true;
}

std::string leaf_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(const Json& j, const std::string& indent, std::ostream& out);

void render_value(const std::string& head, const Json& v, const std::string& indent, std::ostream& out) {
  if (is_leaf(v)) {
    out << head << leaf_text(v) << "\n";
  } else if (v.empty()) {
    out << head << (v.is_array() ? "[]" : "{}") << "\n";
  } else if (is_flat_array(v)) {
    out << head << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << leaf_text(v[i]);
    out << "]\n";
  } else {
    // Drop the trailing space of "key: " before the nested block.
    out << head.substr(0, head.size() - 1) << "\n";
    render(v, indent + "  ", out);
  }
}

void render(const Json& j, const std::string& indent, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_value(indent + key + ": ", v, indent, out);
    return;
  }
  for (const auto& item : j) {
    if (item.is_object() && !item.empty()) {
      std::ostringstream block;
      render(item, indent + "  ", block);
      std::string s = block.str();
      s[indent.size()] = '-';
      out << s;
    } else {
      render_value(indent + "- ", item, indent, out);
    }
  }
}

// ---- report helpers -------------------------------------------------------

std::vector<std::string> frames_for(const Algebra& alg, const std::vector<std::string>& given) {
  if (!given.empty()) return given;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alg.size(); ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

Json forms_json(const std::vector<Form>& forms) {
  Json arr = Json::array();
  for (const auto& f : forms) arr.push_back(f.to_string());
  return arr;
}

Json scalars_json(const std::vector<Scalar>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

struct Outcome {
  Json report;
  int code = kExitOk;
};

Json structure_json(const Algebra& alg) {
  Json j;
  j["mode"] = alg.mode().to_string();
  Json gens = Json::array();
  for (const auto& n : alg.basis()->names()) gens.push_back(n);
  j["generators"] = gens;
  Json d = Json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) d[alg.basis()->name(i)] = alg.dgen(i).to_string();
  j["d"] = d;
  if (!alg.has_identity_metric()) j["metric"] = scalars_json(alg.metric());
  return j;
}

Json brackets_json(const BracketTable& table, const std::vector<std::string>& frames) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (!table(i, j).is_zero())
        arr.push_back("[" + frames[i] + ", " + frames[j] + "] = " + table(i, j).to_string(frames));
  return arr;
}

// ---- check ----------------------------------------------------------------

Outcome check_report(const Algebra& alg, const std::vector<std::string>& frame_list) {
  const auto frames = frames_for(alg, frame_list);
  Outcome o;
  o.report = structure_json(alg);
  Json checks;
  const auto& d2 = alg.d2_failure();
  if (d2) {
    checks["d_squared"] = Json{{"pass", false},
                               {"generator", alg.basis()->name(d2->generator)},
                               {"residual", d2->residual.to_string()}};
  } else {
    checks["d_squared"] = Json{{"pass", true}};
  }
  const BracketTable table = brackets_from_d(alg);
  const auto jac = jacobi_check(table);
  if (jac) {
    checks["jacobi"] = Json{{"pass", false},
                            {"triple", Json::array({frames[jac->i], frames[jac->j], frames[jac->k]})},
                            {"residual", jac->residual.to_string(frames)}};
  } else {
    checks["jacobi"] = Json{{"pass", true}};
  }
  checks["d_squared_iff_jacobi"] = d2.has_value() == jac.has_value();
  o.report["brackets"] = brackets_json(table, frames);
  if (!d2 && !jac) checks["unimodular"] = is_unimodular(alg);
  o.report["checks"] = checks;
  if (d2 || jac) o.code = kExitMath;
  return o;
}

// ---- cohomology -----------------------------------------------------------

Json cohomology_json(const Algebra& alg, const Form& omega) {
  const CohomologyReport rep = cohomology(alg, omega);
  Json j;
  j["omega"] = omega.to_string();
  j["unimodular"] = rep.unimodular;
  Json dims = Json::array();
  for (auto b : rep.dims()) dims.push_back(b);
  j["dims"] = dims;
  Json degrees = Json::array();
  for (const auto& d : rep.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"betti", d.betti},
                           {"harmonic", d.dim_harmonic},
                           {"exact", d.dim_exact},
                           {"coexact", d.dim_coexact},
                           {"harmonic_basis", forms_json(d.harmonic.basis)}});
  }
  j["degrees"] = degrees;
  j["rank_formula_matches_harmonic"] = rep.consistent();
  if (!rep.unimodular)
    j["note"] = "not unimodular: harmonic dimensions are reported but need not equal betti numbers";
  return j;
}

// ---- lcs ------------------------------------------------------------------

Json automorphism_json(const Algebra& alg, const LcsForm& lcs, const Automorphism& a,
                       const std::vector<std::string>& frames) {
  const LeeValue lv = lee_homomorphism(alg, lcs, a.field, a.mu);
  return Json{{"field", a.field.to_string(frames)}, {"mu", a.mu.to_string()}, {"l", lv.value.to_string()}};
}

Outcome lcs_report(const Algebra& alg, const Form& omega_form, const std::vector<std::string>& frame_list) {
  const auto frames = frames_for(alg, frame_list);
  Outcome o;
  Json& j = o.report;
  j["form"] = omega_form.to_string();
  j["top_power_coefficient"] = top_power(alg, omega_form).to_string();
  const LcsForm lcs = is_lcs(alg, omega_form);
  j["lee_form"] = lcs.lee.to_string();
  if (!alg.mode().is_rational()) {
    j["note"] = "class and automorphisms need rational parameter values";
    return o;
  }
  const ExactnessViaLee ev = exactness_via_lee(alg, lcs);
  Json cls;
  if (const auto* ex = std::get_if<ExactWithPrimitive>(&ev.certificate)) {
    cls["exact"] = true;
    cls["primitive"] = ex->primitive.to_string();
  } else {
    const auto& ne = std::get<NotExact>(ev.certificate);
    cls["exact"] = false;
    cls["harmonic_basis"] = forms_json(ne.coords.space.basis);
    cls["coordinates"] = scalars_json(ne.coords.coords);
  }
  j["class"] = cls;
  Json autos = Json::array();
  bool trivial = true;
  for (std::size_t i = 0; i < ev.automorphisms.basis.size(); ++i) {
    autos.push_back(automorphism_json(alg, lcs, ev.automorphisms.basis[i], frames));
    if (!ev.lee_values[i].is_zero()) trivial = false;
  }
  j["automorphisms"] = autos;
  j["lee_homomorphism"] = trivial ? "trivial (l = 0 on every automorphism)" : "nontrivial";
  if (ev.constructed) j["automorphism_from_primitive"] = automorphism_json(alg, lcs, *ev.constructed, frames);
  j["exactness_via_lee_consistent"] = ev.consistent();
  j["verdict"] = "Lee form " + lcs.lee.to_string() + "; class " + (ev.exact() ? "exact" : "NOT exact") +
                 "; l " + (trivial ? "= 0 on automorphisms" : "!= 0 on some automorphism");
  if (!ev.consistent()) o.code = kExitMath;
  return o;
}

// ---- moser ----------------------------------------------------------------

Outcome moser_report(const Algebra& alg, const std::vector<Form>& family) {
  Outcome o;
  const MoserReport rep = verify_moser_family(alg, family);
  Json members = Json::array();
  for (std::size_t i = 0; i < rep.members.size(); ++i) {
    const auto& m = rep.members[i];
    Json row{{"index", i},
             {"form", family[i].to_string()},
             {"top_power_coefficient", m.top_power.to_string()},
             {"lee_form", m.lee.to_string()}};
    row["primitive_of_difference"] = m.primitive ? Json(m.primitive->to_string()) : Json(nullptr);
    members.push_back(row);
  }
  o.report["size"] = family.size();
  o.report["members"] = members;
  if (rep.passed()) {
    o.report["verdict"] = "pass";
  } else {
    const auto& f = *rep.failure;
    Json fail{{"index", f.index}, {"hypothesis", to_string(f.hypothesis)}};
    fail["error"] = f.error ? Json(std::string(to_string(*f.error))) : Json(nullptr);
    fail["message"] = f.message;
    o.report["verdict"] = "fail";
    o.report["failure"] = fail;
    o.code = kExitMath;
  }
  return o;
}

// ---- acfm -----------------------------------------------------------------

Rational rat(long p, long q = 1) { return Rational(p, q); }

// The t- and s-families over parameter symbols t1..s3, with n, k, lambda
// either symbols or the given constants.
Acfm symbolic_families(const Acfm& preset) {
  if (!preset.mode().is_rational()) return preset;
  const ScalarMode mode = acfm_param_mode();
  const auto& p = preset.params();
  return Acfm(AcfmParams{mode.constant(p.n.rational()), mode.constant(p.k.rational()),
                         mode.constant(p.lambda.rational())});
}

Json pfaffian_t_json(const Acfm& preset) {
  const Acfm sym = symbolic_families(preset);
  const auto& m = sym.mode();
  return Json(top_power(sym.algebra(), sym.omega_t(m.symbol("t1"), m.symbol("t2"), m.symbol("t3"))).to_string());
}

Json pfaffian_s_json(const Acfm& preset) {
  const Acfm sym = symbolic_families(preset);
  const auto& m = sym.mode();
  return Json(top_power(sym.algebra(), sym.omega_s(m.symbol("s1"), m.symbol("s2"), m.symbol("s3"))).to_string());
}

std::vector<std::array<Rational, 3>> theorem1_grid() {
  std::vector<std::array<Rational, 3>> grid;
  for (const Rational& a : {rat(1), rat(2), rat(-1, 2)})
    for (const Rational& b : {rat(1), rat(3)})
      for (const Rational& c : {rat(0), rat(1, 2)}) grid.push_back({a, b, c});
  return grid;
}

Json theorem1_family(const Acfm& preset, bool s_family, bool& holds) {
  const Algebra& alg = preset.algebra();
  const Form expected_lee = s_family ? preset.lee_s() : preset.lee_t();
  const Form unit = s_family ? preset.two_form(Acfm::kBeta, Acfm::kEta) : preset.two_form(Acfm::kAlpha, Acfm::kEta);
  const ClassCoordinates unit_class = class_coords(alg, expected_lee, unit);
  Json rows = Json::array();
  for (const auto& [a, b, c] : theorem1_grid()) {
    const Form omega_form = s_family ? preset.omega_s(a, b, c) : preset.omega_t(a, b, c);
    Json row{{"params", Json::array({a.to_string(), b.to_string(), c.to_string()})},
             {"top_power_coefficient", top_power(alg, omega_form).to_string()},
             {"product_nonzero", !(a * b).is_zero()}};
    try {
      const LcsForm lcs = is_lcs(alg, omega_form);
      const ClassCoordinates cc = class_coords(alg, lcs.lee, omega_form);
      bool multiple = cc.coords.size() == unit_class.coords.size();
      for (std::size_t i = 0; multiple && i < cc.coords.size(); ++i)
        multiple = cc.coords[i] == Scalar(a) * unit_class.coords[i];
      const bool exact = is_exact(primitive(alg, lcs.lee, omega_form));
      row["lee_form"] = lcs.lee.to_string();
      row["lee_matches"] = lcs.lee == expected_lee;
      row["class_is_first_param_times_unit"] = multiple;
      row["class_nonzero"] = !cc.is_zero();
      row["exact"] = exact;
      if (!(lcs.lee == expected_lee) || !multiple || cc.is_zero() || exact) holds = false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
      row["lcs"] = "degenerate";
    }
    rows.push_back(row);
  }
  return rows;
}

Json theorem1_json(const Acfm& preset) {
  Json j;
  bool holds = true;
  j["top_power_t"] = pfaffian_t_json(preset);
  j["top_power_s"] = pfaffian_s_json(preset);
  j["unit_t"] = "alpha^eta";
  j["t_family"] = theorem1_family(preset, false, holds);
  j["unit_s"] = "beta^eta";
  j["s_family"] = theorem1_family(preset, true, holds);
  j["holds_on_sample"] = holds;
  return j;
}

Json prop1_side(const Acfm& preset, bool plus) {
  const Algebra& alg = preset.algebra();
  const Form omega = plus ? preset.lee_s() : preset.lee_t();
  const std::size_t base = plus ? Acfm::kBeta : Acfm::kAlpha;
  const Form e = preset.algebra().generator(base);
  const std::vector<Form> forms{e, wedge(e, preset.eta()), wedge(wedge(e, preset.gamma()), preset.eta())};
  Json j;
  j["omega"] = omega.to_string();
  Json rows = Json::array();
  for (const auto& f : forms) {
    rows.push_back(Json{{"form", f.to_string()},
                        {"d_omega", d_omega(alg, omega, f).to_string()},
                        {"delta_omega", delta_omega(alg, omega, f).to_string()}});
  }
  j["harmonic_candidates"] = rows;
  const Form target = plus ? preset.two_form(Acfm::kAlpha, Acfm::kGamma) : preset.two_form(Acfm::kBeta, Acfm::kGamma);
  const auto cert = primitive(alg, omega, target);
  j["exact_form"] = target.to_string();
  j["primitive"] = is_exact(cert) ? Json(std::get<ExactWithPrimitive>(cert).primitive.to_string()) : Json(nullptr);
  return j;
}

Json section4_json(const Acfm& preset) {
  const Algebra& alg = preset.algebra();
  const auto& frames = Acfm::frame_names();
  Json j;
  Json frob = Json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto chk = frobenius_integrable(alg, alg.generator(i));
    frob[alg.basis()->name(i)] =
        chk.integrable ? Json("integrable") : Json("not integrable: " + chk.obstruction.to_string());
  }
  j["frobenius"] = frob;
  Json inv = Json::object();
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (const auto& [a, b] : pairs) {
    const auto chk = involutive(alg, {a, b});
    const std::string key = "{" + frames[a] + ", " + frames[b] + "}";
    inv[key] = chk.involutive ? Json("involutive")
                              : Json("not involutive: [" + frames[chk.witness_pair->first] + ", " +
                                     frames[chk.witness_pair->second] + "] = " +
                                     chk.witness_bracket->to_string(frames));
  }
  j["involutive"] = inv;
  const Form ae = preset.two_form(Acfm::kAlpha, Acfm::kEta);
  Json ranks = Json::array();
  for (const std::vector<std::size_t>& fields :
       {std::vector<std::size_t>{0, 3}, std::vector<std::size_t>{0, 1, 3}}) {
    const auto rr = restricted_rank(alg, ae, fields);
    std::string label;
    for (auto f : fields) label += (label.empty() ? "" : ", ") + frames[f];
    Json kernel = Json::array();
    for (const auto& v : rr.kernel) kernel.push_back(v.to_string(frames));
    ranks.push_back(Json{{"form", ae.to_string()}, {"fields", "{" + label + "}"}, {"rank", rr.rank}, {"kernel", kernel}});
  }
  j["restricted_rank"] = ranks;
  return j;
}

struct AcfmFlags {
  bool theorem1 = false, pfaffian_t = false, pfaffian_s = false, prop1 = false, cohomology = false,
       exact = false, lck = false, section4 = false;
};

Outcome acfm_report(const Acfm& preset, const AcfmFlags& f) {
  const auto& frames = Acfm::frame_names();
  const Algebra& alg = preset.algebra();
  Outcome o;
  Json& j = o.report;
  j["params"] = Json{{"n", preset.params().n.to_string()},
                     {"k", preset.params().k.to_string()},
                     {"lambda", preset.params().lambda.to_string()}};
  j["structure"] = structure_json(alg);
  j["brackets"] = brackets_json(brackets_from_d(alg), frames);
  j["unimodular"] = is_unimodular(alg);
  if (f.pfaffian_t) j["top_power_t"] = pfaffian_t_json(preset);
  if (f.pfaffian_s) j["top_power_s"] = pfaffian_s_json(preset);
  const bool needs_values = f.theorem1 || f.prop1 || f.cohomology || f.exact || f.lck || f.section4;
  if (needs_values && !alg.mode().is_rational())
    throw Error(ErrorKind::ParamModeUnsupported,
                "only --pfaffian-t and --pfaffian-s run with --param-mode; give --n, --k, --lambda instead");
  if (f.theorem1) {
    j["theorem1"] = theorem1_json(preset);
    if (!j["theorem1"]["holds_on_sample"].get<bool>()) o.code = kExitMath;
  }
  if (f.prop1) j["prop1"] = Json{{"minus", prop1_side(preset, false)}, {"plus", prop1_side(preset, true)}};
  if (f.cohomology) {
    j["complex"] = kComplexLabel;
    j["cohomology"] = Json::array({cohomology_json(alg, preset.lee_t()), cohomology_json(alg, preset.lee_s()),
                                   cohomology_json(alg, Form(alg.basis(), 1))});
  }
  auto add_lcs = [&](const char* key, const Form& form) {
    Outcome sub = lcs_report(alg, form, frames);
    j[key] = sub.report;
    o.code = std::max(o.code, sub.code);
  };
  if (f.exact) {
    add_lcs("exact_minus", preset.exact_lcs(-1));
    add_lcs("exact_plus", preset.exact_lcs(+1));
  }
  if (f.lck) add_lcs("lck", preset.lck_form());
  if (f.section4) j["section4"] = section4_json(preset);
  return o;
}

std::vector<Form> moser_preset(const Acfm& preset, const std::string& which, const Rational& t1,
                               const Rational& t3) {
  std::vector<Form> family;
  if (which == "grid") {
    // Rational stand-in 1 + t for the exponential growth factor.
    const std::vector<Rational> steps{rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
    for (const auto& s : steps)
      for (const auto& t : steps) family.push_back(preset.moser_member(t1, rat(1) + t, s, t3));
  } else if (which == "crossing") {
    for (const Rational& t : {rat(0), rat(1, 2), rat(1), rat(3, 2)})
      family.push_back(preset.omega_t(rat(1), rat(1), t));
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown preset family '" + which + "'");
  }
  return family;
}

Acfm acfm_from_options(const std::string& n, const std::string& k, const std::string& lambda) {
  const ScalarMode q = ScalarMode::rational();
  return Acfm(AcfmParams{parse_scalar(n, q), parse_scalar(k, q), parse_scalar(lambda, q)});
}

void emit(const Outcome& o, const std::string& command, bool json, std::ostream& out) {
  Json doc;
  doc["command"] = command;
  for (const auto& [k, v] : o.report.items()) doc[k] = v;
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    render(doc, "", out);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant exterior calculus: twisted cohomology, Hodge theory, LCS invariants."};
  app.name("lich");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Structured output with exact scalar strings");

  std::string file;
  std::string omega_text = "0";
  std::string form_text;
  std::vector<std::string> members;
  std::string n = "1", k = "1", lambda = "1";
  bool param_mode = false;
  AcfmFlags flags;
  std::string preset_family;
  std::string t1_text = "2", t3_text = "0";

  auto* check = app.add_subcommand("check", "Parse a structure file and run d^2, Jacobi and unimodularity checks");
  check->add_option("file", file, "Structure file")->required();

  auto* coh = app.add_subcommand("cohomology", "Twisted cohomology of the invariant complex");
  coh->add_option("file", file, "Structure file")->required();
  coh->add_option("--omega", omega_text, "Closed 1-form (default 0)");

  auto* lcs = app.add_subcommand("lcs", "Certify a locally conformal symplectic form");
  lcs->add_option("file", file, "Structure file")->required();
  lcs->add_option("--form", form_text, "2-form")->required();

  auto* acfm = app.add_subcommand("acfm", "Built-in ACFM four-manifold");
  auto* opt_n = acfm->add_option("--n", n, "Nonzero integer n (default 1)");
  auto* opt_k = acfm->add_option("--k", k, "Nonzero k (default 1)");
  auto* opt_l = acfm->add_option("--lambda", lambda, "Nonzero lambda (default 1)");
  acfm->add_flag("--param-mode", param_mode, "Treat n, k, lambda as symbols")->excludes(opt_n, opt_k, opt_l);
  acfm->add_flag("--theorem1", flags.theorem1, "Both families on a parameter grid");
  acfm->add_flag("--pfaffian-t", flags.pfaffian_t, "Top-power coefficient of the t-family");
  acfm->add_flag("--pfaffian-s", flags.pfaffian_s, "Top-power coefficient of the s-family");
  acfm->add_flag("--prop1", flags.prop1, "Harmonic forms and primitives for -k gamma and +k gamma");
  acfm->add_flag("--cohomology", flags.cohomology, "Cohomology for -k gamma, +k gamma and 0");
  acfm->add_flag("--exact", flags.exact, "The exact LCS forms d_omega(eta)");
  acfm->add_flag("--lck", flags.lck, "The locally conformal Kaehler form");
  acfm->add_flag("--section4", flags.section4, "Integrability, involutivity and restricted ranks");

  auto* moser = app.add_subcommand("moser", "Verify the hypotheses of the LCS Moser theorem on a family");
  auto* opt_file = moser->add_option("file", file, "Structure file");
  auto* opt_members = moser->add_option("--member", members, "Family member (repeatable)")
                          ->expected(1)
                          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* opt_preset = moser->add_option("--preset", preset_family, "ACFM family: grid or crossing")
                         ->excludes(opt_file, opt_members);
  opt_file->needs(opt_members);
  opt_members->needs(opt_file);
  moser->add_option("--n", n, "ACFM n for --preset");
  moser->add_option("--k", k, "ACFM k for --preset");
  moser->add_option("--lambda", lambda, "ACFM lambda for --preset");
  moser->add_option("--t1", t1_text, "t1 for --preset grid (default 2)");
  moser->add_option("--t3", t3_text, "t3 for --preset grid (default 0)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (check->parsed()) {
      const Algebra alg = load_algebra(file);
      Outcome o = check_report(alg, {});
      o.report = Json{{"input", file}, {"report", o.report}};
      emit(o, "check", json, out);
      return o.code;
    }
    if (coh->parsed()) {
      const Algebra alg = load_algebra(file);
      const Form omega = parse_form(omega_text, alg.basis(), 1);
      Outcome o;
      o.report = Json{{"input", file}, {"complex", kComplexLabel}, {"report", cohomology_json(alg, omega)}};
      emit(o, "cohomology", json, out);
      return o.code;
    }
    if (lcs->parsed()) {
      const Algebra alg = load_algebra(file);
      const Form omega_form = parse_form(form_text, alg.basis(), 2);
      Outcome o = lcs_report(alg, omega_form, {});
      o.report = Json{{"input", file}, {"complex", kComplexLabel}, {"report", o.report}};
      emit(o, "lcs", json, out);
      return o.code;
    }
    if (acfm->parsed()) {
      const Acfm preset = param_mode ? Acfm::symbolic() : acfm_from_options(n, k, lambda);
      Outcome o = acfm_report(preset, flags);
      emit(o, "acfm", json, out);
      return o.code;
    }
    if (moser->parsed()) {
      Outcome o;
      if (!preset_family.empty()) {
        const Acfm preset = acfm_from_options(n, k, lambda);
        const ScalarMode q = ScalarMode::rational();
        const auto family = moser_preset(preset, preset_family, parse_scalar(t1_text, q).rational(),
                                         parse_scalar(t3_text, q).rational());
        o = moser_report(preset.algebra(), family);
        o.report = Json{{"preset", preset_family}, {"complex", kComplexLabel}, {"report", o.report}};
      } else if (!file.empty()) {
        const Algebra alg = load_algebra(file);
        std::vector<Form> family;
        for (const auto& m : members) family.push_back(parse_form(m, alg.basis(), 2));
        o = moser_report(alg, family);
        o.report = Json{{"input", file}, {"complex", kComplexLabel}, {"report", o.report}};
      } else {
        err << "error: moser needs FILE with --member, or --preset\n";
        return kExitInput;
      }
      emit(o, "moser", json, out);
      return o.code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kExitInput : kExitMath;
  }
  (void)opt_preset;
  return kExitInput;
}

}  // namespace lich
