#pragma once

// Command implementations behind the horikawa CLI. Each returns a Report
// whose exit_code is 0 (success), 1 (failed verification or inadmissible
// input) or 2 (usage error).

#include <horikawa/catalog.hpp>
#include <horikawa/report.hpp>
#include <horikawa/verify.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace horikawa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest chi or k a single construction accepts.
inline constexpr int kMaxParameter = 100000;
/// Largest K^2 for which classify lists every canonical image.
inline constexpr int kMaxCatalogued = 4000;

class UsageError : public Error {
 public:
  using Error::Error;
};

inline Integer parse_integer(const std::string& text, const std::string& what) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw UsageError(what + ": '" + text + "' is not an integer");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw UsageError(what + ": '" + text + "' is not an integer");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

namespace detail {

inline std::string str(const Integer& v) { return v.str(); }
inline std::string str(const Rational& v) { return horikawa::to_string(v); }
inline std::string str(int v) { return std::to_string(v); }
inline std::string str(bool v) { return v ? "true" : "false"; }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::vector<std::string> assumption_lines(const Assumptions& a) {
  return {std::string("general_position = ") + (a.general_position ? "true" : "false") +
              " (blown-up points and nodes in general position)",
          std::string("smoothness_assumed = ") + (a.smoothness_assumed ? "true" : "false") +
              " (branch curves smooth away from declared singularities)",
          "q(S) = 0 taken from the construction, not computed"};
}

inline Report usage_report(const std::string& command, const std::string& message) {
  Report r;
  r.command = command;
  r.error = message;
  r.exit_code = kExitUsage;
  return r;
}

inline void add_cover(Report& rep, const ConstructionRecipe& r) {
  Section& s = rep.section("building data");
  s.add("base", r.base.describe(), "blow_up(hirzebruch(e), n)");
  s.add("basis", join(r.base.basis_labels(), ", "), "basis_labels");
  s.add("degree", str(r.cover.degree), "cover");
  for (std::size_t i = 0; i < r.cover.branch.size(); ++i)
    s.add(r.cover.degree == 2 ? "B" : "D_" + std::to_string(i + 1), r.cover.branch[i].to_string(), "branch class");
  s.add("L", r.cover.L.to_string(), "derive_L: degree * L = sum j D_j");
  if (r.cover.transversal_node_count > 0)
    s.add("transversal nodes", str(r.cover.transversal_node_count), "declared, checked against D_1.D_2");
  for (const auto& w : r.cover.warnings) s.add("warning", w, "make_cover");
}

inline void add_invariants(Report& rep, const InvariantReport& inv, int degree, const std::string& title = "invariants") {
  Section& s = rep.section(title);
  const bool z2 = degree == 2;
  s.add("K^2", str(inv.k_squared), z2 ? "2(K_Y + L)^2" : "(3K_Y + 2D_1 + 2D_2)^2 / 3");
  s.add("chi", str(inv.chi), z2 ? "2 + L(K_Y + L)/2" : "3 + L(K_Y + L)/2 + M(K_Y + M)/2, M = D_1 + D_2 - L");
  s.add("p_g", inv.p_g_string(), z2 ? "h0(K_Y + L)" : "h0(K_Y + L) + h0(K_Y + M)");
  s.add(std::to_string(inv.canonical_multiple.m) + "K", "pi^*(" + inv.canonical_multiple.cls.to_string() + ")",
        z2 ? "K_X = pi^*(K_Y + L)" : "3K_X = pi^*(3K_Y + 2D_1 + 2D_2)");
  s.add("positivity", to_string(inv.minimal_or_ample), "certificate");
  for (const auto& n : inv.notes) s.add("note", n, "");
}

inline void add_recipe(Report& rep, const ConstructionRecipe& r) {
  {
    Section& s = rep.section("target");
    s.add("K^2", str(r.target.k_squared), r.name == "stable" ? "2chi - 5" : (r.name == "component-II" ? "8k" : "2chi - 6"));
    s.add("chi", str(r.target.chi), r.name == "component-II" ? "4k + 3" : "input");
    if (r.parameters) {
      s.add("e", str(r.parameters->e), "pick_parameters: chi mod 3");
      s.add("alpha", str(r.parameters->alpha), "pick_parameters");
      s.add("beta", str(r.parameters->beta), "pick_parameters");
      s.add("N", str(r.parameters->intersection_points()), "D_1.D_2 = 2 alpha + 2 beta - 4e");
    }
    s.add("blown-up points", str(r.blow_up_count), r.name == "stable" ? "N - 3" : "N");
  }
  add_cover(rep, r);
  add_invariants(rep, r.report, r.cover.degree);
  if (r.canonical_alt)
    rep.sections.back().add(r.cover.degree == 2 ? "2K" : "3K (alt)", "pi^*(" + r.canonical_alt->to_string() + ")",
                            r.cover.degree == 2 ? "2K_X = pi^*(2K_Y + B)" : "(alpha + 2 beta - 3e - 6) q*F + D_1");

  Section& cert = rep.section("certificates");
  for (const auto& c : r.certificates) cert.add("summary", c, "");
  if (r.nef) {
    cert.add("nef divisor", r.nef->divisor.to_string(), "3K_Y + 2D_1 + 2D_2");
    cert.add("nef status", to_string(r.nef->status), "D = D~_1 + m q*F, both summands irreducible");
    cert.add("fibre multiple m", str(r.nef->fiber_multiple), "alpha + 2 beta - 3e - 6");
    for (const auto& w : r.nef->witness_checks) cert.add("D." + w.witness, str(w.value), "intersect");
    cert.add("R virtual count", str(r.nef->r_count.value), "h0(D0 + (alpha + beta - e - 2)F - sum E)");
    cert.add("R argument available", str(r.nef->r_trick_available), "virtual count >= 1");
    if (!r.nef->gap.empty()) cert.add("gap", r.nef->gap, "");
  }
  if (r.ampleness) {
    const AmplenessCertificate& a = *r.ampleness;
    cert.add("ample divisor", a.divisor.to_string(), "q*(2D0 + (2 alpha + 2 beta - 3e - 6)F) - sum E");
    cert.add("D^2", str(a.self_intersection), "self_intersection");
    cert.add("D.E_i", str(a.exceptional_intersection), "intersect");
    cert.add("feasibility coefficient", str(a.feasibility_coefficient), "alpha + beta - 3e - 4");
    cert.add("verdict", to_string(a.verdict), "coef*x + y < 0 over x, y >= 0");
    if (a.exceptional_witness)
      cert.add("exceptional candidate",
               "(" + std::to_string(a.exceptional_witness->first) + "," + std::to_string(a.exceptional_witness->second) + ")",
               "negative_region");
    if (!a.exclusion_reason.empty()) cert.add("exclusion", a.exclusion_reason, "");
    cert.add("R", a.witness_class.to_string(), "D0 + (alpha + beta - e - 2)F through the blown-up points");
    cert.add("h0(R) (virtual)", str(a.witness_count.value), "h0 with imposed points");
    cert.add("h0(R) tight", str(a.witness_count_tight), "virtual count == 1");
    cert.add("boundary D.C = 0 excluded", str(a.boundary_excluded), "negative_region, non-strict");
    cert.add("boundary note", a.boundary_note, "");
  }

  Section& comp = rep.section("component");
  comp.add("claim", to_string(r.component_claim), "parity_discriminator / canonical image");
  comp.add("basis", r.claim_basis, "");
  if (!r.special_fiber.empty()) {
    std::vector<std::string> squares;
    for (const auto& v : r.special_fiber) squares.push_back(v.str());
    comp.add("special fibre components", "[" + join(squares, ", ") + "]", "preimage_components(q*F - E_1), (E_1)");
    comp.add("special fibres", str(r.special_fiber_count), "one per blown-up point");
    comp.add("component meeting", str(r.special_fiber_meeting), "3 (q*F - E_1).E_1");
  }
  if (r.canonical_image) {
    comp.add("canonical system", r.canonical_image->system.to_string(), "K_Y + L");
    comp.add("canonical image", r.canonical_image->image, "canonical_image_info");
    comp.add("note", r.canonical_image->note, "");
  }
  if (!r.z3_action.empty()) {
    comp.add("Z3 action", r.z3_action, "");
    comp.add("Z3 action verified", str(r.z3_action_verified), "invariance_check");
  }
  if (r.scroll_curve) comp.add("branch curve C", scroll_class(*r.scroll_curve).to_string(), "scroll_class");
  if (r.plane_curve) comp.add("branch curve", plane_class(*r.plane_curve).to_string(), "plane_class");

  Section& sing = rep.section("singularities");
  sing.add("1/3(1,1) points", str(r.ledger.third11_count), "contract_minus3");
  sing.add("canonical points", str(r.ledger.canonical_count), "classify_germ");
  for (const auto& p : r.ledger.canonical_points) sing.add("germ", p.to_string(), "classify_germ(10k + 10, 5)");
  for (const auto& m : r.metadata) rep.references.push_back(m);
}

inline void add_stable_record(Report& rep, const StableSurfaceRecord& rec, const std::string& k2_source) {
  Section& s = rep.section("stable surface");
  s.add("K^2", str(rec.k_squared), k2_source);
  s.add("chi", str(rec.chi), "unchanged by contraction");
  s.add("1/3(1,1) points", str(rec.ledger.third11_count), "contract_minus3");
  const BicanonicalCount bic = h0_2K(rec);
  s.add("R(2K) total", str(rr_correction(rec.ledger)), "-1/3 per 1/3(1,1) point");
  s.add("h0(2K)", str(bic.value), "chi + K^2 + sum R_x(2K)");
  s.add("chi + K^2", str(Rational(rec.chi) + rec.k_squared), "");
  s.add("no canonical models in component", str(rec.in_component_without_canonical_models), "h0(2K) != chi + K^2");
  s.add("Q-Gorenstein smoothable", str(rec.smoothable), "1/3(1,1) is rigid");
  s.add("K ample", rec.ample_canonical ? "certified" : "not certified", "ampleness certificate");
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report cmd_classify(const Integer& k_squared, const Integer& chi) {
  Report rep;
  rep.command = "classify";
  rep.inputs = {{"k2", k_squared.str(), "input"}, {"chi", chi.str(), "input"}};
  Section& s = rep.section("admissibility");
  const bool ok = admissible(k_squared, chi);
  s.add("admissible", detail::str(ok), "chi >= 1, K^2 >= 1, 2chi - 6 <= K^2 <= 9chi");
  if (!ok) {
    rep.error = "(K^2, chi) = (" + k_squared.str() + ", " + chi.str() + ") is not admissible: ";
    if (chi < 1)
      rep.error += "chi < 1";
    else if (k_squared < 1)
      rep.error += "K^2 < 1";
    else if (k_squared < 2 * chi - 6)
      rep.error += "K^2 < 2chi - 6 (below the Noether line)";
    else
      rep.error += "K^2 > 9chi (above the Miyaoka-Yau line)";
    rep.exit_code = kExitFailure;
    return rep;
  }
  const bool on_line = k_squared == 2 * chi - 6;
  s.add("on K^2 = 2chi - 6", detail::str(on_line), "K^2 - (2chi - 6) = " + Integer(k_squared - (2 * chi - 6)).str());
  s.add("on K^2 = 2chi - 5", detail::str(k_squared == 2 * chi - 5), "");
  if (!on_line) {
    rep.references.push_back("components are only catalogued on the line K^2 = 2chi - 6");
    return rep;
  }
  Section& c = rep.section("components");
  if (k_squared > kMaxCatalogued) {
    c.add("count", k_squared % 8 == 0 ? "2" : "1", "2 iff K^2 = 0 mod 8");
    c.add("canonical images", "not listed above K^2 = " + std::to_string(kMaxCatalogued), "");
    return rep;
  }
  const ComponentInfo info = classify(k_squared, chi);
  c.add("count", detail::str(info.count), "2 iff K^2 = 0 mod 8");
  for (std::size_t i = 0; i < info.labels.size(); ++i) {
    std::vector<std::string> imgs;
    for (const auto& img : info.canonical_images[i]) imgs.push_back(img.to_string());
    c.add("component " + to_string(info.labels[i]) + " canonical images",
          imgs.empty() ? "(not catalogued)" : "{" + detail::join(imgs, ", ") + "}", "classify");
  }
  if (info.count == 2) {
    rep.references.push_back("component I: canonical image F_e with e = 0 mod 2, e <= K^2/4");
    rep.references.push_back("component II: canonical image F_{K^2/4 + 2}, or P2 / quartic cone at K^2 = 8");
  }
  return rep;
}

struct ConstructOptions {
  std::string variant;  // component-I | component-II | stable
  std::optional<int> chi;
  std::optional<int> k;
  std::optional<int> epsilon;
  Assumptions assumptions;
};

inline Report cmd_construct(const ConstructOptions& opt) {
  Report rep;
  rep.command = "construct " + opt.variant;
  rep.assumptions = detail::assumption_lines(opt.assumptions);
  auto need = [&](const std::optional<int>& v, const char* flag, int lo) -> int {
    if (!v) throw UsageError("construct " + opt.variant + " needs " + flag);
    if (*v < lo || *v > kMaxParameter)
      throw UsageError(std::string(flag) + " must lie in " + std::to_string(lo) + ".." + std::to_string(kMaxParameter) +
                       ", got " + std::to_string(*v));
    rep.inputs.push_back({std::string(flag).substr(2), std::to_string(*v), "input"});
    return *v;
  };
  try {
    if (opt.variant == "component-I") {
      if (opt.k || opt.epsilon) throw UsageError("component-I takes --chi only");
      const int chi = need(opt.chi, "--chi", 4);
      detail::add_recipe(rep, build_component_I(chi, opt.assumptions));
    } else if (opt.variant == "component-II") {
      if (opt.chi || opt.epsilon) throw UsageError("component-II takes --k only");
      const int k = need(opt.k, "--k", 1);
      detail::add_recipe(rep, build_component_II(k, opt.assumptions));
    } else if (opt.variant == "stable") {
      if (opt.k) throw UsageError("stable takes --chi and optionally --epsilon");
      if (opt.epsilon) {
        const int chi = need(opt.chi, "--chi", 4);
        const int eps = *opt.epsilon;
        if (eps < 1 || 3 * eps > 2 * chi + 2)
          throw UsageError("--epsilon must satisfy 1 <= 3 eps <= 2chi + 2 = " + std::to_string(2 * chi + 2) + ", got " +
                           std::to_string(eps));
        rep.inputs.push_back({"epsilon", std::to_string(eps), "input"});
        const StableSurfaceRecord rec = epsilon_family(chi, eps);
        Section& src = rep.section("source");
        src.add("smooth surface", "component-I construction, (K^2, chi) = (" + std::to_string(2 * chi - 6) + ", " +
                                      std::to_string(chi) + ")",
                "build_component_I");
        src.add("contracted (-3)-curves", std::to_string(3 * eps), "one per special fibre, 3 eps <= 2chi + 2");
        detail::add_stable_record(rep, rec, "2chi - 6 + 3 eps / 3");
        Section& b = rep.section("bound");
        b.add("3K^2", detail::str(3 * rec.k_squared), "");
        b.add("8chi - 16", std::to_string(8 * chi - 16), "");
        b.add("equality", detail::str(3 * rec.k_squared == Rational(8 * chi - 16)), "iff 3 eps = 2chi + 2");
      } else {
        const int chi = need(opt.chi, "--chi", 3);
        const StableConstruction sc = build_stable(chi, opt.assumptions);
        detail::add_recipe(rep, sc.recipe);
        detail::add_stable_record(rep, sc.record, "K^2 of the resolution + 3/3");
        Section& res = rep.section("node resolution");
        res.add("resolved base", sc.resolution.resolved_spec.base.describe(), "blow up the 3 nodes");
        res.add("resolved K^2", detail::str(sc.resolution.resolved.k_squared), "z3_invariants");
        res.add("resolved chi", detail::str(sc.resolution.resolved.chi), "z3_invariants");
        res.add("K^2 direct", detail::str(sc.k_squared_direct), "(3K_Y + 2D_1 + 2D_2)^2 / 3 on the nodal data");
      }
    } else {
      throw UsageError("unknown construction '" + opt.variant + "' (component-I, component-II, stable)");
    }
  } catch (const UsageError& err) {
    rep.error = err.what();
    rep.exit_code = kExitUsage;
  } catch (const Error& err) {
    rep.error = std::string("construction failed: ") + err.what();
    rep.exit_code = kExitFailure;
  }
  return rep;
}

inline Report cmd_enumerate(int chi_min, int chi_max) {
  Report rep;
  rep.command = "enumerate";
  rep.inputs = {{"chi-min", std::to_string(chi_min), "input"}, {"chi-max", std::to_string(chi_max), "input"}};
  if (chi_min < 1 || chi_max > kMaxRange)
    return detail::usage_report("enumerate", "range must lie inside 1.." + std::to_string(kMaxRange));
  Table t;
  t.title = "Horikawa line and the line above it";
  t.columns = {"chi", "K^2 (2chi-6)", "components", "K^2 (2chi-5)", "constructions", "ledger"};
  for (int chi = chi_min; chi <= chi_max; ++chi) {
    const int k_low = 2 * chi - 6;
    std::string components = "-";
    std::vector<std::string> constructions;
    std::vector<std::string> ledger;
    if (admissible(k_low, chi)) {
      components = std::to_string(classify(k_low, chi).count);
      constructions.push_back("component-I");
      ledger.push_back("I: smooth");
      if (k_low % 8 == 0) {
        constructions.push_back("component-II(k=" + std::to_string(k_low / 8) + ")");
        ledger.push_back(k_low / 8 % 3 == 1 && k_low > 8 ? "II: one A_4" : "II: smooth");
      }
    }
    std::string k_high = "-";
    if (chi >= 3) {
      k_high = std::to_string(2 * chi - 5);
      constructions.push_back("stable");
      ledger.push_back("stable: 3 x 1/3(1,1)");
    }
    if (constructions.empty()) continue;
    t.rows.push_back({std::to_string(chi), k_low >= 1 ? std::to_string(k_low) : "-", components, k_high,
                      detail::join(constructions, ", "), detail::join(ledger, "; ")});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

inline Report cmd_verify_paper(const VerificationOptions& opt) {
  Report rep;
  rep.command = "verify-paper";
  rep.inputs = {{"chi-max", std::to_string(opt.chi_max), "input"}, {"k-max", std::to_string(opt.k_max), "input"}};
  if (opt.fault) rep.inputs.push_back({"inject-fault", opt.fault->to_string(), "input"});
  rep.assumptions = detail::assumption_lines(Assumptions{});
  try {
    validate(opt);
  } catch (const Error& err) {
    return detail::usage_report(rep.command, err.what());
  }
  const VerificationResult result = verify_paper(opt);
  rep.checks = result.checks;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) passed += c.passed ? 1 : 0;
  rep.section("summary")
      .add("checks", std::to_string(rep.checks.size()), "")
      .add("passed", std::to_string(passed), "")
      .add("failed", std::to_string(rep.checks.size() - passed), "");
  if (const CheckLine* first = result.first_failure()) {
    rep.error = "identity violated: " + first->id + " (" + first->anchor + ") at " + first->detail;
    rep.exit_code = kExitFailure;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario files

/// One command with its parameters, as read from a JSON scenario file:
///   {"command": "construct", "variant": "stable", "chi": 5, "format": "json",
///    "assumptions": {"general_position": true, "smoothness_assumed": true}}
struct Scenario {
  std::string command;
  std::string variant;
  std::optional<Integer> k2;
  std::optional<Integer> chi;
  std::optional<int> k;
  std::optional<int> epsilon;
  std::optional<int> chi_min;
  std::optional<int> chi_max;
  std::optional<int> k_max;
  std::string format = "text";
  Assumptions assumptions;
};

namespace detail {

inline Integer json_integer(const nlohmann::json& j, const std::string& key) {
  const nlohmann::json& v = j.at(key);
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) return parse_integer(v.get<std::string>(), key);
  throw UsageError("scenario field '" + key + "' must be an integer or a decimal string");
}

inline std::optional<int> json_small(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  const Integer v = json_integer(j, key);
  if (v < -kMaxParameter || v > kMaxParameter) throw UsageError("scenario field '" + key + "' out of range");
  return static_cast<int>(v);
}

}  // namespace detail

inline Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("scenario must be a JSON object");
  static const std::vector<std::string> known = {"command", "variant", "k2",     "chi",    "k",          "epsilon",
                                                 "chi_min", "chi_max", "k_max",  "format", "assumptions"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw UsageError("unknown scenario field '" + key + "'");
  if (!j.contains("command") || !j.at("command").is_string()) throw UsageError("scenario needs exactly one \"command\"");
  Scenario s;
  s.command = j.at("command").get<std::string>();
  if (j.contains("variant")) s.variant = j.at("variant").get<std::string>();
  if (j.contains("k2")) s.k2 = detail::json_integer(j, "k2");
  if (j.contains("chi")) s.chi = detail::json_integer(j, "chi");
  s.k = detail::json_small(j, "k");
  s.epsilon = detail::json_small(j, "epsilon");
  s.chi_min = detail::json_small(j, "chi_min");
  s.chi_max = detail::json_small(j, "chi_max");
  s.k_max = detail::json_small(j, "k_max");
  if (j.contains("format")) s.format = j.at("format").get<std::string>();
  if (s.format != "text" && s.format != "json") throw UsageError("format must be text or json");
  if (j.contains("assumptions")) {
    const auto& a = j.at("assumptions");
    if (!a.is_object()) throw UsageError("assumptions must be an object");
    for (const auto& [key, value] : a.items()) {
      if (!value.is_boolean()) throw UsageError("assumption '" + key + "' must be a boolean");
      if (key == "general_position")
        s.assumptions.general_position = value.get<bool>();
      else if (key == "smoothness_assumed")
        s.assumptions.smoothness_assumed = value.get<bool>();
      else
        throw UsageError("unknown assumption '" + key + "'");
    }
  }
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return scenario_from_json(nlohmann::json::parse(buf.str()));
  } catch (const nlohmann::json::exception& err) {
    throw UsageError("scenario '" + path + "': " + err.what());
  }
}

inline int small_chi(const std::optional<Integer>& chi) {
  if (!chi) return 0;
  if (*chi < -kMaxParameter || *chi > kMaxParameter) throw UsageError("chi out of range");
  return static_cast<int>(*chi);
}

/// Runs a scenario. Usage problems come back as a report with exit code 2.
inline Report run_scenario(const Scenario& s, const std::optional<Fault>& fault = std::nullopt) {
  try {
    if (s.command == "classify") {
      if (!s.k2 || !s.chi) throw UsageError("classify needs k2 and chi");
      return cmd_classify(*s.k2, *s.chi);
    }
    if (s.command == "construct") {
      ConstructOptions opt{s.variant, std::nullopt, s.k, s.epsilon, s.assumptions};
      if (s.chi) opt.chi = small_chi(s.chi);
      return cmd_construct(opt);
    }
    if (s.command == "enumerate") {
      if (!s.chi_max) throw UsageError("enumerate needs chi_max");
      return cmd_enumerate(s.chi_min.value_or(1), *s.chi_max);
    }
    if (s.command == "verify-paper") {
      VerificationOptions opt;
      if (s.chi_max) opt.chi_max = *s.chi_max;
      if (s.k_max) opt.k_max = *s.k_max;
      opt.fault = fault;
      return cmd_verify_paper(opt);
    }
    throw UsageError("unknown command '" + s.command + "'");
  } catch (const UsageError& err) {
    return detail::usage_report(s.command, err.what());
  }
}

inline std::string render(const Report& r, const std::string& format) {
  return format == "json" ? to_json_text(r) : to_text(r);
}

}  // namespace horikawa
