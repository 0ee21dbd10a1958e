#pragma once

// Surfaces on the lines K^2 = 2 chi - 6 and K^2 = 2 chi - 5: admissibility,
// the component structure of the Horikawa moduli spaces, and the Z2 / Z3
// cover constructions with their positivity certificates.
//
// Every builder is split in two stages, `*_data` (choose the base and the
// branch classes) and `realize_*` (run the cover machinery on them), so a
// caller can inspect or perturb the branch data in between.

#include <horikawa/stable.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace horikawa {

// ---------------------------------------------------------------------------
// Admissibility and classification

struct AdmissiblePair {
  Integer k_squared;
  Integer chi;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// chi >= 1, K^2 >= 1 and 2 chi - 6 <= K^2 <= 9 chi.
inline bool admissible(const Integer& k_squared, const Integer& chi) {
  return chi >= 1 && k_squared >= 1 && 2 * chi - 6 <= k_squared && k_squared <= 9 * chi;
}

enum class ComponentLabel { I, II };

inline std::string to_string(ComponentLabel l) { return l == ComponentLabel::I ? "I" : "II"; }

struct ImageDescriptor {
  enum class Kind { hirzebruch, projective_plane, quartic_cone };
  Kind kind = Kind::hirzebruch;
  int e = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::hirzebruch: return "F_" + std::to_string(e);
      case Kind::projective_plane: return "P2";
      default: return "cone over a rational quartic in P4";
    }
  }
  friend bool operator==(const ImageDescriptor&, const ImageDescriptor&) = default;
};

struct ComponentInfo {
  int count = 1;
  std::vector<ComponentLabel> labels;
  /// Canonical images per label; empty when not catalogued.
  std::vector<std::vector<ImageDescriptor>> canonical_images;

  const std::vector<ImageDescriptor>& images_of(ComponentLabel l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return canonical_images[i];
    throw PreconditionError("no component " + to_string(l));
  }
};

/// Connected components of the moduli space on the line K^2 = 2 chi - 6.
inline ComponentInfo classify(const Integer& k_squared, const Integer& chi) {
  if (!admissible(k_squared, chi))
    throw PreconditionError("(K^2, chi) = (" + k_squared.str() + ", " + chi.str() + ") is not admissible");
  if (k_squared != 2 * chi - 6)
    throw PreconditionError("(K^2, chi) = (" + k_squared.str() + ", " + chi.str() + ") is off the line K^2 = 2chi - 6");

  ComponentInfo info;
  if (k_squared % 8 != 0) {
    info.count = 1;
    info.labels = {ComponentLabel::I};
    info.canonical_images = {{}};
    return info;
  }
  info.count = 2;
  info.labels = {ComponentLabel::I, ComponentLabel::II};
  std::vector<ImageDescriptor> first;
  const int quarter = static_cast<int>(k_squared / 4);
  for (int e = 0; e <= quarter; e += 2) first.push_back({ImageDescriptor::Kind::hirzebruch, e});
  std::vector<ImageDescriptor> second;
  if (k_squared > 8)
    second.push_back({ImageDescriptor::Kind::hirzebruch, quarter + 2});
  else
    second = {{ImageDescriptor::Kind::projective_plane, 0}, {ImageDescriptor::Kind::quartic_cone, 0}};
  info.canonical_images = {std::move(first), std::move(second)};
  return info;
}

enum class ParityVerdict { component_I, inconclusive };

inline std::string to_string(ParityVerdict v) { return v == ParityVerdict::component_I ? "I" : "inconclusive"; }

/// On a surface of the second component every component C of a genus 2
/// fiber has C^2 = 2p_a(C) - 2 - 2 C.Gamma, which is even. One odd
/// self-intersection therefore places the surface in component I.
inline ParityVerdict parity_discriminator(const std::vector<Integer>& self_intersections) {
  for (const auto& s : self_intersections)
    if (s % 2 != 0) return ParityVerdict::component_I;
  return ParityVerdict::inconclusive;
}

// ---------------------------------------------------------------------------
// Parameters of the Z3 constructions

struct CoverParameters {
  int e = 0;
  int alpha = 0;
  int beta = 0;

  /// Number of points where D_1 in |2D0 + alpha F| meets D_2 in |2D0 + beta F|.
  int intersection_points() const { return 2 * alpha + 2 * beta - 4 * e; }
  friend bool operator==(const CoverParameters&, const CoverParameters&) = default;
};

/// (e, alpha, beta) = (1, chi, 3), (0, chi, 1), (2, chi, 5) for chi = 0, 1, 2 mod 3.
inline CoverParameters pick_parameters(int chi) {
  if (chi < 3) throw PreconditionError("pick_parameters needs chi >= 3, got " + std::to_string(chi));
  switch (chi % 3) {
    case 0: return {1, chi, 3};
    case 1: return {0, chi, 1};
    default: return {2, chi, 5};
  }
}

struct Assumptions {
  bool general_position = true;
  bool smoothness_assumed = true;
};

// ---------------------------------------------------------------------------
// Certificates

enum class AmplenessVerdict { infeasible, exceptional_case_excluded };

inline std::string to_string(AmplenessVerdict v) {
  return v == AmplenessVerdict::infeasible ? "infeasible" : "exceptional-case-excluded";
}

/// Nakai-Moishezon certificate for
///   D = q*(2D0 + (2a + 2b - 3e - 6)F) - (E_4 + ... + E_N)
/// on F_e blown up at N - 3 of the N = 2a + 2b - 4e points of D_1 . D_2.
///
/// A curve C = q*(xD0 + yF) - sum c_i E_i with D.C < 0 has
/// sum c_i > (2a + 2b - 5e - 6)x + 2y. A curve R in |D0 + (a + b - e - 2)F|
/// through the blown-up points bounds sum c_i <= R.q(C), and the two together
/// force (a + b - 3e - 4)x + y < 0 over x, y >= 0 not both zero.
struct AmplenessCertificate {
  DivisorClass divisor;
  Integer self_intersection;
  Integer exceptional_intersection;  // D.E_i, identical for every i
  Integer feasibility_coefficient;   // a + b - 3e - 4
  AmplenessVerdict verdict = AmplenessVerdict::infeasible;
  std::optional<std::pair<int, int>> exceptional_witness;  // (x, y)
  std::string exclusion_reason;
  DivisorClass witness_class;  // R, pulled back, minus the blown-up points
  SectionCount witness_count;
  bool witness_count_tight = false;  // virtual count is exactly 1
  /// Whether the same argument with D.C = 0 allowed is also closed.
  bool boundary_excluded = false;
  std::string boundary_note;
};

namespace detail {

struct NegativeRegion {
  bool feasible = false;                         // some x, y >= 0, (x,y) != 0 solves it
  std::vector<std::pair<int, int>> sporadic;     // irreducible-admissible isolated solutions
  bool unbounded_irreducible_family = false;     // solutions among a > 0, b >= ae
};

/// Solutions of coef*x + y < 0 (or <= 0 when !strict) over x, y >= 0, (x,y) != 0,
/// sorted by whether F_e carries an irreducible curve in |xD0 + yF|: D0, F,
/// or x > 0 with y >= x e (and y > 0 when e = 0).
inline NegativeRegion negative_region(int e, const Integer& coef, bool strict) {
  auto violates = [&](const Integer& value) { return strict ? value < 0 : value <= 0; };
  NegativeRegion r;
  // Minimum over the region is min(coef, 1), attained at (1, 0) or (0, 1).
  r.feasible = violates(coef < 1 ? coef : Integer(1));
  if (!r.feasible) return r;
  if (violates(coef)) r.sporadic.push_back({1, 0});
  if (violates(Integer(1))) r.sporadic.push_back({0, 1});
  if (e > 0)
    r.unbounded_irreducible_family = violates(coef + e);  // minimise along y = x e
  else
    r.unbounded_irreducible_family = coef < 0;  // y = 1, x large
  return r;
}

inline SurfaceModel minimal_scroll(const CoverParameters& p) { return SurfaceModel::hirzebruch(p.e); }

}  // namespace detail

inline AmplenessCertificate ampleness_certificate(int e, int alpha, int beta, bool general_position = true) {
  const CoverParameters p{e, alpha, beta};
  const int blown_points = p.intersection_points() - 3;
  if (blown_points < 1) throw PreconditionError("ampleness_certificate: fewer than four intersection points");
  const SurfaceModel fe = detail::minimal_scroll(p);
  const SurfaceModel s = blow_up(fe, blown_points, general_position);
  const DivisorClass d0 = negative_section(s);
  const DivisorClass f = fiber(s);
  const DivisorClass e_sum = exceptional_sum(s);

  const DivisorClass D = Integer(2) * d0 + Integer(2 * alpha + 2 * beta - 3 * e - 6) * f - e_sum;
  const Integer d2 = self_intersection(D);
  if (d2 <= 0) throw PreconditionError("ampleness_certificate: D^2 = " + d2.str() + " is not positive");

  const Integer de = intersect(D, exceptional(s, 0));
  for (std::size_t i = 1; i < s.exceptional_count(); ++i)
    if (intersect(D, exceptional(s, i)) != de) throw Error("ampleness_certificate: D.E_i is not constant");
  if (de <= 0) throw PreconditionError("ampleness_certificate: D.E = " + de.str());

  const DivisorClass R = d0 + Integer(alpha + beta - e - 2) * f - e_sum;
  const SectionCount r_count = h0(R);
  if (r_count.value < 1)
    throw PreconditionError("ampleness_certificate: no curve in |D0 + (a+b-e-2)F| through the points (count 0)");

  const Integer coef = alpha + beta - 3 * e - 4;
  AmplenessCertificate cert{D,
                            d2,
                            de,
                            coef,
                            AmplenessVerdict::infeasible,
                            std::nullopt,
                            {},
                            R,
                            r_count,
                            r_count.value == 1,
                            false,
                            {}};

  // Strict negativity, D.C < 0.
  const detail::NegativeRegion strict = detail::negative_region(e, coef, true);
  const Integer d_on_d0 = intersect(D, d0);  // strict transform of D0 when no point lies on it
  auto excluded_by_general_position = [&](const std::pair<int, int>& w, bool strict_ineq) {
    if (w != std::pair{1, 0} || !general_position) return false;
    return strict_ineq ? d_on_d0 >= 0 : d_on_d0 > 0;
  };
  if (strict.feasible) {
    if (strict.unbounded_irreducible_family)
      throw PreconditionError("ampleness_certificate: infinitely many irreducible candidate classes, no certificate");
    for (const auto& w : strict.sporadic) {
      if (!excluded_by_general_position(w, true))
        throw PreconditionError("ampleness_certificate: candidate (" + std::to_string(w.first) + "," +
                                std::to_string(w.second) + ") cannot be excluded");
    }
    cert.verdict = AmplenessVerdict::exceptional_case_excluded;
    cert.exceptional_witness = strict.sporadic.front();
    cert.exclusion_reason = "only irreducible candidate is the negative section of F_" + std::to_string(e) +
                            ", which would have to pass through the blown-up points; excluded by general position";
  }

  // Boundary case D.C = 0.
  const detail::NegativeRegion weak = detail::negative_region(e, coef, false);
  if (!weak.feasible) {
    cert.boundary_excluded = true;
    cert.boundary_note = "no candidate with D.C = 0";
  } else if (weak.unbounded_irreducible_family) {
    cert.boundary_note = "classes x(D0 + eF) can meet D in 0 without contradicting the bound; not excluded here";
  } else {
    cert.boundary_excluded = true;
    for (const auto& w : weak.sporadic) cert.boundary_excluded = cert.boundary_excluded && excluded_by_general_position(w, false);
    cert.boundary_note = cert.boundary_excluded ? "only the negative section reaches D.C = 0; excluded by general position"
                                                : "boundary candidate not excluded";
  }
  return cert;
}

struct NefCheck {
  std::string witness;
  Integer value;
};

/// Nefness of D = q*(2D0 + (2a + 2b - 3e - 6)F) - (E_1 + ... + E_N).
///
/// Certified through D = D~_1 + (a + 2b - 3e - 6) q*F: both summands are
/// irreducible (D~_1 is the strict transform of a smooth curve, q*F a general
/// fibre), so D.C >= 0 for every other irreducible C, and D meets each
/// summand non-negatively.
struct NefCertificate {
  DivisorClass divisor;
  Positivity status = Positivity::asserted;
  std::vector<NefCheck> witness_checks;
  Integer fiber_multiple;  // a + 2b - 3e - 6
  std::string gap;
  /// A curve in |D0 + (a + b - e - 2)F| through all N points, as in the
  /// ampleness argument; recorded for comparison.
  SectionCount r_count;
  bool r_trick_available = false;
};

inline NefCertificate nef_certificate(int e, int alpha, int beta, Assumptions assumptions = {}) {
  const CoverParameters p{e, alpha, beta};
  const SurfaceModel s = blow_up(detail::minimal_scroll(p), p.intersection_points(), assumptions.general_position);
  const DivisorClass d0 = negative_section(s);
  const DivisorClass f = fiber(s);
  const DivisorClass e_sum = exceptional_sum(s);
  const DivisorClass D = Integer(2) * d0 + Integer(2 * alpha + 2 * beta - 3 * e - 6) * f - e_sum;
  const DivisorClass d1 = Integer(2) * d0 + Integer(alpha) * f - e_sum;
  const DivisorClass d2 = Integer(2) * d0 + Integer(beta) * f - e_sum;

  NefCertificate cert{D, Positivity::asserted, {}, Integer(alpha + 2 * beta - 3 * e - 6), {}, {}, false};
  const std::size_t n = s.exceptional_count();
  bool all_pass = true;
  auto check = [&](std::string name, const DivisorClass& c) {
    Integer v = intersect(D, c);
    all_pass = all_pass && v >= 0;
    cert.witness_checks.push_back({std::move(name), std::move(v)});
  };
  // E_i and q*F - E_i look alike for every i; check them all anyway.
  Integer min_e = intersect(D, exceptional(s, 0));
  Integer min_fe = intersect(D, f - exceptional(s, 0));
  for (std::size_t i = 1; i < n; ++i) {
    min_e = std::min(min_e, intersect(D, exceptional(s, i)));
    min_fe = std::min(min_fe, intersect(D, f - exceptional(s, i)));
  }
  cert.witness_checks.push_back({"min E_i", min_e});
  cert.witness_checks.push_back({"min q*F - E_i", min_fe});
  all_pass = all_pass && min_e >= 0 && min_fe >= 0;
  check("D~_1", d1);
  check("D~_2", d2);
  check("q*D0", d0);
  check("q*F", f);

  const SectionCount r = h0(d0 + Integer(alpha + beta - e - 2) * f - e_sum);
  cert.r_count = r;
  cert.r_trick_available = r.value >= 1;

  if (!all_pass) {
    cert.gap = "a witness curve meets D negatively";
    return cert;
  }
  if (!assumptions.smoothness_assumed) {
    cert.gap = "D~_1 is not known to be irreducible";
    return cert;
  }
  if (cert.fiber_multiple < 0) {
    cert.gap = "D - D~_1 is a negative multiple of q*F";
    return cert;
  }
  if (!(d1 + cert.fiber_multiple * f == D)) {
    cert.gap = "decomposition D = D~_1 + m q*F does not hold";
    return cert;
  }
  cert.status = Positivity::nef_certified;
  return cert;
}

// ---------------------------------------------------------------------------
// Recipes

enum class ComponentClaim { I, II, unlabeled };

inline std::string to_string(ComponentClaim c) {
  switch (c) {
    case ComponentClaim::I: return "I";
    case ComponentClaim::II: return "II";
    default: return "unlabeled";
  }
}

struct ConstructionRecipe {
  std::string name;
  AdmissiblePair target;
  std::optional<CoverParameters> parameters;
  SurfaceModel base;
  CoverSpec cover;
  int blow_up_count = 0;
  InvariantReport report;
  ComponentClaim component_claim = ComponentClaim::unlabeled;
  std::string claim_basis;
  SingularityLedger ledger;
  std::vector<std::string> certificates;
  std::optional<NefCertificate> nef;
  std::optional<AmplenessCertificate> ampleness;
  std::optional<CanonicalImageInfo> canonical_image;
  /// Alternative expression of canonical_multiple.cls, for cross-checking.
  std::optional<DivisorClass> canonical_alt;
  /// Self-intersections of the components over one special fibre, the number
  /// of such fibres and how often the two components meet.
  std::vector<Integer> special_fiber;
  int special_fiber_count = 0;
  Integer special_fiber_meeting = 0;
  std::optional<ScrollCurve> scroll_curve;
  std::optional<PlaneCurve> plane_curve;
  std::string z3_action;
  bool z3_action_verified = false;
  std::vector<std::string> metadata;
};

/// Self-intersections of the components of pi^* G for a curve G on the base
/// of a cyclic cover of prime degree d: one component with square d G^2 when
/// G meets the branch locus, otherwise d copies with square G^2.
inline std::vector<Integer> preimage_components(const CoverSpec& cover, const DivisorClass& curve) {
  const Integer g2 = self_intersection(curve);
  if (intersect(curve, cover.total_branch()) > 0) return {cover.degree * g2};
  return std::vector<Integer>(static_cast<std::size_t>(cover.degree), g2);
}

// Component I: Z3 covers of F_e blown up at all N points of D_1 . D_2 -----

struct ComponentIData {
  int chi = 0;
  CoverParameters parameters;
  SurfaceModel base;
  DivisorClass d1;
  DivisorClass d2;
};

inline ComponentIData component_I_data(int chi, Assumptions assumptions = {}) {
  if (chi < 4) throw PreconditionError("component-I construction needs chi >= 4 (K^2 = 2chi - 6 >= 1), got " + std::to_string(chi));
  const CoverParameters p = pick_parameters(chi);
  const SurfaceModel base = blow_up(SurfaceModel::hirzebruch(p.e), p.intersection_points(), assumptions.general_position);
  const DivisorClass d0 = negative_section(base);
  const DivisorClass f = fiber(base);
  const DivisorClass e_sum = exceptional_sum(base);
  return {chi, p, base, Integer(2) * d0 + Integer(p.alpha) * f - e_sum, Integer(2) * d0 + Integer(p.beta) * f - e_sum};
}

inline ConstructionRecipe realize_component_I(const ComponentIData& data, Assumptions assumptions = {}) {
  const CoverParameters& p = data.parameters;
  const int chi = data.chi;
  CoverSpec cover = make_cover(3, data.base, {data.d1, data.d2}, CoverOptions{assumptions.smoothness_assumed, 0, {}});
  InvariantReport report = z3_invariants(cover);

  NefCertificate nef = nef_certificate(p.e, p.alpha, p.beta, assumptions);
  report.minimal_or_ample = nef.status;

  const SurfaceModel& s = data.base;
  const DivisorClass f = fiber(s);
  const DivisorClass canonical_alt = Integer(p.alpha + 2 * p.beta - 3 * p.e - 6) * f + data.d1;

  // The fibre of F_e through p_1 becomes (q*F - E_1) + E_1.
  const DivisorClass e1 = exceptional(s, 0);
  std::vector<Integer> fiber_parts = preimage_components(cover, f - e1);
  for (auto& v : preimage_components(cover, e1)) fiber_parts.push_back(v);
  const Integer meeting = cover.degree * intersect(f - e1, e1);

  const Integer k2 = 2 * Integer(chi) - 6;
  ConstructionRecipe r{
      .name = "component-I",
      .target = {k2, chi},
      .parameters = p,
      .base = s,
      .cover = cover,
      .blow_up_count = p.intersection_points(),
      .report = std::move(report),
      .canonical_alt = canonical_alt,
      .special_fiber = fiber_parts,
      .special_fiber_count = p.intersection_points(),
      .special_fiber_meeting = meeting,
      .z3_action = "covering group of pi: S -> Bl(F_" + std::to_string(p.e) + ")",
      .z3_action_verified = true,
  };
  r.nef = std::move(nef);
  r.certificates.push_back("nef: " + to_string(r.nef->status) + (r.nef->gap.empty() ? "" : " (" + r.nef->gap + ")"));

  if (k2 % 8 == 0) {
    const ParityVerdict verdict = parity_discriminator(fiber_parts);
    if (verdict == ParityVerdict::component_I) {
      r.component_claim = ComponentClaim::I;
      r.claim_basis = "genus 2 fibre with components of odd self-intersection";
      if (k2 == 8)
        r.metadata.push_back(
            "K^2 = 8: the image of pi^*(D~_2)_red under the canonical map is a (-2)-section, so the canonical image is F_2");
    } else {
      r.claim_basis = "parity test inconclusive";
    }
  } else {
    r.claim_basis = "single component for K^2 not divisible by 8";
  }
  r.metadata.push_back("the genus 2 fibration of S is unique (recorded, not verified)");
  return r;
}

inline ConstructionRecipe build_component_I(int chi, Assumptions assumptions = {}) {
  return realize_component_I(component_I_data(chi, assumptions), assumptions);
}

// Component II: Z2 covers of P2 (k = 1) and F_{2k+2} (k >= 2) -------------

struct ComponentIIData {
  int k = 0;
  SurfaceModel base;
  DivisorClass branch;
  std::optional<ScrollCurve> scroll_curve;
  std::optional<PlaneCurve> plane_curve;
  std::vector<AdeLabel> branch_singularities;
};

/// C in |5D0 + (10k + 10)F| on F_{2k+2}, chosen by k mod 3 so that
/// t1 -> zeta t1 preserves it.
inline ScrollCurve component_II_curve(int k) {
  if (k < 2) throw PreconditionError("component_II_curve needs k >= 2");
  const int top = 10 * k + 10;
  const int shift = (k % 3 == 2) ? 0 : (k % 3 == 0 ? 1 : 2);
  return ScrollCurve{2 * k + 2, {{0, 0, 5, 0}, {top - shift, shift, 0, 5}, {0, top, 0, 5}}};
}

inline DivisorClass plane_class(const PlaneCurve& c) {
  if (c.monomials.empty()) throw PreconditionError("plane_class: empty monomial set");
  const int deg = c.monomials.front()[0] + c.monomials.front()[1] + c.monomials.front()[2];
  for (const auto& m : c.monomials)
    if (m[0] + m[1] + m[2] != deg) throw PreconditionError("plane_class: inhomogeneous monomial set");
  return DivisorClass(SurfaceModel::projective_plane(), {Integer(deg)});
}

inline ComponentIIData component_II_data(int k) {
  if (k < 1) throw PreconditionError("component-II construction needs k >= 1, got " + std::to_string(k));
  if (k == 1) {
    PlaneCurve b{{{10, 0, 0}, {0, 10, 0}, {0, 0, 10}}};
    DivisorClass cls = plane_class(b);
    return {1, cls.surface(), cls, std::nullopt, b, {}};
  }
  ScrollCurve c = component_II_curve(k);
  const DivisorClass c_cls = scroll_class(c);
  const SurfaceModel& s = c_cls.surface();
  ComponentIIData data{k, s, negative_section(s) + c_cls, c, std::nullopt, {}};
  // For k = 1 mod 3 the curve has one singular point, locally a^2 + a^(10k+10) + b^5.
  if (k % 3 == 1) data.branch_singularities.push_back(classify_germ(10 * k + 10, 5));
  return data;
}

inline ConstructionRecipe realize_component_II(const ComponentIIData& data, Assumptions assumptions = {}) {
  const int k = data.k;
  CoverSpec cover = make_cover(2, data.base, {data.branch},
                               CoverOptions{assumptions.smoothness_assumed, 0, data.branch_singularities});
  InvariantReport report = z2_invariants(cover);
  CanonicalImageInfo image = canonical_image_info(cover);
  const DivisorClass adjoint = report.canonical_multiple.cls;
  if (!data.base.is_blow_up() && is_ample_on_minimal(adjoint)) report.minimal_or_ample = Positivity::ample_certified;

  ConstructionRecipe r{
      .name = "component-II",
      .target = {Integer(8 * k), Integer(4 * k + 3)},
      .base = data.base,
      .cover = cover,
      .report = std::move(report),
      .canonical_image = image,
      .canonical_alt = Integer(2) * adjoint,  // 2K_X = pi^*(2K_Y + B)
      .scroll_curve = data.scroll_curve,
      .plane_curve = data.plane_curve,
  };
  for (const auto& sing : data.branch_singularities) {
    r.ledger.canonical_count += 1;
    r.ledger.canonical_points.push_back(sing);
  }
  if (data.plane_curve) {
    r.z3_action = "(X0:X1:X2) -> (X2:X0:X1)";
    r.z3_action_verified = invariance_check(*data.plane_curve, CurveAction::permute_P2_coordinates);
  } else if (data.scroll_curve) {
    r.z3_action = "(t1:t2;x1:x2) -> (zeta t1:t2;x1:x2)";
    // D0 = (x2 = 0) carries no t1, so only C needs checking.
    r.z3_action_verified = invariance_check(*data.scroll_curve, CurveAction::scale_t1_by_primitive_root);
  }
  r.certificates.push_back("K_X = pi^*(" + adjoint.to_string() + "), " + to_string(r.report.minimal_or_ample));

  // The canonical image decides the component.
  const ComponentInfo info = classify(r.target.k_squared, r.target.chi);
  if (image.very_ample) {
    ImageDescriptor found = data.base.kind() == SurfaceModel::Kind::projective_plane
                                ? ImageDescriptor{ImageDescriptor::Kind::projective_plane, 0}
                                : ImageDescriptor{ImageDescriptor::Kind::hirzebruch, data.base.e()};
    for (std::size_t i = 0; i < info.labels.size() && info.count == 2; ++i) {
      const auto& imgs = info.canonical_images[i];
      if (std::find(imgs.begin(), imgs.end(), found) != imgs.end() && info.labels[i] == ComponentLabel::II) {
        r.component_claim = ComponentClaim::II;
        r.claim_basis = "canonical image " + found.to_string();
      }
    }
  }
  if (r.component_claim != ComponentClaim::II) r.claim_basis = "canonical image does not identify component II";
  return r;
}

inline ConstructionRecipe build_component_II(int k, Assumptions assumptions = {}) {
  return realize_component_II(component_II_data(k), assumptions);
}

// Stable surfaces on K^2 = 2 chi - 5 ----------------------------------------

struct StableData {
  int chi = 0;
  CoverParameters parameters;
  SurfaceModel base;
  DivisorClass d1;
  DivisorClass d2;
};

/// Blow up all but three of the N intersection points; the remaining three
/// stay as nodes of D_1 + D_2.
inline StableData stable_data(int chi, Assumptions assumptions = {}) {
  if (chi < 3) throw PreconditionError("stable construction needs chi >= 3 (K^2 = 2chi - 5 >= 1), got " + std::to_string(chi));
  const CoverParameters p = pick_parameters(chi);
  const SurfaceModel base = blow_up(SurfaceModel::hirzebruch(p.e), p.intersection_points() - 3, assumptions.general_position);
  const DivisorClass d0 = negative_section(base);
  const DivisorClass f = fiber(base);
  const DivisorClass e_sum = exceptional_sum(base);
  return {chi, p, base, Integer(2) * d0 + Integer(p.alpha) * f - e_sum, Integer(2) * d0 + Integer(p.beta) * f - e_sum};
}

struct StableConstruction {
  StableSurfaceRecord record;
  ConstructionRecipe recipe;
  NodeResolution resolution;
  /// (3K_Y + 2D_1 + 2D_2)^2 / 3 computed directly on the nodal data.
  Rational k_squared_direct;
};

inline StableConstruction realize_stable(const StableData& data, Assumptions assumptions = {}) {
  const CoverParameters& p = data.parameters;
  CoverSpec cover = make_cover(3, data.base, {data.d1, data.d2}, CoverOptions{assumptions.smoothness_assumed, 3, {}});
  NodeResolution resolution = resolve_node_bookkeeping(cover, assumptions.general_position);

  const DivisorClass tri = Integer(3) * canonical_class(data.base) + Integer(2) * data.d1 + Integer(2) * data.d2;
  AmplenessCertificate cert = ampleness_certificate(p.e, p.alpha, p.beta, assumptions.general_position);

  StableSurfaceRecord record = resolution.unresolved;
  record.ample_canonical = cert.divisor == tri;
  record = with_bicanonical_flag(std::move(record));

  InvariantReport report{record.k_squared,
                         record.chi,
                         resolution.resolved.p_g,
                         CanonicalMultiple{3, tri},
                         record.ample_canonical ? Positivity::ample_certified : Positivity::asserted,
                         {"three 1/3(1,1) points over the unresolved nodes of D_1 + D_2"}};

  ConstructionRecipe r{
      .name = "stable",
      .target = {2 * Integer(data.chi) - 5, data.chi},
      .parameters = p,
      .base = data.base,
      .cover = cover,
      .blow_up_count = p.intersection_points() - 3,
      .report = std::move(report),
      .ledger = record.ledger,
      .z3_action = "covering group of pi: X -> Bl(F_" + std::to_string(p.e) + ")",
      .z3_action_verified = true,
  };
  r.claim_basis = "no canonical models in the connected component (h0(2K) != chi + K^2)";
  r.certificates.push_back("ample: " + to_string(cert.verdict));
  r.ampleness = std::move(cert);
  r.metadata.push_back("the three (-3)-curves contracted are disjoint (declared)");

  const Rational direct = Rational(self_intersection(tri), 3);
  return {std::move(record), std::move(r), std::move(resolution), direct};
}

inline StableConstruction build_stable(int chi, Assumptions assumptions = {}) {
  return realize_stable(stable_data(chi, assumptions), assumptions);
}

/// Contract 3 eps disjoint (-3)-curves taken from distinct special fibres of
/// the component-I surface with the same chi.
inline StableSurfaceRecord epsilon_family(int chi, int epsilon) {
  if (chi < 4) throw PreconditionError("epsilon_family needs chi >= 4, got " + std::to_string(chi));
  if (epsilon < 1 || 3 * epsilon > 2 * chi + 2)
    throw PreconditionError("epsilon_family needs 1 <= 3 eps <= 2chi + 2, got eps = " + std::to_string(epsilon) +
                            " for chi = " + std::to_string(chi));
  StableSurfaceRecord r = with_bicanonical_flag(contract_minus3(Integer(chi), 2 * Integer(chi) - 6, 3 * epsilon));
  if (3 * r.k_squared > Rational(8 * chi - 16)) throw Error("epsilon_family: 3K^2 <= 8chi - 16 violated");
  return r;
}

}  // namespace horikawa
