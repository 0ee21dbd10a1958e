#pragma once

// Cyclic Z2 / Z3 covers given by reduced building data {L, D_1, .., D_{d-1}}
// with d L = sum j D_j, plus the monomial bookkeeping used to write down the
// explicit branch curves on F_e and P^2.

#include <horikawa/lattice.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace horikawa {

// ---------------------------------------------------------------------------
// ADE germs

struct AdeLabel {
  char family = 'A';
  int index = 1;

  std::string to_string() const { return std::string(1, family) + "_" + std::to_string(index); }
  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

/// Type of the plane curve germ x^2 + x^m + y^p at the origin.
///
/// For m >= 2 the x-part is x^2 times a unit, so the germ is x^2 + y^p, i.e.
/// A_{p-1}.
inline AdeLabel classify_germ(int m, int p) {
  if (m < 2 || p < 2)
    throw PreconditionError("classify_germ: need m >= 2 and p >= 2, got m=" + std::to_string(m) +
                            " p=" + std::to_string(p));
  return AdeLabel{'A', p - 1};
}

// ---------------------------------------------------------------------------
// Building data

struct CoverOptions {
  bool smoothness_assumed = true;
  int transversal_node_count = 0;
  /// Canonical singular points of the branch curve (degree 2 only).
  std::vector<AdeLabel> branch_singularities;
};

struct CoverSpec {
  int degree;
  SurfaceModel base;
  std::vector<DivisorClass> branch;
  DivisorClass L;
  bool smoothness_assumed = true;
  int transversal_node_count = 0;
  std::vector<AdeLabel> branch_singularities;
  std::vector<std::string> warnings;

  /// D_1 + ... + D_{d-1}.
  DivisorClass total_branch() const {
    DivisorClass b = DivisorClass::zero(base);
    for (const auto& d : branch) b += d;
    return b;
  }
};

/// The unique L with degree * L = sum_j j D_j (Pic is torsion-free on every
/// supported surface).
inline DivisorClass derive_L(int degree, const std::vector<DivisorClass>& branch, const SurfaceModel& base) {
  if (degree != 2 && degree != 3) throw PreconditionError("only Z2 and Z3 covers are supported, got degree " + std::to_string(degree));
  if (branch.size() != static_cast<std::size_t>(degree - 1))
    throw PreconditionError("a Z" + std::to_string(degree) + "-cover takes " + std::to_string(degree - 1) +
                            " branch classes, got " + std::to_string(branch.size()));
  DivisorClass weighted = DivisorClass::zero(base);
  for (std::size_t j = 0; j < branch.size(); ++j) {
    if (!(branch[j].surface() == base))
      throw SurfaceMismatch("branch class D_" + std::to_string(j + 1) + " lives on " + branch[j].surface().describe() +
                            ", not " + base.describe());
    weighted += Integer(j + 1) * branch[j];
  }
  try {
    return weighted.divided_by(degree);
  } catch (const DivisibilityError& err) {
    throw DivisibilityError("invalid building data, sum j*D_j is not divisible by " + std::to_string(degree) + ": " +
                            err.what());
  }
}

inline CoverSpec make_cover(int degree, const SurfaceModel& base, std::vector<DivisorClass> branch,
                            CoverOptions options = {}) {
  DivisorClass L = derive_L(degree, branch, base);
  if (options.transversal_node_count < 0) throw PreconditionError("negative node count");
  if (degree == 2 && options.transversal_node_count != 0)
    throw PreconditionError("transversal nodes are only meaningful for Z3 covers");
  CoverSpec spec{degree,
                 base,
                 std::move(branch),
                 std::move(L),
                 options.smoothness_assumed,
                 options.transversal_node_count,
                 std::move(options.branch_singularities),
                 {}};
  if (spec.total_branch().is_zero()) spec.warnings.push_back("empty branch locus: the cover is unramified");
  return spec;
}

// ---------------------------------------------------------------------------
// Invariants

enum class Positivity { nef_certified, ample_certified, asserted, unknown };

inline std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::nef_certified: return "nef-certified";
    case Positivity::ample_certified: return "ample-certified";
    case Positivity::asserted: return "asserted";
    default: return "unknown";
  }
}

/// m K_X is linearly equivalent to the pullback of cls.
struct CanonicalMultiple {
  int m;
  DivisorClass cls;
};

struct InvariantReport {
  Rational k_squared;
  Integer chi;
  std::optional<Integer> p_g;  // nullopt: some h0 term was only a virtual count
  CanonicalMultiple canonical_multiple;
  Positivity minimal_or_ample = Positivity::unknown;
  std::vector<std::string> notes;

  std::string p_g_string() const { return p_g ? p_g->str() : "unavailable(virtual)"; }
};

namespace detail {

// Every supported base is rational: chi(O_Y) = 1, p_g(Y) = 0.
inline constexpr int kRationalChi = 1;

inline Integer half_integer_checked(const Integer& twice, const char* what) {
  if (twice % 2 != 0) throw IntegralityError(std::string(what) + " is not an integer (2*value = " + twice.str() + ")");
  return twice / 2;
}

inline void add_common_notes(const CoverSpec& spec, InvariantReport& r) {
  for (const auto& w : spec.warnings) r.notes.push_back("warning: " + w);
  r.notes.push_back("q assumed 0 per construction");
}

}  // namespace detail

inline InvariantReport z2_invariants(const CoverSpec& spec) {
  if (spec.degree != 2) throw PreconditionError("z2_invariants called on a degree " + std::to_string(spec.degree) + " cover");
  if (!spec.smoothness_assumed) throw PreconditionError("z2_invariants needs a smooth (or canonically singular) branch curve");

  const DivisorClass K = canonical_class(spec.base);
  const DivisorClass adjoint = K + spec.L;
  const Integer k2 = 2 * self_intersection(adjoint);
  const Integer chi = 2 * detail::kRationalChi +
                      detail::half_integer_checked(intersect(spec.L, adjoint), "chi(O_X) of the Z2 cover");
  const SectionCount sections = h0(adjoint);

  InvariantReport r{Rational(k2), chi, std::nullopt, CanonicalMultiple{1, adjoint}, Positivity::unknown, {}};
  if (sections.is_exact()) r.p_g = sections.value;
  for (const auto& sing : spec.branch_singularities)
    r.notes.push_back("branch curve has a " + sing.to_string() + " point; the cover acquires " + sing.to_string() +
                      ", invariants unchanged");
  detail::add_common_notes(spec, r);
  return r;
}

inline InvariantReport z3_invariants(const CoverSpec& spec) {
  if (spec.degree != 3) throw PreconditionError("z3_invariants called on a degree " + std::to_string(spec.degree) + " cover");
  if (!spec.smoothness_assumed) throw PreconditionError("z3_invariants needs smooth branch divisors");
  if (spec.transversal_node_count != 0)
    throw PreconditionError("z3_invariants needs a nodeless branch locus; resolve the " +
                            std::to_string(spec.transversal_node_count) + " declared nodes first");
  const DivisorClass& d1 = spec.branch[0];
  const DivisorClass& d2 = spec.branch[1];
  // A smooth Z3 cover needs D_1 and D_2 disjoint.
  const Integer meet = intersect(d1, d2);
  if (meet != 0) throw PreconditionError("z3_invariants: D_1.D_2 = " + meet.str() + ", branch divisors must be disjoint");

  const DivisorClass K = canonical_class(spec.base);
  const DivisorClass M = d1 + d2 - spec.L;
  const DivisorClass tri = Integer(3) * K + Integer(2) * d1 + Integer(2) * d2;
  const Integer three_k2 = self_intersection(tri);
  if (three_k2 % 3 != 0) throw IntegralityError("K^2 of the Z3 cover is not an integer: 3K^2 = " + three_k2.str());

  const Integer twice_chi_terms = intersect(spec.L, K + spec.L) + intersect(M, K + M);
  const Integer chi = 3 * detail::kRationalChi + detail::half_integer_checked(twice_chi_terms, "chi(O_X) of the Z3 cover");

  const SectionCount s1 = h0(K + spec.L);
  const SectionCount s2 = h0(K + M);

  InvariantReport r{Rational(three_k2 / 3), chi, std::nullopt, CanonicalMultiple{3, tri}, Positivity::unknown, {}};
  if (s1.is_exact() && s2.is_exact()) r.p_g = s1.value + s2.value;
  detail::add_common_notes(spec, r);
  return r;
}

/// The map given by |K_Y + L| composed with a simple Z2 cover is the canonical
/// map of X; this records that linear system.
struct CanonicalImageInfo {
  std::optional<Integer> N;  // h0(K_Y + L) = p_g(X)
  DivisorClass system;
  bool very_ample = false;
  std::string image;  // "P2", "F_e", "Veronese surface in P5", ... or "unknown"
  std::string note;
};

inline CanonicalImageInfo canonical_image_info(const CoverSpec& spec) {
  if (spec.degree != 2) throw PreconditionError("canonical_image_info applies to Z2 covers only");
  const DivisorClass K = canonical_class(spec.base);
  if (h0(K).value != 0) throw PreconditionError("canonical_image_info needs h0(K_Y) = 0 on the base");

  const DivisorClass system = K + spec.L;
  const SectionCount n = h0(system);
  CanonicalImageInfo info{std::nullopt, system, false, "unknown", "canonical map of X factors through the base"};
  if (n.is_exact()) info.N = n.value;
  if (n.value == 0) {
    info.image = "empty";
    info.note = "|K_Y + L| is empty, X has no canonical map";
    return info;
  }
  if (!spec.base.is_blow_up()) {
    info.very_ample = is_ample_on_minimal(system);
    if (info.very_ample) {
      info.image = spec.base.describe();
      if (spec.base.kind() == SurfaceModel::Kind::projective_plane && system[0] == 2) info.note += "; conics embed P2 as the Veronese surface";
    }
  }
  return info;
}

// ---------------------------------------------------------------------------
// Monomial curves

/// t1^c1 t2^c2 x1^d1 x2^d2 in the bigraded ring of F_e, where the torus
/// acts by (l t1, l t2; m x1, m l^-e x2).
struct ScrollMonomial {
  int c1 = 0, c2 = 0, d1 = 0, d2 = 0;
  friend auto operator<=>(const ScrollMonomial&, const ScrollMonomial&) = default;
};

struct ScrollCurve {
  int e = 0;
  std::vector<ScrollMonomial> monomials;
};

/// X0^a0 X1^a1 X2^a2.
using PlaneMonomial = std::array<int, 3>;

struct PlaneCurve {
  std::vector<PlaneMonomial> monomials;
};

/// Class a D0 + b F of a bihomogeneous scroll polynomial, a = d1 + d2 and
/// b = e d1 + c1 + c2.
inline DivisorClass scroll_class(const ScrollCurve& c) {
  if (c.monomials.empty()) throw PreconditionError("scroll_class: empty monomial set");
  std::optional<std::pair<long long, long long>> degree;
  for (const auto& m : c.monomials) {
    if (m.c1 < 0 || m.c2 < 0 || m.d1 < 0 || m.d2 < 0) throw PreconditionError("scroll_class: negative exponent");
    const long long a = m.d1 + m.d2;
    const long long b = static_cast<long long>(c.e) * m.d1 + m.c1 + m.c2;
    if (degree && *degree != std::pair{a, b})
      throw PreconditionError("scroll_class: inhomogeneous monomial set (bidegrees (" + std::to_string(degree->first) +
                              "," + std::to_string(degree->second) + ") and (" + std::to_string(a) + "," +
                              std::to_string(b) + "))");
    degree = std::pair{a, b};
  }
  const SurfaceModel s = SurfaceModel::hirzebruch(c.e);
  return DivisorClass(s, {Integer(degree->first), Integer(degree->second)});
}

enum class CurveAction { scale_t1_by_primitive_root, permute_P2_coordinates };

/// Does (t1 : t2; x1 : x2) -> (z t1 : t2; x1 : x2), z^3 = 1 primitive,
/// carry the curve to itself? Each monomial picks up z^c1, so all t1
/// exponents must agree mod 3.
inline bool invariance_check(const ScrollCurve& c, CurveAction action = CurveAction::scale_t1_by_primitive_root) {
  if (action != CurveAction::scale_t1_by_primitive_root) return false;
  if (c.monomials.empty()) return true;
  const int r = c.monomials.front().c1 % 3;
  return std::all_of(c.monomials.begin(), c.monomials.end(), [r](const ScrollMonomial& m) { return m.c1 % 3 == r; });
}

/// Invariance of a plane curve with unit coefficients under
/// (X0 : X1 : X2) -> (X2 : X0 : X1).
inline bool invariance_check(const PlaneCurve& c, CurveAction action = CurveAction::permute_P2_coordinates) {
  if (action != CurveAction::permute_P2_coordinates) return false;
  const std::set<PlaneMonomial> terms(c.monomials.begin(), c.monomials.end());
  for (const auto& m : terms) {
    // X0^a X1^b X2^c becomes X2^a X0^b X1^c.
    if (!terms.contains(PlaneMonomial{m[1], m[2], m[0]})) return false;
  }
  return true;
}

}  // namespace horikawa
