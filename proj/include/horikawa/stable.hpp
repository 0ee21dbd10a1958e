#pragma once

// 1/3(1,1) points: contraction of (-3)-curves, the Riemann-Roch correction
// for 2K on a normal surface, and the canonical resolution of nodes on a Z3
// branch locus.

#include <horikawa/covers.hpp>

#include <string>
#include <vector>

namespace horikawa {

struct SingularityLedger {
  int third11_count = 0;
  int canonical_count = 0;
  std::vector<AdeLabel> canonical_points;

  friend bool operator==(const SingularityLedger&, const SingularityLedger&) = default;
};

struct StableSurfaceRecord {
  Rational k_squared;
  Integer chi;
  SingularityLedger ledger;
  bool ample_canonical = false;
  bool smoothable = true;
  bool in_component_without_canonical_models = false;
};

/// Contract `count` disjoint (-3)-curves on a smooth surface with invariants
/// (k_squared_smooth, chi). Each contraction adds 1/3 to K^2 and leaves chi
/// alone; the resulting 1/3(1,1) points are Q-Gorenstein rigid.
inline StableSurfaceRecord contract_minus3(const Integer& chi, const Integer& k_squared_smooth, int count) {
  if (count < 1) throw PreconditionError("contract_minus3 needs count >= 1, got " + std::to_string(count));
  StableSurfaceRecord r;
  r.chi = chi;
  r.k_squared = Rational(k_squared_smooth) + Rational(count, 3);
  r.ledger.third11_count = count;
  r.smoothable = false;
  return r;
}

/// Sum of the local corrections R_x(2K) over Sing(X): -1/3 per 1/3(1,1)
/// point, 0 per canonical point.
inline Rational rr_correction(const SingularityLedger& ledger) {
  if (ledger.third11_count < 0 || ledger.canonical_count < 0) throw PreconditionError("negative singularity count");
  return Rational(-ledger.third11_count, 3);
}

struct BicanonicalCount {
  Integer value;
  /// h0(2K) != chi + K^2, which rules out Q-Gorenstein smoothings to
  /// canonical models anywhere in the connected component.
  bool without_canonical_models = false;
};

/// h0(2K_X) = chi(2K_X) = chi + K^2 + sum R_x(2K).
inline BicanonicalCount h0_2K(const StableSurfaceRecord& record) {
  const Rational total = Rational(record.chi) + record.k_squared + rr_correction(record.ledger);
  const Integer value = as_integer(total, "chi(2K) = chi + K^2 + corrections");
  return {value, Rational(value) != Rational(record.chi) + record.k_squared};
}

/// Copy of `record` with the h0(2K) flag filled in.
inline StableSurfaceRecord with_bicanonical_flag(StableSurfaceRecord record) {
  record.in_component_without_canonical_models = h0_2K(record).without_canonical_models;
  return record;
}

struct NodeResolution {
  CoverSpec resolved_spec;
  InvariantReport resolved;
  StableSurfaceRecord unresolved;
};

/// Blow up the t declared nodes of D_1 + D_2, replace D_i by b*D_i - sum E,
/// and take the smooth cover. The cover of the nodal data is the contraction
/// of the t resulting (-3)-curves.
inline NodeResolution resolve_node_bookkeeping(const CoverSpec& spec, bool nodes_general = true) {
  if (spec.degree != 3) throw PreconditionError("node resolution applies to Z3 covers only");
  const int t = spec.transversal_node_count;
  const Integer meet = intersect(spec.branch[0], spec.branch[1]);
  if (meet != t)
    throw PreconditionError("declared " + std::to_string(t) + " transversal nodes but D_1.D_2 = " + meet.str());

  CoverSpec resolved_spec = spec;
  if (t > 0) {
    const SurfaceModel blown = blow_up(spec.base, t, nodes_general);
    const DivisorClass e_sum = exceptional_sum(blown);
    std::vector<DivisorClass> branch;
    for (const auto& d : spec.branch) branch.push_back(pullback(blown, d) - e_sum);
    resolved_spec = make_cover(3, blown, std::move(branch), CoverOptions{spec.smoothness_assumed, 0, {}});
  }
  InvariantReport resolved = z3_invariants(resolved_spec);

  StableSurfaceRecord unresolved;
  if (t > 0) {
    unresolved = contract_minus3(resolved.chi, as_integer(resolved.k_squared, "K^2 of the resolved cover"), t);
  } else {
    unresolved.k_squared = resolved.k_squared;
    unresolved.chi = resolved.chi;
  }
  unresolved = with_bicanonical_flag(std::move(unresolved));
  return {std::move(resolved_spec), std::move(resolved), std::move(unresolved)};
}

}  // namespace horikawa
