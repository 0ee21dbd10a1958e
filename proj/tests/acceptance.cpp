// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "oracles.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace horikawa;

namespace {

/// Collects the first mismatch of a criterion.
struct Verdict {
  bool ok = true;
  std::string first;
  long long checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

std::string at(const char* var, long long v) { return std::string(var) + "=" + std::to_string(v); }

Verdict component_I_suite() {
  Verdict v;
  for (int chi = 4; chi <= 100; ++chi) {
    const std::string w = at("chi", chi);
    const CoverParameters p = pick_parameters(chi);
    v.expect((p.alpha + 2 * p.beta) % 3 == 0, w + " alpha + 2 beta not divisible by 3");
    std::optional<ConstructionRecipe> built;
    try {
      built = build_component_I(chi);
    } catch (const Error& e) {
      v.expect(false, w + " " + e.what());
      continue;
    }
    const ConstructionRecipe& r = *built;
    v.expect(r.report.k_squared == Rational(2 * chi - 6), w + " K^2");
    v.expect(r.report.k_squared == Rational(2 * p.alpha + 2 * p.beta - 4 * p.e - 8), w + " K^2 parameter form");
    v.expect(r.report.chi == chi, w + " chi");
    // 3K_Y + 2D_1 + 2D_2 against (alpha + 2 beta - 3e - 6)F + D_1, coefficient by coefficient.
    const SurfaceModel& s = r.base;
    const DivisorClass d1 = r.cover.branch[0];
    const DivisorClass expected = Integer(p.alpha + 2 * p.beta - 3 * p.e - 6) * fiber(s) + d1;
    const DivisorClass tri = r.report.canonical_multiple.cls;
    for (std::size_t i = 0; i < s.picard_rank(); ++i)
      v.expect(tri[i] == expected[i], w + " tri-canonical coefficient " + std::to_string(i));
    v.expect(Integer(3) * r.cover.L == r.cover.branch[0] + Integer(2) * r.cover.branch[1], w + " 3L = D_1 + 2D_2");
  }
  return v;
}

Verdict component_II_suite() {
  Verdict v;
  const ConstructionRecipe one = build_component_II(1);
  v.expect(one.report.k_squared == 8 && one.report.chi == 7, "k=1 (K^2, chi)");
  v.expect(one.report.p_g && *one.report.p_g == 6, "k=1 p_g");
  v.expect(one.canonical_image && one.canonical_image->image == "P2", "k=1 canonical image");
  for (int k = 2; k <= 33; ++k) {
    const std::string w = at("k", k);
    const ConstructionRecipe r = build_component_II(k);
    const SurfaceModel fe = SurfaceModel::hirzebruch(2 * k + 2);
    v.expect(r.report.k_squared == Rational(8 * k), w + " K^2");
    v.expect(r.report.chi == 4 * k + 3, w + " chi");
    v.expect(r.canonical_alt && *r.canonical_alt == DivisorClass(fe, {2, 6 * k + 2}), w + " bicanonical class");
    v.expect(Integer(2) * r.report.canonical_multiple.cls == DivisorClass(fe, {2, 6 * k + 2}), w + " 2(K_Y + L)");
    v.expect(r.scroll_curve && scroll_class(*r.scroll_curve) == DivisorClass(fe, {5, 10 * k + 10}), w + " scroll class");
    v.expect(r.scroll_curve && invariance_check(*r.scroll_curve), w + " invariance");
    if (k % 3 == 1)
      v.expect(r.ledger.canonical_points.size() == 1 && r.ledger.canonical_points[0].to_string() == "A_4", w + " germ A_4");
    else
      v.expect(r.ledger.canonical_points.empty(), w + " no germ");
  }
  return v;
}

Verdict stable_suite() {
  Verdict v;
  for (int chi = 3; chi <= 100; ++chi) {
    const std::string w = at("chi", chi);
    std::optional<StableConstruction> built;
    try {
      built = build_stable(chi);
    } catch (const Error& e) {
      v.expect(false, w + " " + e.what());
      continue;
    }
    const StableConstruction& s = *built;
    const Rational k2(2 * chi - 5);
    v.expect(s.record.k_squared == k2, w + " K^2");
    v.expect(s.record.ledger.third11_count == 3, w + " three 1/3(1,1) points");
    v.expect(s.recipe.ampleness.has_value(), w + " certificate issued");
    if (!s.recipe.ampleness) continue;
    const AmplenessCertificate& c = *s.recipe.ampleness;
    v.expect(Rational(c.self_intersection) == 3 * k2, w + " D^2 = 3K^2");
    v.expect(Rational(oracle::dot(c.divisor, c.divisor)) == 3 * k2, w + " D^2 (oracle)");
    v.expect((c.verdict == AmplenessVerdict::exceptional_case_excluded) == (chi == 3), w + " exceptional branch");
    v.expect(s.record.ample_canonical, w + " certified divisor is the tri-canonical class");
    const BicanonicalCount b = h0_2K(s.record);
    v.expect(b.value == Integer(chi) + Integer(2 * chi - 5) - 1, w + " h0(2K)");
    v.expect(Rational(b.value) != Rational(chi) + k2, w + " h0(2K) != chi + K^2");
    v.expect(!s.record.smoothable, w + " not smoothable");
  }
  return v;
}

Verdict epsilon_suite() {
  Verdict v;
  for (int chi = 4; chi <= 60; ++chi)
    for (int eps = 1; 3 * eps <= 2 * chi + 2; ++eps) {
      const std::string w = at("chi", chi) + " " + at("eps", eps);
      const StableSurfaceRecord r = epsilon_family(chi, eps);
      v.expect(r.k_squared == Rational(2 * chi - 6 + eps), w + " K^2");
      v.expect(3 * r.k_squared <= Rational(8 * chi - 16), w + " bound");
      v.expect((3 * r.k_squared == Rational(8 * chi - 16)) == (3 * eps == 2 * chi + 2), w + " equality case");
    }
  return v;
}

Verdict lattice_suite() {
  Verdict v;
  oracle::Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const SurfaceModel s = oracle::random_surface(rng);
    const DivisorClass a = oracle::random_class(rng, s);
    const DivisorClass b = oracle::random_class(rng, s);
    const DivisorClass c = oracle::random_class(rng, s);
    const Integer k = rng.uniform(-100, 100);
    const std::string w = at("pair", i);
    v.expect(intersect(a, b) == intersect(b, a), w + " symmetry");
    v.expect(intersect(a + c, b) == intersect(a, b) + intersect(c, b), w + " additivity");
    v.expect(intersect(k * a, b) == k * intersect(a, b), w + " homogeneity");
    v.expect(intersect(a, b) == oracle::dot(a, b), w + " Gram oracle");
    const SurfaceModel blown = blow_up(s, rng.uniform(1, 8));
    v.expect(intersect(pullback(blown, a), pullback(blown, b)) == intersect(a, b), w + " blow-up isometry");
  }
  for (const SurfaceModel& base : {SurfaceModel::projective_plane(), SurfaceModel::hirzebruch(0), SurfaceModel::hirzebruch(5)})
    for (int n = 1; n <= 200; ++n)
      v.expect(self_intersection(canonical_class(blow_up(base, n))) == self_intersection(canonical_class(base)) - n,
               base.describe() + " " + at("n", n) + " K^2 drop");
  for (int e = 0; e <= 6; ++e)
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 30; ++b)
        v.expect(h0(DivisorClass(SurfaceModel::hirzebruch(e), {a, b})).value == oracle::monomial_count(e, a, b),
                 at("e", e) + " " + at("a", a) + " " + at("b", b) + " h0");
  return v;
}

Verdict classification_suite() {
  Verdict v;
  for (int chi = 4; chi <= 400; ++chi) {
    const int k2 = 2 * chi - 6;
    const ComponentInfo info = classify(k2, chi);
    v.expect((info.count == 2) == (k2 % 8 == 0), at("chi", chi) + " component count");
    if (info.count != 2) continue;
    const auto& images = info.images_of(ComponentLabel::II);
    if (k2 > 8)
      v.expect(images == std::vector<ImageDescriptor>{{ImageDescriptor::Kind::hirzebruch, k2 / 4 + 2}},
               at("chi", chi) + " image F_{K^2/4+2}");
    else
      v.expect(images.size() == 2 && images[0].kind == ImageDescriptor::Kind::projective_plane &&
                   images[1].kind == ImageDescriptor::Kind::quartic_cone,
               "K^2 = 8 images {P2, cone}");
  }
  for (int k = 1; k <= 24; ++k) {
    const int chi = 4 * k + 3;
    const ConstructionRecipe r = build_component_I(chi);
    v.expect(r.special_fiber == std::vector<Integer>{-3, -3}, at("chi", chi) + " special fibre");
    v.expect(parity_discriminator(r.special_fiber) == ParityVerdict::component_I, at("chi", chi) + " parity verdict");
    v.expect(r.component_claim == ComponentClaim::I, at("chi", chi) + " claim");
  }
  return v;
}

/// 20 seeded single-coefficient faults; each must make verify-paper exit 1
/// and name the violated identity.
Verdict fault_injection_suite() {
  Verdict v;
  oracle::Rng rng(20261016);
  const VerificationOptions base{30, 6, std::nullopt};
  const Report clean = cmd_verify_paper(base);
  v.expect(clean.exit_code == 0, "unfaulted run passes: " + clean.error);
  const Pipeline pipes[] = {Pipeline::component_I, Pipeline::component_II, Pipeline::stable};
  const FaultKind kinds[] = {FaultKind::increment, FaultKind::decrement, FaultKind::negate};
  for (int i = 0; i < 20; ++i) {
    Fault f;
    f.pipeline = pipes[i % 3];
    f.kind = kinds[rng.uniform(0, 2)];
    std::size_t rank = 0;
    if (f.pipeline == Pipeline::component_I) {
      f.parameter = rng.uniform(4, base.chi_max);
      f.slot = rng.coin() ? BranchSlot::D1 : BranchSlot::D2;
      rank = component_I_data(f.parameter).base.picard_rank();
    } else if (f.pipeline == Pipeline::stable) {
      f.parameter = rng.uniform(3, base.chi_max);
      f.slot = rng.coin() ? BranchSlot::D1 : BranchSlot::D2;
      rank = stable_data(f.parameter).base.picard_rank();
    } else {
      f.parameter = rng.uniform(1, base.k_max);
      f.slot = BranchSlot::D;
      rank = component_II_data(f.parameter).base.picard_rank();
    }
    f.coefficient = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rank) - 1));
    VerificationOptions opt = base;
    opt.fault = f;
    const Report r = cmd_verify_paper(opt);
    const bool named = r.error.rfind("identity violated: ", 0) == 0;
    v.expect(r.exit_code == kExitFailure && named, "fault " + f.to_string() + " not detected (exit " +
                                                       std::to_string(r.exit_code) + ")");
    if (r.exit_code == kExitFailure) std::cout << "    fault " << f.to_string() << " -> " << r.error.substr(0, 90) << "\n";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 component-I identities, chi = 4..100", component_I_suite},
      {"2 component-II suite, k = 1..33", component_II_suite},
      {"3 stable surfaces, chi = 3..100", stable_suite},
      {"4 epsilon-family bound, chi = 4..60", epsilon_suite},
      {"5 lattice properties and h0 oracle", lattice_suite},
      {"6 classification table and parity", classification_suite},
      {"7 fault injection, 20 seeded faults", fault_injection_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.first = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << v.checks << " checks)";
    if (!v.ok) std::cout << "  first failure: " << v.first;
    std::cout << "\n";
    failed += v.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
