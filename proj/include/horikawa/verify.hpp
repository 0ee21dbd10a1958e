#pragma once

// End-to-end reproduction suite: runs every construction over a parameter
// range and compares each invariant with its closed form. A single branch
// coefficient can be perturbed to check that the suite notices.

#include <horikawa/catalog.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace horikawa {

enum class Pipeline { component_I, component_II, stable };
enum class BranchSlot { D1, D2, D };
enum class FaultKind { increment, decrement, negate };

inline std::string to_string(Pipeline p) {
  switch (p) {
    case Pipeline::component_I: return "component-I";
    case Pipeline::component_II: return "component-II";
    default: return "stable";
  }
}

/// Perturbation of one coefficient of one branch class in one run.
struct Fault {
  Pipeline pipeline = Pipeline::component_I;
  int parameter = 0;  // chi, or k for component II
  BranchSlot slot = BranchSlot::D1;
  std::size_t coefficient = 0;
  FaultKind kind = FaultKind::increment;

  std::string to_string() const {
    const char* slot_name = slot == BranchSlot::D1 ? "D1" : (slot == BranchSlot::D2 ? "D2" : "D");
    const char* kind_name = kind == FaultKind::increment ? "+1" : (kind == FaultKind::decrement ? "-1" : "neg");
    return horikawa::to_string(pipeline) + ":" + std::to_string(parameter) + ":" + slot_name + ":" +
           std::to_string(coefficient) + ":" + kind_name;
  }

  /// Parses "pipeline:parameter:slot:coefficient:kind", the format of to_string().
  static Fault parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() != 5) throw PreconditionError("fault '" + text + "' is not pipeline:parameter:slot:coefficient:kind");
    Fault f;
    if (parts[0] == "component-I")
      f.pipeline = Pipeline::component_I;
    else if (parts[0] == "component-II")
      f.pipeline = Pipeline::component_II;
    else if (parts[0] == "stable")
      f.pipeline = Pipeline::stable;
    else
      throw PreconditionError("unknown pipeline '" + parts[0] + "'");
    try {
      f.parameter = std::stoi(parts[1]);
      f.coefficient = static_cast<std::size_t>(std::stoul(parts[3]));
    } catch (const std::exception&) {
      throw PreconditionError("fault '" + text + "' has a non-numeric field");
    }
    if (parts[2] == "D1")
      f.slot = BranchSlot::D1;
    else if (parts[2] == "D2")
      f.slot = BranchSlot::D2;
    else if (parts[2] == "D")
      f.slot = BranchSlot::D;
    else
      throw PreconditionError("unknown branch slot '" + parts[2] + "'");
    if (parts[4] == "+1")
      f.kind = FaultKind::increment;
    else if (parts[4] == "-1")
      f.kind = FaultKind::decrement;
    else if (parts[4] == "neg")
      f.kind = FaultKind::negate;
    else
      throw PreconditionError("unknown fault kind '" + parts[4] + "'");
    return f;
  }

  DivisorClass apply(const DivisorClass& d) const {
    if (coefficient >= d.size())
      throw PreconditionError("fault coefficient " + std::to_string(coefficient) + " out of range (rank " +
                              std::to_string(d.size()) + ")");
    Integer c = d[coefficient];
    switch (kind) {
      case FaultKind::increment: c += 1; break;
      case FaultKind::decrement: c -= 1; break;
      default: c = -c; break;
    }
    return d.with_coefficient(coefficient, c);
  }
};

struct VerificationOptions {
  int chi_max = 30;
  int k_max = 6;
  std::optional<Fault> fault;
};

inline constexpr int kMinChiMax = 6;
inline constexpr int kMinKMax = 2;
inline constexpr int kMaxRange = 2000;

struct VerificationResult {
  std::vector<CheckLine> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckLine* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

namespace detail {

/// Accumulates one CheckLine per identity over a whole parameter range and
/// keeps the first counterexample.
class CheckBook {
 public:
  void open(const std::string& id, const std::string& identity, const std::string& scope) {
    if (index_.contains(id)) return;
    index_[id] = lines_.size();
    lines_.push_back({id, identity, scope, true, {}});
  }

  void expect(const std::string& id, bool ok, const std::string& where, const std::string& detail) {
    CheckLine& line = lines_.at(index_.at(id));
    if (ok || !line.passed) return;
    line.passed = false;
    line.detail = where + ": " + detail;
  }

  template <class A, class B>
  void expect_eq(const std::string& id, const A& actual, const B& expected, const std::string& where) {
    expect(id, actual == expected, where, "expected " + show(expected) + ", got " + show(actual));
  }

  std::vector<CheckLine> take() { return std::move(lines_); }

 private:
  static std::string show(const Integer& v) { return v.str(); }
  static std::string show(const Rational& v) { return horikawa::to_string(v); }
  static std::string show(const DivisorClass& v) { return v.to_string(); }
  static std::string show(bool v) { return v ? "true" : "false"; }
  static std::string show(long long v) { return std::to_string(v); }
  static std::string show(int v) { return std::to_string(v); }
  static std::string show(std::size_t v) { return std::to_string(v); }
  static std::string show(const std::string& v) { return v; }
  static std::string show(const char* v) { return v; }

  std::map<std::string, std::size_t> index_;
  std::vector<CheckLine> lines_;
};

inline std::string range(const char* var, int lo, int hi) {
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

inline DivisorClass maybe_fault(const std::optional<Fault>& fault, Pipeline pipeline, int parameter, BranchSlot slot,
                                const DivisorClass& d) {
  if (fault && fault->pipeline == pipeline && fault->parameter == parameter && fault->slot == slot) return fault->apply(d);
  return d;
}

/// h0(aD0 + bF) on F_e by counting bihomogeneous monomials t1^c1 t2^c2 x1^d1 x2^d2
/// with d1 + d2 = a and e d1 + c1 + c2 = b.
inline Integer h0_by_monomials(int e, int a, int b) {
  long long count = 0;
  for (int d1 = 0; d1 <= a; ++d1) {
    const int rest = b - e * d1;
    if (rest >= 0) count += rest + 1;  // (c1, c2) with c1 + c2 = rest
  }
  return count;
}

inline void check_lattice(CheckBook& book) {
  book.open("lattice.canonical-squares", "K^2 = 9 on P2, 8 on F_e, one less per blown-up point", "e=0..8, n=1..20");
  book.expect_eq("lattice.canonical-squares", self_intersection(canonical_class(SurfaceModel::projective_plane())),
                 Integer(9), "P2");
  for (int e = 0; e <= 8; ++e) {
    const SurfaceModel fe = SurfaceModel::hirzebruch(e);
    book.expect_eq("lattice.canonical-squares", self_intersection(canonical_class(fe)), Integer(8), "e=" + std::to_string(e));
    for (int n = 1; n <= 20; ++n)
      book.expect_eq("lattice.canonical-squares", self_intersection(canonical_class(blow_up(fe, n))), Integer(8 - n),
                     "e=" + std::to_string(e) + " n=" + std::to_string(n));
  }
  book.open("lattice.h0-monomials", "h0(aD0 + bF) on F_e equals the number of bihomogeneous monomials",
            "e=0..6, a=0..6, b=0..30");
  for (int e = 0; e <= 6; ++e) {
    const SurfaceModel fe = SurfaceModel::hirzebruch(e);
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 30; ++b)
        book.expect_eq("lattice.h0-monomials", h0(DivisorClass(fe, {Integer(a), Integer(b)})).value,
                       h0_by_monomials(e, a, b), "e=" + std::to_string(e) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
}

inline void check_component_I(CheckBook& book, const VerificationOptions& opt) {
  const std::string scope = range("chi", 4, opt.chi_max);
  book.open("I.building-data", "3L = D_1 + 2D_2 is solvable (alpha + 2 beta = 0 mod 3) and the pipeline runs", scope);
  book.open("I.k-squared", "K_S^2 = 2 alpha + 2 beta - 4e - 8 = 2chi - 6", scope);
  book.open("I.chi", "chi(O_S) = alpha + beta - 2e - 1 = chi", scope);
  book.open("I.tricanonical", "3K_Y + 2D_1 + 2D_2 = (alpha + 2 beta - 3e - 6) q*F + D_1", scope);
  book.open("I.k-squared-from-class", "3K_S^2 = (3K_Y + 2D_1 + 2D_2)^2", scope);
  book.open("I.p_g", "p_g(S) = h0(K_Y + L) + h0(K_Y + D_1 + D_2 - L) = chi - 1", scope);
  book.open("I.nef", "3K_S is the pullback of a nef divisor", scope);
  book.open("I.special-fibres", "2chi + 2 fibres of two (-3)-curves meeting in 3 points", scope);
  book.open("I.component", "component I when K^2 = 8k (odd fibre component)", scope);

  for (int chi = 4; chi <= opt.chi_max; ++chi) {
    const std::string where = "chi=" + std::to_string(chi);
    const CoverParameters p = pick_parameters(chi);
    std::optional<ConstructionRecipe> r;
    try {
      ComponentIData data = component_I_data(chi);
      data.d1 = maybe_fault(opt.fault, Pipeline::component_I, chi, BranchSlot::D1, data.d1);
      data.d2 = maybe_fault(opt.fault, Pipeline::component_I, chi, BranchSlot::D2, data.d2);
      r = realize_component_I(data);
    } catch (const Error& err) {
      book.expect("I.building-data", false, where, err.what());
      continue;
    }
    const Integer k2 = 2 * chi - 6;
    const Integer expected_k2 = 2 * p.alpha + 2 * p.beta - 4 * p.e - 8;
    const Integer expected_chi = p.alpha + p.beta - 2 * p.e - 1;
    book.expect_eq("I.k-squared", r->report.k_squared, Rational(k2), where);
    book.expect_eq("I.k-squared", expected_k2, k2, where + " (parameter form)");
    book.expect_eq("I.chi", r->report.chi, Integer(chi), where);
    book.expect_eq("I.chi", expected_chi, Integer(chi), where + " (parameter form)");
    book.expect_eq("I.tricanonical", r->report.canonical_multiple.cls, *r->canonical_alt, where);
    book.expect_eq("I.k-squared-from-class", Rational(self_intersection(r->report.canonical_multiple.cls)),
                   3 * r->report.k_squared, where);
    book.expect("I.p_g", r->report.p_g.has_value(), where, "p_g unavailable");
    if (r->report.p_g) book.expect_eq("I.p_g", *r->report.p_g, Integer(chi - 1), where);
    book.expect_eq("I.nef", r->report.minimal_or_ample == Positivity::nef_certified, true, where);
    book.expect_eq("I.special-fibres", r->special_fiber_count, 2 * chi + 2, where);
    book.expect_eq("I.special-fibres", r->special_fiber == std::vector<Integer>{-3, -3}, true, where);
    book.expect_eq("I.special-fibres", r->special_fiber_meeting, Integer(3), where);
    const bool on_8z = (2 * chi - 6) % 8 == 0;
    book.expect_eq("I.component", to_string(r->component_claim),
                   std::string(on_8z ? "I" : "unlabeled"), where);
  }
}

inline void check_component_II(CheckBook& book, const VerificationOptions& opt) {
  const std::string scope = range("k", 1, opt.k_max);
  book.open("II.building-data", "2L = B is solvable and the pipeline runs", scope);
  book.open("II.k-squared", "K_X^2 = 2(K_Y + L)^2 = 8k", scope);
  book.open("II.chi", "chi(O_X) = 2 + L(K_Y + L)/2 = 4k + 3", scope);
  book.open("II.p_g", "p_g(X) = h0(K_Y + L) = 4k + 2", scope);
  book.open("II.bicanonical", "2K_X = pi^*(2D0 + (6k + 2)F), or pi^*(4H) for k = 1", scope);
  book.open("II.curve-class", "C in |5D0 + (10k + 10)F|", scope);
  book.open("II.invariance", "the order 3 automorphism preserves the branch curve", scope);
  book.open("II.residue-mismatch", "the curve of a different residue class is not invariant", scope);
  book.open("II.germ", "the singular point for k = 1 mod 3 is A_4", scope);
  book.open("II.ample", "K_X is the pullback of an ample class", scope);
  book.open("II.canonical-image", "canonical image is P2 (k = 1) or F_{2k+2}, component II", scope);

  for (int k = 1; k <= opt.k_max; ++k) {
    const std::string where = "k=" + std::to_string(k);
    std::optional<ConstructionRecipe> r;
    ComponentIIData data = component_II_data(k);
    try {
      data.branch = maybe_fault(opt.fault, Pipeline::component_II, k, BranchSlot::D, data.branch);
      r = realize_component_II(data);
    } catch (const Error& err) {
      book.expect("II.building-data", false, where, err.what());
      continue;
    }
    book.expect_eq("II.k-squared", r->report.k_squared, Rational(8 * k), where);
    book.expect_eq("II.chi", r->report.chi, Integer(4 * k + 3), where);
    book.expect("II.p_g", r->report.p_g.has_value(), where, "p_g unavailable");
    if (r->report.p_g) book.expect_eq("II.p_g", *r->report.p_g, Integer(4 * k + 2), where);
    book.expect_eq("II.ample", r->report.minimal_or_ample == Positivity::ample_certified, true, where);
    book.expect_eq("II.invariance", r->z3_action_verified, true, where);
    if (k == 1) {
      const SurfaceModel p2 = SurfaceModel::projective_plane();
      book.expect_eq("II.bicanonical", *r->canonical_alt, DivisorClass(p2, {Integer(4)}), where);
      book.expect_eq("II.curve-class", plane_class(*data.plane_curve), DivisorClass(p2, {Integer(10)}), where);
      book.expect_eq("II.canonical-image", r->canonical_image->image, std::string("P2"), where);
    } else {
      const SurfaceModel fe = SurfaceModel::hirzebruch(2 * k + 2);
      book.expect_eq("II.bicanonical", *r->canonical_alt, DivisorClass(fe, {Integer(2), Integer(6 * k + 2)}), where);
      book.expect_eq("II.curve-class", scroll_class(*data.scroll_curve), DivisorClass(fe, {Integer(5), Integer(10 * k + 10)}),
                     where);
      book.expect_eq("II.canonical-image", r->canonical_image->image, "F_" + std::to_string(2 * k + 2), where);
      // Same bidegree, t1 exponent pattern of the other two residue classes.
      const ScrollCurve good = component_II_curve(k);
      const int top = 10 * k + 10;
      for (int shift = 0; shift <= 2; ++shift) {
        if (shift == good.monomials[1].c2) continue;
        ScrollCurve c = good;
        c.monomials[1].c1 = top - shift;
        c.monomials[1].c2 = shift;
        book.expect_eq("II.residue-mismatch", invariance_check(c), false, where + " shift=" + std::to_string(shift));
      }
      const bool singular = k % 3 == 1;
      book.expect_eq("II.germ", r->ledger.canonical_count, singular ? 1 : 0, where);
      if (singular && !r->ledger.canonical_points.empty())
        book.expect_eq("II.germ", r->ledger.canonical_points.front().to_string(), std::string("A_4"), where);
    }
    book.expect_eq("II.canonical-image", to_string(r->component_claim), std::string("II"), where);
  }
}

inline void check_stable(CheckBook& book, const VerificationOptions& opt) {
  const std::string scope = range("chi", 3, opt.chi_max);
  book.open("S.building-data", "3L = D_1 + 2D_2 with three declared nodes, and the pipeline runs", scope);
  book.open("S.k-squared", "K_X^2 = K_S^2 + 1 = 2chi - 5", scope);
  book.open("S.k-squared-from-class", "3K_X^2 = D^2 for D = 3K_Y + 2D_1 + 2D_2", scope);
  book.open("S.chi", "chi(O_X) = alpha + beta - 2e - 1 = chi", scope);
  book.open("S.singularities", "exactly three 1/3(1,1) points", scope);
  book.open("S.ample", "D = q*(2D0 + (2 alpha + 2 beta - 3e - 6)F) - sum E_i is ample", scope);
  book.open("S.exceptional-branch", "the exceptional candidate occurs only for alpha = beta = 3, e = 1", scope);
  book.open("S.h0-2K", "h0(2K_X) = chi + K^2 - 1 != chi + K^2", scope);
  book.open("S.not-smoothable", "1/3(1,1) points admit no Q-Gorenstein smoothing", scope);
  book.open("S.resolution", "K^2 of the unresolved cover exceeds the resolution by t/3 = 1", scope);

  for (int chi = 3; chi <= opt.chi_max; ++chi) {
    const std::string where = "chi=" + std::to_string(chi);
    std::optional<StableConstruction> s;
    try {
      StableData data = stable_data(chi);
      data.d1 = maybe_fault(opt.fault, Pipeline::stable, chi, BranchSlot::D1, data.d1);
      data.d2 = maybe_fault(opt.fault, Pipeline::stable, chi, BranchSlot::D2, data.d2);
      s = realize_stable(data);
    } catch (const Error& err) {
      book.expect("S.building-data", false, where, err.what());
      continue;
    }
    const Rational k2(2 * chi - 5);
    book.expect_eq("S.k-squared", s->record.k_squared, k2, where);
    book.expect_eq("S.k-squared-from-class", s->k_squared_direct, k2, where);
    book.expect_eq("S.k-squared-from-class", Rational(s->recipe.ampleness->self_intersection), 3 * k2, where);
    book.expect_eq("S.chi", s->record.chi, Integer(chi), where);
    book.expect_eq("S.singularities", s->record.ledger.third11_count, 3, where);
    book.expect_eq("S.ample", s->record.ample_canonical, true, where);
    book.expect_eq("S.exceptional-branch",
                   s->recipe.ampleness->verdict == AmplenessVerdict::exceptional_case_excluded, chi == 3, where);
    const BicanonicalCount bic = h0_2K(s->record);
    book.expect_eq("S.h0-2K", bic.value, Integer(chi) + Integer(2 * chi - 5) - 1, where);
    book.expect_eq("S.h0-2K", s->record.in_component_without_canonical_models, true, where);
    book.expect_eq("S.not-smoothable", s->record.smoothable, false, where);
    book.expect_eq("S.resolution", s->record.k_squared - s->resolution.resolved.k_squared, Rational(1), where);
    book.expect_eq("S.resolution", s->resolution.resolved.k_squared, Rational(2 * chi - 6), where);
  }
}

inline void check_epsilon(CheckBook& book, const VerificationOptions& opt) {
  const std::string scope = range("chi", 4, opt.chi_max) + ", 3eps <= 2chi + 2";
  book.open("eps.k-squared", "K_X^2 = 2chi - 6 + eps with 3 eps points 1/3(1,1)", scope);
  book.open("eps.bound", "3K_X^2 <= 8chi - 16, with equality iff 3 eps = 2chi + 2", scope);
  for (int chi = 4; chi <= opt.chi_max; ++chi) {
    for (int eps = 1; 3 * eps <= 2 * chi + 2; ++eps) {
      const std::string where = "chi=" + std::to_string(chi) + " eps=" + std::to_string(eps);
      StableSurfaceRecord r = epsilon_family(chi, eps);
      book.expect_eq("eps.k-squared", r.k_squared, Rational(2 * chi - 6 + eps), where);
      book.expect_eq("eps.k-squared", r.ledger.third11_count, 3 * eps, where);
      const Rational lhs = 3 * r.k_squared;
      const Rational rhs(8 * chi - 16);
      book.expect_eq("eps.bound", lhs <= rhs, true, where);
      book.expect_eq("eps.bound", lhs == rhs, 3 * eps == 2 * chi + 2, where);
    }
  }
}

inline void check_classification(CheckBook& book, const VerificationOptions& opt) {
  const std::string scope = range("chi", 4, opt.chi_max);
  book.open("classify.admissible", "2chi - 6 <= K^2 <= 9chi, K^2 >= 1, chi >= 1 on both lines", scope);
  book.open("classify.components", "two components exactly when K^2 = 2chi - 6 is divisible by 8", scope);
  book.open("classify.images", "component II image F_{K^2/4+2} for K^2 > 8, P2 or the quartic cone for K^2 = 8", scope);
  for (int chi = 4; chi <= opt.chi_max; ++chi) {
    const std::string where = "chi=" + std::to_string(chi);
    book.expect_eq("classify.admissible", admissible(2 * chi - 6, chi), true, where);
    book.expect_eq("classify.admissible", admissible(2 * chi - 5, chi), true, where);
    const ComponentInfo info = classify(2 * chi - 6, chi);
    book.expect_eq("classify.components", info.count, chi % 4 == 3 ? 2 : 1, where);
    if (info.count == 2) {
      const int k2 = 2 * chi - 6;
      const auto& images = info.images_of(ComponentLabel::II);
      if (k2 > 8)
        book.expect_eq("classify.images", images.size() == 1 && images[0].to_string() == "F_" + std::to_string(k2 / 4 + 2),
                       true, where);
      else
        book.expect_eq("classify.images", images.size(), std::size_t{2}, where);
    }
  }
}

}  // namespace detail

inline void validate(const VerificationOptions& opt) {
  if (opt.chi_max < kMinChiMax || opt.chi_max > kMaxRange)
    throw PreconditionError("--chi-max must lie in " + std::to_string(kMinChiMax) + ".." + std::to_string(kMaxRange));
  if (opt.k_max < kMinKMax || opt.k_max > kMaxRange)
    throw PreconditionError("--k-max must lie in " + std::to_string(kMinKMax) + ".." + std::to_string(kMaxRange));
  if (opt.fault) {
    const Fault& f = *opt.fault;
    const bool z2 = f.pipeline == Pipeline::component_II;
    if (z2 != (f.slot == BranchSlot::D)) throw PreconditionError("fault slot does not match pipeline " + to_string(f.pipeline));
    const int lo = f.pipeline == Pipeline::component_I ? 4 : (z2 ? 1 : 3);
    const int hi = z2 ? opt.k_max : opt.chi_max;
    if (f.parameter < lo || f.parameter > hi) throw PreconditionError("fault parameter outside the verified range");
    const std::size_t rank = f.pipeline == Pipeline::component_I  ? component_I_data(f.parameter).base.picard_rank()
                             : f.pipeline == Pipeline::stable     ? stable_data(f.parameter).base.picard_rank()
                                                                  : component_II_data(f.parameter).base.picard_rank();
    if (f.coefficient >= rank)
      throw PreconditionError("fault coefficient " + std::to_string(f.coefficient) + " out of range (Picard rank " +
                              std::to_string(rank) + ")");
  }
}

/// Runs the whole suite. Deterministic: same options, same result.
inline VerificationResult verify_paper(const VerificationOptions& opt) {
  validate(opt);
  detail::CheckBook book;
  detail::check_lattice(book);
  detail::check_classification(book, opt);
  detail::check_component_I(book, opt);
  detail::check_component_II(book, opt);
  detail::check_stable(book, opt);
  detail::check_epsilon(book, opt);
  return {book.take()};
}

}  // namespace horikawa
