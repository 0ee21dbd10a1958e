#pragma once

// Picard-lattice arithmetic on P^2, the Hirzebruch surfaces F_e and iterated
// blow-ups of them at anonymous points.
//
// Basis conventions:
//   P^2          [H]
//   F_e          [D0, F]           D0^2 = -e, D0.F = 1, F^2 = 0
//   Bl_n(S)      basis(S) + [E_1 .. E_n], E_i^2 = -1, E_i orthogonal to
//                everything else (pullbacks and earlier exceptionals).

#include <horikawa/numbers.hpp>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace horikawa {

class SurfaceModel {
 public:
  enum class Kind { projective_plane, hirzebruch, blow_up };

  static SurfaceModel projective_plane();
  static SurfaceModel hirzebruch(int e);

  friend SurfaceModel blow_up(const SurfaceModel& base, int point_count, bool general_position);

  Kind kind() const;
  bool is_blow_up() const { return kind() == Kind::blow_up; }

  /// e of F_e; throws unless this is a Hirzebruch surface.
  int e() const;

  const SurfaceModel& base() const;
  int point_count() const;
  bool general_position() const;

  std::size_t picard_rank() const;

  /// Rank of the minimal model (1 for P^2, 2 for F_e).
  std::size_t minimal_rank() const { return minimal_model().picard_rank(); }

  /// Total number of exceptional classes across all nested blow-ups.
  std::size_t exceptional_count() const { return picard_rank() - minimal_rank(); }

  const SurfaceModel& minimal_model() const {
    const SurfaceModel* s = this;
    while (s->is_blow_up()) s = &s->base();
    return *s;
  }

  /// True when every nested blow-up carries the general-position flag.
  bool all_points_general() const {
    for (const SurfaceModel* s = this; s->is_blow_up(); s = &s->base())
      if (!s->general_position()) return false;
    return true;
  }

  std::vector<std::string> basis_labels() const {
    std::vector<std::string> labels;
    if (minimal_model().kind() == Kind::projective_plane) {
      labels.push_back("H");
    } else {
      labels.push_back("D0");
      labels.push_back("F");
    }
    for (std::size_t i = 1; i <= exceptional_count(); ++i) labels.push_back("E" + std::to_string(i));
    return labels;
  }

  std::string describe() const {
    switch (kind()) {
      case Kind::projective_plane: return "P2";
      case Kind::hirzebruch: return "F_" + std::to_string(e());
      default: {
        std::string s = "Bl_" + std::to_string(point_count()) + "(" + base().describe() + ")";
        if (!general_position()) s += "[special]";
        return s;
      }
    }
  }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b);

 private:
  struct Plane {};
  struct Scroll {
    int e;
  };
  struct Blown;
  struct Node;

  explicit SurfaceModel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Blown& blow_up_node() const;

  std::shared_ptr<const Node> node_;
};

struct SurfaceModel::Blown {
  SurfaceModel base;
  int points;
  bool general_position;
};

struct SurfaceModel::Node {
  std::variant<Plane, Scroll, Blown> variant;
  std::size_t rank;
};

inline SurfaceModel SurfaceModel::projective_plane() { return SurfaceModel(std::make_shared<const Node>(Node{Plane{}, 1})); }

inline SurfaceModel SurfaceModel::hirzebruch(int e) {
  if (e < 0) throw PreconditionError("Hirzebruch surface needs e >= 0, got " + std::to_string(e));
  return SurfaceModel(std::make_shared<const Node>(Node{Scroll{e}, 2}));
}

inline SurfaceModel::Kind SurfaceModel::kind() const {
  switch (node_->variant.index()) {
    case 0: return Kind::projective_plane;
    case 1: return Kind::hirzebruch;
    default: return Kind::blow_up;
  }
}

inline int SurfaceModel::e() const {
  if (const auto* s = std::get_if<Scroll>(&node_->variant)) return s->e;
  throw PreconditionError("surface " + describe() + " is not a Hirzebruch surface");
}

inline const SurfaceModel::Blown& SurfaceModel::blow_up_node() const {
  if (const auto* b = std::get_if<Blown>(&node_->variant)) return *b;
  throw PreconditionError("surface " + describe() + " is not a blow-up");
}

inline const SurfaceModel& SurfaceModel::base() const { return blow_up_node().base; }
inline int SurfaceModel::point_count() const { return blow_up_node().points; }
inline bool SurfaceModel::general_position() const { return blow_up_node().general_position; }
inline std::size_t SurfaceModel::picard_rank() const { return node_->rank; }

inline bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->rank != b.node_->rank || a.node_->variant.index() != b.node_->variant.index()) return false;
  switch (a.kind()) {
    case SurfaceModel::Kind::projective_plane: return true;
    case SurfaceModel::Kind::hirzebruch: return a.e() == b.e();
    default:
      return a.point_count() == b.point_count() && a.general_position() == b.general_position() && a.base() == b.base();
  }
}

inline SurfaceModel blow_up(const SurfaceModel& base, int point_count, bool general_position = true) {
  if (point_count < 1) throw PreconditionError("blow_up needs at least one point, got " + std::to_string(point_count));
  auto node = std::make_shared<const SurfaceModel::Node>(SurfaceModel::Node{
      SurfaceModel::Blown{base, point_count, general_position}, base.picard_rank() + static_cast<std::size_t>(point_count)});
  return SurfaceModel(std::move(node));
}

/// An element of Pic(S), as integer coordinates in the basis of S.
class DivisorClass {
 public:
  DivisorClass(SurfaceModel surface, std::vector<Integer> coeffs)
      : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != surface_.picard_rank())
      throw PreconditionError("class on " + surface_.describe() + " needs " + std::to_string(surface_.picard_rank()) +
                              " coefficients, got " + std::to_string(coeffs_.size()));
  }

  static DivisorClass zero(const SurfaceModel& s) { return DivisorClass(s, std::vector<Integer>(s.picard_rank())); }

  /// The i-th basis vector.
  static DivisorClass basis(const SurfaceModel& s, std::size_t i) {
    if (i >= s.picard_rank()) throw PreconditionError("basis index out of range on " + s.describe());
    DivisorClass d = zero(s);
    d.coeffs_[i] = 1;
    return d;
  }

  const SurfaceModel& surface() const { return surface_; }
  std::span<const Integer> coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }

  /// Copy with one coefficient replaced.
  DivisorClass with_coefficient(std::size_t i, Integer value) const {
    DivisorClass d = *this;
    d.coeffs_.at(i) = std::move(value);
    return d;
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    require_same(o, "+");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    require_same(o, "-");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  DivisorClass& operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator*(DivisorClass a, const Integer& k) { return a *= k; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Integer(-1); }

  /// Exact division of every coefficient; throws DivisibilityError on a remainder.
  DivisorClass divided_by(const Integer& k) const {
    if (k == 0) throw DivisibilityError("division of a class by zero");
    DivisorClass d = *this;
    const auto labels = surface_.basis_labels();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] % k != 0)
        throw DivisibilityError("coefficient of " + labels[i] + " (" + coeffs_[i].str() + ") is not divisible by " +
                                k.str());
      d.coeffs_[i] = coeffs_[i] / k;
    }
    return d;
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_ == b.surface_ && a.coeffs_ == b.coeffs_;
  }

  /// Compact rendering, e.g. "2D0 + 5F - (E1..E8)".
  std::string to_string() const {
    const auto labels = surface_.basis_labels();
    std::string out;
    auto term = [&out](const Integer& c, const std::string& what) {
      if (c == 0) return;
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != 1) out += mag.str();
      out += what;
    };
    const std::size_t m = surface_.minimal_rank();
    for (std::size_t i = 0; i < m; ++i) term(coeffs_[i], labels[i]);
    // Collapse runs of equal exceptional coefficients.
    std::size_t i = m;
    while (i < coeffs_.size()) {
      std::size_t j = i;
      while (j + 1 < coeffs_.size() && coeffs_[j + 1] == coeffs_[i]) ++j;
      if (j == i)
        term(coeffs_[i], labels[i]);
      else
        term(coeffs_[i], "(" + labels[i] + ".." + labels[j] + ")");
      i = j + 1;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same(const DivisorClass& o, const char* op) const {
    if (!(surface_ == o.surface_))
      throw SurfaceMismatch(std::string("operator") + op + ": classes on " + surface_.describe() + " and " +
                            o.surface_.describe());
  }

  SurfaceModel surface_;
  std::vector<Integer> coeffs_;
};

// Named classes -----------------------------------------------------------

inline DivisorClass hyperplane(const SurfaceModel& s) {
  if (s.minimal_model().kind() != SurfaceModel::Kind::projective_plane)
    throw PreconditionError("H is only defined over P2, not " + s.describe());
  return DivisorClass::basis(s, 0);
}

/// Pullback of the negative section D0 to s (s = F_e or a blow-up of it).
inline DivisorClass negative_section(const SurfaceModel& s) {
  if (s.minimal_model().kind() != SurfaceModel::Kind::hirzebruch)
    throw PreconditionError("D0 is only defined over F_e, not " + s.describe());
  return DivisorClass::basis(s, 0);
}

inline DivisorClass fiber(const SurfaceModel& s) {
  if (s.minimal_model().kind() != SurfaceModel::Kind::hirzebruch)
    throw PreconditionError("F is only defined over F_e, not " + s.describe());
  return DivisorClass::basis(s, 1);
}

/// E_{i+1}, counting exceptional classes from the innermost blow-up outward.
inline DivisorClass exceptional(const SurfaceModel& s, std::size_t i) {
  if (i >= s.exceptional_count()) throw PreconditionError("no exceptional class " + std::to_string(i + 1) + " on " + s.describe());
  return DivisorClass::basis(s, s.minimal_rank() + i);
}

/// Sum of the exceptional classes introduced by the outermost blow-up.
inline DivisorClass exceptional_sum(const SurfaceModel& s) {
  DivisorClass d = DivisorClass::zero(s);
  std::vector<Integer> c(d.coefficients().begin(), d.coefficients().end());
  for (std::size_t i = s.base().picard_rank(); i < s.picard_rank(); ++i) c[i] = 1;
  return DivisorClass(s, std::move(c));
}

// Core operations ---------------------------------------------------------

/// The intersection pairing.
inline Integer intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.surface() == b.surface()))
    throw SurfaceMismatch("intersect: classes on " + a.surface().describe() + " and " + b.surface().describe());
  const SurfaceModel& m = a.surface().minimal_model();
  Integer v;
  std::size_t first_exc = 1;
  if (m.kind() == SurfaceModel::Kind::projective_plane) {
    v = a[0] * b[0];
  } else {
    v = -Integer(m.e()) * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
    first_exc = 2;
  }
  for (std::size_t i = first_exc; i < a.size(); ++i) v -= a[i] * b[i];
  return v;
}

inline Integer self_intersection(const DivisorClass& d) { return intersect(d, d); }

inline DivisorClass canonical_class(const SurfaceModel& s) {
  switch (s.kind()) {
    case SurfaceModel::Kind::projective_plane: return DivisorClass(s, {Integer(-3)});
    case SurfaceModel::Kind::hirzebruch: return DivisorClass(s, {Integer(-2), Integer(-(s.e() + 2))});
    default: {
      std::vector<Integer> c;
      c.reserve(s.picard_rank());
      const DivisorClass base_k = canonical_class(s.base());
      c.assign(base_k.coefficients().begin(), base_k.coefficients().end());
      c.resize(s.picard_rank(), Integer(1));
      return DivisorClass(s, std::move(c));
    }
  }
}

/// One-level pullback along Bl_n(S) -> S.
inline DivisorClass pullback(const SurfaceModel& blown, const DivisorClass& d) {
  if (!blown.is_blow_up()) throw PreconditionError("pullback target " + blown.describe() + " is not a blow-up");
  if (!(blown.base() == d.surface()))
    throw SurfaceMismatch("pullback: class lives on " + d.surface().describe() + ", base of " + blown.describe() +
                          " is " + blown.base().describe());
  std::vector<Integer> c(d.coefficients().begin(), d.coefficients().end());
  c.resize(blown.picard_rank());
  return DivisorClass(blown, std::move(c));
}

/// Pullback through any number of nested blow-ups, down to d's surface.
inline DivisorClass pullback_to(const SurfaceModel& target, const DivisorClass& d) {
  if (target == d.surface()) return d;
  if (!target.is_blow_up())
    throw SurfaceMismatch("pullback_to: " + d.surface().describe() + " is not below " + target.describe());
  return pullback(target, pullback_to(target.base(), d));
}

// Section counts ------------------------------------------------------------

enum class CountKind { exact, virtual_count };

struct SectionCount {
  Integer value;
  CountKind kind = CountKind::exact;

  bool is_exact() const { return kind == CountKind::exact; }
  friend bool operator==(const SectionCount&, const SectionCount&) = default;
};

/// h^0 of a class aD0 + bF on F_e: sum over i = 0..a of max(0, b - i e + 1).
inline Integer hirzebruch_h0(const Integer& e, const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) return 0;
  // Terms are positive exactly for i <= b / e.
  const Integer last = (e == 0) ? a : std::min<Integer>(a, b / e);
  return (last + 1) * (b + 1) - e * last * (last + 1) / 2;
}

/// h^0(d), the number of independent sections.
///
/// Exact on P^2 and F_e. On a blow-up each exceptional coefficient -1 imposes
/// one simple point, and the result is the expected dimension clamped at zero,
/// tagged virtual. Positive exceptional coefficients are fixed components and
/// do not change the count. Coefficients below -1 are rejected.
inline SectionCount h0(const DivisorClass& d) {
  const SurfaceModel& s = d.surface();
  switch (s.kind()) {
    case SurfaceModel::Kind::projective_plane: {
      const Integer& deg = d[0];
      if (deg < 0) return {0, CountKind::exact};
      return {(deg + 2) * (deg + 1) / 2, CountKind::exact};
    }
    case SurfaceModel::Kind::hirzebruch: return {hirzebruch_h0(s.e(), d[0], d[1]), CountKind::exact};
    default: break;
  }
  const std::size_t base_rank = s.base().picard_rank();
  std::vector<Integer> base_coeffs(d.coefficients().begin(), d.coefficients().begin() + static_cast<std::ptrdiff_t>(base_rank));
  const SectionCount below = h0(DivisorClass(s.base(), std::move(base_coeffs)));

  Integer imposed = 0;
  for (std::size_t i = base_rank; i < d.size(); ++i) {
    if (d[i] < -1)
      throw PreconditionError("h0: exceptional coefficient " + d[i].str() +
                              " asks for a point of multiplicity > 1, which is not supported");
    if (d[i] == -1) ++imposed;
  }
  if (imposed == 0) return below;
  if (!s.general_position())
    throw PreconditionError("h0: points of " + s.describe() + " are not in general position; no virtual count");
  if (below.value == 0 && below.is_exact()) return {0, CountKind::exact};
  const Integer v = below.value - imposed;
  return {v > 0 ? v : Integer(0), CountKind::virtual_count};
}

inline SectionCount h0(const SurfaceModel& s, const DivisorClass& d) {
  if (!(s == d.surface())) throw SurfaceMismatch("h0: class lives on " + d.surface().describe() + ", not " + s.describe());
  return h0(d);
}

/// Ampleness of aD0 + bF on F_e (a > 0, b > a e) or dH on P^2 (d > 0).
/// Ample and very ample coincide on these surfaces.
inline bool is_ample_on_minimal(const DivisorClass& d) {
  const SurfaceModel& s = d.surface();
  switch (s.kind()) {
    case SurfaceModel::Kind::projective_plane: return d[0] > 0;
    case SurfaceModel::Kind::hirzebruch: return d[0] > 0 && d[1] > d[0] * s.e();
    default: throw PreconditionError("ampleness test only covers P2 and F_e, not " + s.describe());
  }
}

}  // namespace horikawa
