#pragma once

// Finite orthogonal group actions on R^n (exact rational matrices), the planar
// circle action, orbits, stabilizers, slices, and Haar averaging of callables.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orbsmooth/rational.hpp"

namespace orbsmooth {

using Point = std::vector<double>;
using ScalarField = std::function<double(std::span<const double>)>;

/// Exact orthogonal n x n matrix acting by x -> g x.
class GroupElement {
 public:
  /// Row-major entries; throws NotOrthogonal unless M^T M = I exactly.
  GroupElement(std::size_t dim, std::vector<Rational> entries);

  static GroupElement identity(std::size_t dim);
  static GroupElement from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Rational>& entries() const { return entries_; }
  /// Row-major double copy of the entries.
  const std::vector<double>& doubles() const { return doubles_; }

  bool is_identity() const;
  GroupElement inverse() const;  // transpose

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::string to_string() const;

 private:
  struct Unchecked {};
  GroupElement(Unchecked, std::size_t dim, std::vector<Rational> entries);
  void cache_doubles();

  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
  std::vector<double> doubles_;
};

Point act(const GroupElement& g, std::span<const double> x);
RationalVector act(const GroupElement& g, std::span<const Rational> x);

/// A finite group of orthogonal matrices, stored as its full element list
/// (identity first, remaining elements in canonical order).
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 10000;

  /// Product-closure of the generators. Throws ClosureExceeded past order_cap,
  /// NotOrthogonal / DimensionMismatch on bad generators.
  static FiniteGroup close(const std::vector<GroupElement>& generators, std::size_t dim,
                           std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup trivial(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t order_cap() const { return order_cap_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  bool contains(const GroupElement& g) const;

  /// Exhaustive check: identity present, closed under products and inverses.
  bool verify_closure() const;

  /// Subgroup made of the given elements (which must already be closed).
  FiniteGroup subgroup(std::vector<GroupElement> members) const;

  /// "order:<|G|>/hash:<16 hex digits>" over the canonical element list.
  std::string fingerprint() const;

 private:
  std::size_t dim_ = 0;
  std::size_t order_cap_ = kDefaultOrderCap;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
};

/// The rotation group SO(2) on R^2, averaged with an equispaced trapezoid rule.
struct CircleAction {
  int quadrature_nodes = 16;

  explicit CircleAction(int nodes = 16);
  std::size_t dim() const { return 2; }
  /// Float rotation matrices (row-major) for the quadrature angles 2 pi k / N.
  std::vector<std::vector<double>> rotations() const;
  std::string fingerprint() const;
};

using Symmetry = std::variant<FiniteGroup, CircleAction>;

std::size_t symmetry_dim(const Symmetry& symmetry);
std::string symmetry_fingerprint(const Symmetry& symmetry);

/// Presets: trivial, sign, cyclic:k, dihedral:k, symmetric:k, circle.
Symmetry make_preset(const std::string& name, std::size_t dim, int circle_nodes = 16);

/// Distinct images {g x}. Exact for rational points; floating points are
/// deduplicated with tolerance `tol` (max-norm).
std::vector<Point> orbit(const FiniteGroup& group, std::span<const double> x, double tol = 1e-12);
std::vector<RationalVector> orbit(const FiniteGroup& group, std::span<const Rational> x);

struct StabilizerResult {
  FiniteGroup group;
  bool numeric = false;  // true if some membership was decided within tolerance only
};

FiniteGroup stabilizer(const FiniteGroup& group, std::span<const Rational> x);
/// Elements with |g x - x|_inf <= tol; exact comparison is attempted first.
StabilizerResult stabilizer(const FiniteGroup& group, std::span<const double> x, double tol = 1e-12);

struct Slice {
  Point center;
  FiniteGroup stabilizer;
  std::optional<double> radius;  // nullopt: unbounded (singleton orbit)
  bool numeric = false;

  bool unbounded() const { return !radius.has_value(); }
};

/// Ball of radius half the minimum gap between distinct orbit points.
Slice compute_slice(const FiniteGroup& group, std::span<const double> x);

/// True if g * ball(center, radius) meets the ball only for g in the stabilizer.
bool slice_condition_holds(const FiniteGroup& group, const Slice& slice);

/// (1/|G|) sum_g h(g x).
ScalarField haar_average(const FiniteGroup& group, ScalarField h);

/// Deterministic hash used in fingerprints.
std::uint64_t fnv1a(std::string_view text, std::uint64_t seed = 1469598103934665603ULL);

}  // namespace orbsmooth
