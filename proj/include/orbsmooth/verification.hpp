#pragma once

// Independent oracles: sup errors and invariance defects measured on grids,
// and brute-force invariant subspaces used to certify Hilbert bases.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbsmooth/continuous.hpp"
#include "orbsmooth/group.hpp"
#include "orbsmooth/invariants.hpp"
#include "orbsmooth/linalg.hpp"
#include "orbsmooth/smooth_expr.hpp"

namespace orbsmooth {

struct Box {
  Point lo;
  Point hi;
  std::size_t dim() const { return lo.size(); }
  bool contains(std::span<const double> x) const;
  static Box cube(std::span<const double> center, double half_width);
};

/// Uniform grid on a box, optionally restricted to the closed ball of
/// `ball_radius` around the box center, optionally jittered by up to a
/// quarter spacing per axis.
struct GridSpec {
  Box region;
  int per_axis = 2;
  std::optional<double> ball_radius;
  std::optional<std::uint64_t> jitter_seed;

  /// Box [c - r, c + r]^n restricted to the ball, with per_axis raised until
  /// at least min_points points fall inside.
  static GridSpec ball(std::span<const double> center, double radius, std::size_t min_points);
  static GridSpec box(Box region, int per_axis);

  double spacing() const;  // largest axis step
  std::vector<Point> points() const;
  /// Axis-major copy of points().
  std::vector<double> soa() const;
  std::string describe() const;
};

/// Anything evaluable in batches: SmoothExpr, ContinuousFn, or a plain field.
struct Evaluable {
  std::size_t dim = 0;
  BatchField batch;

  Evaluable(const SmoothExpr& e);
  Evaluable(const ContinuousFn& f);
  Evaluable(std::size_t dim, ScalarField f);
  Evaluable(std::size_t dim, BatchField f) : dim(dim), batch(std::move(f)) {}
};

struct DefectReport {
  double max_defect = 0.0;
  Point argmax;
  std::size_t samples = 0;
  double tolerance = 0.0;
  bool passed() const { return max_defect < tolerance; }
};

/// max |a - b| over the grid. EvaluationFailure (with the point) on a
/// non-finite value or an evaluation error.
DefectReport sup_error(const Evaluable& a, const Evaluable& b, const GridSpec& grid, double tolerance = 0.0);
DefectReport sup_error(const Evaluable& a, const Evaluable& b, const std::vector<Point>& points,
                       double tolerance = 0.0);

/// max over grid points x and group elements g of |h(g x) - h(x)|. For the
/// circle action the quadrature rotations are used.
DefectReport invariance_defect(const Symmetry& group, const Evaluable& h, const GridSpec& grid,
                               double tolerance = 0.0);
DefectReport invariance_defect(const Symmetry& group, const Evaluable& h, const std::vector<Point>& points,
                               double tolerance = 0.0);

struct InvariantSubspace {
  std::size_t dim = 0;
  int degree = 0;
  std::vector<MultiPoly> basis;  // reduced row echelon form, each element homogeneous
  std::size_t dimension() const { return basis.size(); }
};

/// Exact RREF of the Reynolds images of every monomial of degree <= d.
InvariantSubspace brute_force_invariants(const FiniteGroup& group, int degree);

struct BasisCertificate {
  int degree = 0;
  bool invariant = false;
  bool generates = false;
  bool minimal = false;
  std::string detail;
  bool ok() const { return invariant && generates && minimal; }
};

/// (a) every generator is exactly invariant, (b) every brute-force invariant
/// of degree <= `degree` is a polynomial in the generators, (c) no generator
/// is a polynomial in the others.
BasisCertificate certify_hilbert_basis(const InvariantBasis& basis, int degree);

}  // namespace orbsmooth
