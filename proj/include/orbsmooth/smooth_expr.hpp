#pragma once

// Closed-form expression trees over smooth primitives. Every approximant the
// library produces is one of these, so it is C^infinity by construction.
//
// Trees are immutable and share subtrees freely; serialization preserves the
// sharing through numbered `let` bindings (see README for the grammar).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "orbsmooth/group.hpp"
#include "orbsmooth/poly.hpp"
#include "orbsmooth/rational.hpp"

namespace orbsmooth {

enum class ExprKind {
  Constant,
  Coordinate,
  Polynomial,
  BumpCutoff,
  Sum,
  Product,
  Scale,
  LinearPrecompose,
  SigmaPrecompose,
  Quotient,
  PartitionInterpolant,
};

std::string_view to_string(ExprKind kind);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// First-order partition-of-unity interpolant on a regular tensor grid:
///   g(x) = sum_i (f_i + grad_i . (x - q_i)) * phi_i(x),
/// where phi_i is the product over axes of the smooth hat 1 - S(|s|) and the
/// phi_i sum to one on the grid box. Nodes are stored axis-0-fastest.
struct GridData {
  std::size_t dim = 0;
  double h = 0.0;
  Point lo;                       // node (0, ..., 0)
  std::vector<int> counts;        // nodes per axis
  std::vector<double> values;     // f_i
  std::vector<double> gradients;  // dim entries per node
  std::size_t nodes() const { return values.size(); }
};

struct ExprNode;

/// Counts the distinct interpolant nodes touched by an evaluation.
struct EvalTrace {
  std::unordered_set<const ExprNode*> interpolants;
  std::size_t touched() const { return interpolants.size(); }
};

class SmoothExpr {
 public:
  SmoothExpr() = default;

  static SmoothExpr constant(std::size_t dim, const Rational& c);
  static SmoothExpr constant_float(std::size_t dim, double c);
  static SmoothExpr coordinate(std::size_t dim, std::size_t index);
  static SmoothExpr polynomial(MultiPoly p);
  /// 1 on |x - c| <= a, 0 on |x - c| >= b; throws BadRadii unless 0 < a < b.
  static SmoothExpr bump(Point center, double a, double b);
  static SmoothExpr sum(std::vector<SmoothExpr> terms);
  static SmoothExpr product(std::vector<SmoothExpr> factors);
  /// (p/q) * child, evaluated as (v * p) / q.
  static SmoothExpr scale(const Rational& factor, SmoothExpr child);
  /// child(M x) with M exact (child.dim() x n, row-major).
  static SmoothExpr linear(std::size_t rows, std::size_t cols, std::vector<Rational> matrix, SmoothExpr child);
  static SmoothExpr linear(const GroupElement& g, SmoothExpr child);
  static SmoothExpr linear_float(std::size_t rows, std::size_t cols, std::vector<double> matrix, SmoothExpr child);
  /// child(sigma_1(x), ..., sigma_m(x)); child must have dimension m.
  static SmoothExpr sigma(std::vector<MultiPoly> basis, SmoothExpr child);
  /// num / den on the box [lo, hi]. The denominator is certified >= c > 0
  /// there by interval evaluation, else DomainViolation.
  static SmoothExpr quotient(SmoothExpr num, SmoothExpr den, Point lo, Point hi, double c);
  static SmoothExpr interpolant(GridData grid);

  bool valid() const { return node_ != nullptr; }
  std::size_t dim() const;
  ExprKind kind() const;
  const ExprNode& node() const { return *node_; }
  const std::shared_ptr<const ExprNode>& ptr() const { return node_; }

  double eval(std::span<const double> x) const;
  double eval(std::span<const double> x, EvalTrace& trace) const;
  /// Axis-major input: coordinate d of point i at soa[d * count + i].
  void eval_batch(const double* soa, std::size_t count, double* out) const;
  std::vector<double> eval_points(std::span<const Point> points) const;
  Interval eval_interval(std::span<const Interval> box) const;

  /// Number of distinct nodes (shared subtrees counted once).
  std::size_t node_count() const;
  /// True if any node refers to group data (LinearPrecompose or SigmaPrecompose).
  bool uses_group_machinery() const;

  std::string serialize() const;
  static SmoothExpr parse(std::string_view text);

  SmoothExpr operator+(const SmoothExpr& other) const { return sum({*this, other}); }
  SmoothExpr operator*(const SmoothExpr& other) const { return product({*this, other}); }

 private:
  explicit SmoothExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
  friend struct ExprNode;
  friend class ExprParser;
};

struct ExprNode {
  ExprKind kind = ExprKind::Constant;
  std::size_t dim = 0;

  // Constant
  std::optional<Rational> exact;
  double value = 0.0;
  // Coordinate
  std::size_t index = 0;
  // Polynomial
  MultiPoly poly;
  // BumpCutoff
  Point center;
  double inner = 0.0;
  double outer = 0.0;
  // Scale
  Rational factor;
  // LinearPrecompose: rows x dim, row-major
  std::size_t rows = 0;
  std::vector<Rational> matrix_exact;  // empty for float matrices
  std::vector<double> matrix;
  // SigmaPrecompose
  std::vector<MultiPoly> basis;
  // Quotient
  Point box_lo;
  Point box_hi;
  double floor = 0.0;
  // PartitionInterpolant
  GridData grid;

  std::vector<SmoothExpr> children;
};

/// Radial cutoff eta = S((b - |x - c|) / (b - a)).
SmoothExpr bump_cutoff(double inner, double outer, std::span<const double> center);

/// (1/|H|) sum_{g in G} eta(g x), H the stabilizer of the center: equal to 1 on
/// the inner ball around every orbit point of the center and 0 outside the
/// outer balls. The outer balls around distinct orbit points must be disjoint
/// (BandViolation otherwise).
SmoothExpr invariant_cutoff(const FiniteGroup& group, double inner, double outer, std::span<const double> center);

/// (1/|G|) sum_g h(g x).
SmoothExpr haar_average(const FiniteGroup& group, const SmoothExpr& h);

/// Rotation average of a polynomial h on R^2. The trapezoid rule with N nodes
/// is exact for degree < N, so the exact average is returned; InsufficientNodes
/// if N <= deg h, NotPolynomial if h is not a Polynomial node.
SmoothExpr circle_average(const CircleAction& action, const SmoothExpr& h);
/// Exact SO(2) average of a planar polynomial (a polynomial in x0^2 + x1^2).
MultiPoly circle_average(const MultiPoly& p);

/// Central differences: order 1 gives the gradient, order 2 the diagonal of
/// the Hessian.
Point derivative_probe(const SmoothExpr& e, std::span<const double> x, int order, double h);

}  // namespace orbsmooth
