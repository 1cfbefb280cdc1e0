#pragma once

// Continuous target functions: evaluable black boxes with a tag saying whether
// they are known to be invariant, plus the named built-ins used by configs.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbsmooth/group.hpp"
#include "orbsmooth/invariants.hpp"
#include "orbsmooth/smooth_expr.hpp"

namespace orbsmooth {

enum class FnTag { Invariant, General };

using BatchField = std::function<void(const double* soa, std::size_t count, double* out)>;

struct ContinuousFn {
  std::string name;
  std::size_t dim = 0;
  ScalarField fn;
  FnTag tag = FnTag::General;
  std::optional<double> lipschitz;  // modulus hint: |f(x) - f(y)| <= L |x - y|
  BatchField batch;                 // optional fast path, same values as fn

  double operator()(std::span<const double> x) const { return fn(x); }
  /// Axis-major input as in SmoothExpr::eval_batch.
  void eval_batch(const double* soa, std::size_t count, double* out) const;
};

struct VectorFn {
  std::vector<ContinuousFn> components;
  std::size_t dim() const { return components.empty() ? 0 : components[0].dim; }
  std::size_t size() const { return components.size(); }
  Point operator()(std::span<const double> x) const;
};

ContinuousFn constant_target(std::size_t dim, double c);
/// Euclidean norm; invariant under every orthogonal action.
ContinuousFn norm_target(std::size_t dim);
ContinuousFn abs_coordinate_target(std::size_t dim, std::size_t index);
ContinuousFn max_coordinate_target(std::size_t dim);
/// min over g of |x - g p|.
ContinuousFn distance_to_orbit_target(const FiniteGroup& group, Point p);
/// q(sigma(x)) for a polynomial q in m = |basis| variables.
ContinuousFn sigma_polynomial_target(const InvariantBasis& basis, MultiPoly q);
ContinuousFn expr_target(const SmoothExpr& e, FnTag tag = FnTag::General);

/// Samples on a full tensor grid with multilinear interpolation; queries
/// outside the grid box are clamped to it.
struct TableData {
  std::vector<std::vector<double>> axes;  // sorted node coordinates per axis
  std::vector<double> values;             // axis-0-fastest
  std::size_t dim() const { return axes.size(); }
  double interpolate(std::span<const double> x) const;
};

/// CSV with header "x0,...,x{n-1},value"; rows in any order.
TableData parse_table_csv(const std::string& text);
ContinuousFn table_target(TableData table);

}  // namespace orbsmooth
