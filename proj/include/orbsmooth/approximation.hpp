#pragma once

// The constructive pipeline: smoothing on a compact box, invariant local
// approximation on a slice, gluing with invariant cutoffs, compact exhaustion,
// triple covers, the telescoping global approximation, and the vector-valued
// extension with its straight-line homotopy.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbsmooth/continuous.hpp"
#include "orbsmooth/group.hpp"
#include "orbsmooth/invariants.hpp"
#include "orbsmooth/smooth_expr.hpp"
#include "orbsmooth/verification.hpp"

namespace orbsmooth {

struct SmoothingOptions {
  int max_refinements = 12;
  std::size_t max_nodes = 2'000'000;
  std::size_t modulus_pairs = 1000;
  double safety = 2.0;
  int verify_factor = 4;  // verification spacing = mesh / verify_factor
  std::uint64_t seed = 1;
};

struct StageRecord {
  std::size_t stage = 0;  // k, counted from 0
  std::size_t piece = 0;
  int shell = 0;
  double budget = 0.0;        // delta / 2^{k+1}, the bound on the stage change
  double local_budget = 0.0;  // delta / 2^{k+2}
  double local_error = 0.0;   // measured sup |local - f_k| on cl(V)
  double change = 0.0;        // measured sup |f_{k+1} - f_k|
  double mesh = 0.0;
  std::size_t nodes = 0;
  int refinements = 0;
  std::size_t verify_points = 0;
};

struct ApproxReport {
  double delta_requested = 0.0;
  double sup_error_measured = 0.0;
  double pre_average_error = 0.0;  // local pieces: error before stabilizer averaging
  Point witness;  // argmax of the measured error
  std::size_t grid_points = 0;
  std::string grid_region;
  double grid_spacing = 0.0;
  std::vector<StageRecord> stages;
  int refinement_count = 0;
  double mesh = 0.0;  // finest construction mesh
  std::size_t verify_points = 0;
  std::size_t pieces = 0;
  std::size_t multiplicity_bound = 0;
  std::size_t max_trace = 0;          // most interpolants touched by one evaluation
  std::size_t unsmoothed_points = 0;  // grid points where the glued weight on f is nonzero

  bool success() const { return sup_error_measured < delta_requested; }
};

struct ApproxResult {
  SmoothExpr expr;
  ApproxReport report;
};

/// Partition-of-unity interpolant of f on K with measured error < delta on a
/// verification grid 4x finer than the mesh. The grid overhangs K by less than
/// one mesh step, so f must be evaluable there; if `domain` is given it must
/// contain K with positive margin (MarginViolation otherwise).
ApproxResult smooth_on_compact(const ContinuousFn& f, const Box& K, double delta, const SmoothingOptions& options = {},
                               const std::optional<Box>& domain = std::nullopt);

/// Same construction, but accuracy is only demanded (and measured) on the
/// closed ball of `radius` around `center`.
ApproxResult smooth_on_ball(const ContinuousFn& f, std::span<const double> center, double radius, double delta,
                            const SmoothingOptions& options = {});

/// Throws NotInvariant (witness x then g x) unless |f(g x) - f(x)| <= tol on
/// `pairs` random orbit pairs in the ball of the given radius.
void require_invariant(const ContinuousFn& f, const Symmetry& group, double radius, std::uint64_t seed,
                       std::size_t pairs = 100, double tol = 1e-9);

/// Local invariant approximant on the slice ball: smooth_on_ball around the
/// slice center, then averaged over the stabilizer, so the result is
/// stabilizer-invariant with error < delta on the closed ball of `radius`.
ApproxResult invariant_smooth_local(const ContinuousFn& f, const FiniteGroup& group, const Slice& slice,
                                    const InvariantBasis& basis, double radius, double delta,
                                    const SmoothingOptions& options = {});

/// Circle action at the origin slice: approximates s -> f(sqrt(s), 0) on
/// [0, radius^2] and composes with sigma, giving a function of x0^2 + x1^2.
ApproxResult invariant_smooth_local_circle(const ContinuousFn& f, const CircleAction& action,
                                           const InvariantBasis& basis, double radius, double delta,
                                           const SmoothingOptions& options = {});

struct CoverPiece {
  std::size_t index = 0;
  OrbitPoint center;
  double u = 0.0;  // cutoff plateau radius
  double v = 0.0;  // cutoff support radius
  double w = 0.0;  // approximant domain radius
  int shell = 0;
  std::vector<Point> orbit;  // distinct images of the center
  std::size_t stabilizer_order = 1;

  /// Distance from x to the nearest orbit point of the center.
  double orbit_distance(std::span<const double> x) const;
};

struct Exhaustion {
  std::vector<double> radii;  // r_1 < ... < r_H, then the guard r_{H+1}
  std::size_t shells() const { return radii.size() - 1; }
  /// r_h for 0 <= h <= H + 1, with r_0 = 0.
  double radius(int h) const;
  double region_radius() const { return radii[radii.size() - 2]; }
};

/// G_h = {|x| < r_h}, r_h = h * radius / shells, plus one guard shell.
Exhaustion compact_exhaustion(double radius, int shells);

struct CoverOptions {
  double u_fraction = 0.7;
  double v_fraction = 0.85;
  double shrink = 0.98;
  std::size_t samples_per_shell = 4000;
  int max_repairs = 32;
  std::uint64_t seed = 7;
};

struct Cover {
  std::vector<CoverPiece> pieces;
  Exhaustion exhaustion;
  std::size_t multiplicity_bound = 0;  // max number of W-balls any region point can lie in
  /// Shell index h with r_{h-1} <= |x| < r_h, clamped into 1..H+1.
  int shell_of(std::span<const double> x) const;
};

/// Candidates on a spacing grid in each annulus, reduced to orbit
/// representatives, chosen greedily until sampled annulus points are all in
/// some U-ball. CoverageGap (with witness) if the candidates cannot cover.
Cover triple_cover(const Symmetry& group, const InvariantBasis& basis, const Exhaustion& exhaustion, double spacing,
                   const CoverOptions& options = {});

/// f_k = weight * base + smooth. The weight is zero on every U-ball glued so
/// far, where f_k coincides with the smooth part.
struct GluedFn {
  ContinuousFn base;
  SmoothExpr weight;
  SmoothExpr smooth;
  std::vector<std::size_t> smoothed_pieces;

  static GluedFn identity(const ContinuousFn& base);
  double operator()(std::span<const double> x) const;
  void eval_batch(const double* soa, std::size_t count, double* out) const;
  ContinuousFn as_fn() const;
};

/// g = (1 - eta) f + eta g0, with eta the invariant cutoff (plateau u, support
/// v) and eta g0 realized as (1/|H|) sum_g (eta_c local)(g x). BandViolation if
/// the radii are inconsistent.
GluedFn glue(const GluedFn& f, const SmoothExpr& local, const CoverPiece& piece, const Symmetry& group);

struct GlobalOptions {
  int shells = 3;
  double spacing = 0.25;
  std::size_t verify_points = 10000;
  SmoothingOptions smoothing;
  CoverOptions cover;
};

struct GlobalResult {
  SmoothExpr expr;
  GluedFn glued;
  Cover cover;
  ApproxReport report;
};

/// Telescoping approximation over the cover; stage k uses a local budget of
/// delta / 2^{k+2} and must change f_k by less than delta / 2^{k+1}
/// (StageBoundViolation otherwise). The final error is measured on a grid of
/// at least `verify_points` points in the region.
GlobalResult global_approx(const ContinuousFn& f, const Symmetry& group, const InvariantBasis& basis, double radius,
                           double delta, const GlobalOptions& options = {});

struct Homotopy {
  std::vector<SmoothExpr> g;
  VectorFn f;
};

/// (1 - t) g(y) + t f(y); ParameterOutOfRange unless 0 <= t <= 1.
Point homotopy_eval(const Homotopy& h, double t, std::span<const double> y);

struct VectorResult {
  std::vector<SmoothExpr> g;
  Homotopy homotopy;
  ApproxReport report;  // Euclidean error against epsilon
  std::vector<ApproxReport> components;
  double component_delta = 0.0;
};

/// global_approx per component with delta = epsilon / sqrt(k).
VectorResult vector_approx(const VectorFn& f, const Symmetry& group, const InvariantBasis& basis, double radius,
                           double epsilon, const GlobalOptions& options = {});

/// global_approx with the trivial group on R^n.
GlobalResult classical_baseline(const ContinuousFn& f, double radius, double delta, const GlobalOptions& options = {});

}  // namespace orbsmooth
