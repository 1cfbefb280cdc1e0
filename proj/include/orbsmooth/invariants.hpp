#pragma once

// Hilbert bases of invariant rings, the Hilbert map sigma and its orbit-space
// chart, and sampled checks that sigma separates orbits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbsmooth/group.hpp"
#include "orbsmooth/poly.hpp"

namespace orbsmooth {

struct InvariantBasis {
  std::vector<MultiPoly> generators;  // sigma_1..sigma_m, homogeneous
  Symmetry group;
  int degree_bound = 0;

  std::size_t dim() const { return symmetry_dim(group); }
  std::size_t size() const { return generators.size(); }
  std::vector<int> degrees() const;
};

/// Degree sweep d = 1..|G| (Noether's bound). A hard cap below |G| raises
/// DegreeBoundExceeded when a generator beyond the cap turns up.
InvariantBasis hilbert_basis(const FiniteGroup& group, std::optional<int> hard_cap = std::nullopt);
/// Circle action: the known basis {x0^2 + x1^2}.
InvariantBasis hilbert_basis(const Symmetry& symmetry, std::optional<int> hard_cap = std::nullopt);

Point hilbert_map(const InvariantBasis& basis, std::span<const double> x);
RationalVector hilbert_map(const InvariantBasis& basis, std::span<const Rational> x);

struct OrbitPoint {
  Point representative;
  Point sigma;
};

OrbitPoint make_orbit_point(const InvariantBasis& basis, std::span<const double> x);

/// True if p is a polynomial in `generators` (homogeneous p, exact linear solve).
bool in_subalgebra(const MultiPoly& p, const std::vector<MultiPoly>& generators);

/// All products of generators with total degree exactly d (weighted by degree).
std::vector<MultiPoly> generator_products(const std::vector<MultiPoly>& generators, int degree);

struct SeparationWitness {
  Point x;
  Point y;
  bool same_orbit = false;
  double sigma_gap = 0.0;
};

struct SeparationReport {
  std::size_t pairs = 0;
  std::size_t same_orbit_pairs = 0;
  std::size_t violations = 0;
  double tolerance = 1e-12;
  double max_same_orbit_gap = 0.0;      // max |sigma(x) - sigma(y)| over same-orbit pairs
  double min_distinct_orbit_gap = 0.0;  // min over distinct-orbit pairs
  std::vector<SeparationWitness> counterexamples;
};

/// Random pairs (half of them same-orbit by construction). Orbit membership is
/// decided exactly on rational sample points; sigma is compared in double with
/// a relative tolerance. Throws SeparationFailure with the first witness pair.
SeparationReport check_separation(const InvariantBasis& basis, std::size_t samples, std::uint64_t seed,
                                  double tol = 1e-12);

/// Grid image of sigma over the box [lo, hi]^n with `grid` points per axis,
/// deduplicated and sorted.
std::vector<Point> image_sample(const InvariantBasis& basis, std::span<const double> lo,
                                std::span<const double> hi, int grid);

std::string export_basis(const InvariantBasis& basis);
/// Throws FingerprintMismatch if the file was produced for a different group.
InvariantBasis import_basis(const std::string& text, const Symmetry& group);

}  // namespace orbsmooth
