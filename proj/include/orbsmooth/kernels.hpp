#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the active backend is picked once at runtime
// (CPU detection, overridable with ORBSMOOTH_KERNELS=scalar|avx2).
//
// Point sets are passed axis-major ("SoA"): coordinate d of point i lives at
// soa[d * count + i].

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace orbsmooth::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);

/// Flattened polynomial: term t has coefficient coefs[t] and exponents
/// exponents[t * dim .. t * dim + dim).
struct CompiledPoly {
  std::size_t dim = 0;
  std::vector<double> coefs;
  std::vector<std::uint16_t> exponents;
  unsigned max_degree = 0;  // largest single-variable exponent

  std::size_t terms() const { return coefs.size(); }
};

struct MaxAbs {
  double value = 0.0;
  std::size_t index = 0;
};

struct KernelTable {
  void (*exp)(const double* in, double* out, std::size_t n);
  void (*smoothstep)(const double* t, double* out, std::size_t n);
  void (*poly_eval)(const CompiledPoly& poly, const double* soa, std::size_t count, double* out);
  MaxAbs (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

bool available(Backend backend);
const KernelTable& table(Backend backend);

Backend active_backend();
/// Pins the backend for the rest of the process (tests, benchmarking).
void force_backend(Backend backend);

inline const KernelTable& active() { return table(active_backend()); }

// Scalar helpers shared by the single-point evaluation path.

/// exp(-1/t) / (exp(-1/t) + exp(-1/(1-t))), exactly 0 for t <= 0 and 1 for t >= 1.
double smoothstep_scalar(double t);

/// Compensated (Neumaier) evaluation at one point.
double poly_eval_point(const CompiledPoly& poly, std::span<const double> x);

}  // namespace orbsmooth::kernels
