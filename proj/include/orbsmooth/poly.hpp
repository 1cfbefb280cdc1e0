#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Terms are kept in graded-lexicographic order with x0 > x1 > ... ; the text
// form lists terms from the largest monomial down, e.g. "x0^2 + -3/2*x0*x1 + 5".

#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbsmooth/group.hpp"
#include "orbsmooth/kernels.hpp"
#include "orbsmooth/rational.hpp"

namespace orbsmooth {

using Exponent = std::vector<std::uint16_t>;

int total_degree(const Exponent& e);

/// Strict graded-lex order: lower total degree first, ties broken so that
/// x0 ranks above x1 above ... (larger exponent in an earlier variable wins).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponents of total degree `degree` in `dim` variables, grlex-descending.
std::vector<Exponent> monomials_of_degree(std::size_t dim, int degree);

class MultiPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;  // degree of the zero polynomial

  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit MultiPoly(std::size_t dim = 0) : dim_(dim) {}

  static MultiPoly constant(std::size_t dim, const Rational& c);
  static MultiPoly variable(std::size_t dim, std::size_t index);
  static MultiPoly monomial(Exponent exponent, const Rational& coef = 1);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;
  /// Largest monomial in grlex order; requires a nonzero polynomial.
  const Exponent& leading_monomial() const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scale(const Rational& c) const;
  MultiPoly pow(unsigned k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Substitutes subs[i] for x_i; the result lives in subs' dimension.
  MultiPoly compose(std::span<const MultiPoly> subs) const;

  Rational evaluate(std::span<const Rational> x) const;
  /// Compensated summation in double precision.
  double evaluate(std::span<const double> x) const;

  const kernels::CompiledPoly& compiled() const;

  std::string to_string() const;
  static MultiPoly parse(std::string_view text, std::size_t dim);

 private:
  std::size_t dim_;
  TermMap terms_;
  mutable std::shared_ptr<const kernels::CompiledPoly> compiled_;
};

/// p o Phi_g, i.e. x -> p(g x).
MultiPoly pullback(const GroupElement& g, const MultiPoly& p);

/// Reynolds operator (1/|G|) sum_g pullback(g, p).
MultiPoly reynolds(const FiniteGroup& group, const MultiPoly& p);

bool is_invariant(const FiniteGroup& group, const MultiPoly& p);

}  // namespace orbsmooth
