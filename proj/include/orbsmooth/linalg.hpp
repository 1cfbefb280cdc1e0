#pragma once

// Exact row reduction over the rationals, with polynomials mapped to
// coefficient vectors over a fixed monomial column order.

#include <map>
#include <vector>

#include "orbsmooth/poly.hpp"
#include "orbsmooth/rational.hpp"

namespace orbsmooth {

/// Incrementally maintained reduced row echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// v minus its projection onto the row space along pivot columns.
  RationalVector reduce(RationalVector v) const;
  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(RationalVector v);
  bool contains(const RationalVector& v) const;

  /// Rows ordered by pivot column (ascending), pivot entries equal to 1.
  std::vector<RationalVector> rows() const;

 private:
  std::size_t columns_;
  std::map<std::size_t, RationalVector> rows_;  // pivot column -> row
};

bool is_zero(const RationalVector& v);

/// Column layout: monomials in the given order.
class MonomialColumns {
 public:
  MonomialColumns(std::size_t dim, std::vector<Exponent> monomials);
  /// All monomials of degree exactly `degree`, grlex-descending.
  static MonomialColumns homogeneous(std::size_t dim, int degree);
  /// All monomials of degree <= `degree`, grlex-descending.
  static MonomialColumns up_to(std::size_t dim, int degree);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const { return monomials_; }

  /// Throws ParameterOutOfRange if p has a monomial outside the layout.
  RationalVector coords(const MultiPoly& p) const;
  MultiPoly poly(const RationalVector& v) const;

 private:
  std::size_t dim_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t, GrlexLess> index_;
};

}  // namespace orbsmooth
