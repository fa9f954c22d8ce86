#pragma once

#include <map>
#include <vector>

#include "smeared/polynomial.hpp"
#include "smeared/rational.hpp"

namespace smeared {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns pivot columns in increasing order.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  /// Basis of {v : A v = 0}. One vector per free column, with a 1 in that column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Incrementally maintained k-linear span of polynomials (polynomials as coefficient vectors).
class PolynomialSpan {
 public:
  /// Adds p; returns true iff p was outside the current span (the rank grew).
  bool add(const Polynomial& p);
  bool contains(const Polynomial& p) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  Polynomial reduce(Polynomial p) const;

  // Echelon basis keyed by leading monomial; each element is monic.
  std::vector<Polynomial> pivots_;
};

}  // namespace smeared
