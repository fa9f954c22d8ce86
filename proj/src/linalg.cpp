#include "smeared/linalg.hpp"

#include <algorithm>

namespace smeared {

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
    const Rational inv = Rational(1) / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const Rational f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        if (!(*this)(row, c).is_zero()) (*this)(r, c) -= f * (*this)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m(*this);
  return m.rref().size();
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  RationalMatrix m(*this);
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial PolynomialSpan::reduce(Polynomial p) const {
  // Pivots have distinct leading monomials; eliminating leading terms strictly lowers
  // the leading monomial of p, so the loop terminates.
  while (!p.is_zero()) {
    const auto it = std::find_if(pivots_.begin(), pivots_.end(), [&](const Polynomial& q) {
      return q.leading_monomial() == p.leading_monomial();
    });
    if (it == pivots_.end()) return p;
    p = p.sub_scaled(p.leading_coefficient(), Monomial(p.ring()->num_vars()), *it);
  }
  return p;
}

bool PolynomialSpan::add(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_zero()) return false;
  pivots_.push_back(r.monic());
  return true;
}

bool PolynomialSpan::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

}  // namespace smeared
