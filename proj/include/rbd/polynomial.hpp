#pragma once

#include <vector>

#include "rbd/rational.hpp"

namespace rbd {

// Dense square matrix of arbitrary-precision integers, row-major.
struct IntegerMatrix {
  int n = 0;
  std::vector<Integer> a;

  explicit IntegerMatrix(int size = 0)
      : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}
  Integer& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Integer& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Coefficients in ascending powers: p[i] multiplies x^i.
using IntegerPolynomial = std::vector<Integer>;
using RationalPolynomial = std::vector<Rational>;

// det(xI - A) by Berkowitz's division-free algorithm. O(n^4) ring operations.
IntegerPolynomial characteristic_polynomial(const IntegerMatrix& m);

// Determinant by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(IntegerMatrix m);

Integer evaluate(const IntegerPolynomial& p, const Integer& x);
Rational evaluate(const RationalPolynomial& p, const Rational& x);

// Quotient of p by (x - root); the remainder must be zero.
IntegerPolynomial divide_by_root(const IntegerPolynomial& p, const Integer& root);

}  // namespace rbd
