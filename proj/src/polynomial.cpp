#include "rbd/polynomial.hpp"

#include <stdexcept>

namespace rbd {

IntegerPolynomial characteristic_polynomial(const IntegerMatrix& m) {
  const int n = m.n;
  if (n == 0) return {Integer(1)};

  // poly holds det(xI - A_r) for the leading r x r block, highest power first.
  std::vector<Integer> poly{Integer(1), Integer(-m(0, 0))};
  std::vector<Integer> vec, next, column;
  for (int r = 1; r < n; ++r) {
    // Column of the Toeplitz matrix: 1, -a, -R C, -R A C, ..., -R A^{r-1} C.
    column.assign(static_cast<std::size_t>(r) + 2, Integer(0));
    column[0] = 1;
    column[1] = -m(r, r);
    vec.assign(static_cast<std::size_t>(r), Integer(0));
    for (int i = 0; i < r; ++i) vec[static_cast<std::size_t>(i)] = m(i, r);  // C
    for (int p = 0; p < r; ++p) {
      Integer dot = 0;
      for (int j = 0; j < r; ++j) dot += m(r, j) * vec[static_cast<std::size_t>(j)];
      column[static_cast<std::size_t>(p) + 2] = -dot;
      if (p + 1 == r) break;
      next.assign(static_cast<std::size_t>(r), Integer(0));
      for (int i = 0; i < r; ++i) {
        Integer acc = 0;
        for (int j = 0; j < r; ++j) acc += m(i, j) * vec[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = std::move(acc);
      }
      vec.swap(next);
    }
    std::vector<Integer> updated(static_cast<std::size_t>(r) + 2, Integer(0));
    for (std::size_t i = 0; i < updated.size(); ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
        updated[i] += column[i - j] * poly[j];
    poly.swap(updated);
  }
  return IntegerPolynomial(poly.rbegin(), poly.rend());
}

Integer bareiss_determinant(IntegerMatrix m) {
  const int n = m.n;
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer evaluate(const IntegerPolynomial& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntegerPolynomial divide_by_root(const IntegerPolynomial& p, const Integer& root) {
  if (p.size() < 2) throw std::invalid_argument("cannot divide a constant by (x - root)");
  IntegerPolynomial q(p.size() - 1);
  Integer carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  if (p[0] + carry * root != 0) throw std::invalid_argument("not a root");
  return q;
}

}  // namespace rbd
