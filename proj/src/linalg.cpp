#include "tropsurf/linalg.hpp"

#include <algorithm>
#include <tuple>

namespace tropsurf::linalg {

namespace {

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a,
                                                const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Echelonizes `m` using unimodular row operations, searching pivots only in
// the first `pivot_cols` columns. Returns the number of pivot rows.
std::size_t hermite_in_place(IntegerMatrix& m, std::size_t pivot_cols) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < pivot_cols && pivot_row < rows; ++col) {
    for (std::size_t i = pivot_row; i < rows; ++i) {
      if (m(i, col) != 0) {
        m.swap_rows(pivot_row, i);
        break;
      }
    }
    if (m(pivot_row, col) == 0) continue;
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const BigInt a = m(pivot_row, col);
      const BigInt b = m(i, col);
      auto [g, x, y] = extended_gcd(a, b);
      const BigInt ag = a / g;
      const BigInt bg = b / g;
      for (std::size_t j = col; j < cols; ++j) {
        BigInt top = x * m(pivot_row, j) + y * m(i, j);
        BigInt bottom = ag * m(i, j) - bg * m(pivot_row, j);
        m(pivot_row, j) = std::move(top);
        m(i, j) = std::move(bottom);
      }
    }
    if (m(pivot_row, col) < 0) {
      for (std::size_t j = col; j < cols; ++j) m(pivot_row, j) = -m(pivot_row, j);
    }
    const BigInt pivot = m(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      if (m(i, col) == 0) continue;
      BigInt q = floor_div(m(i, col), pivot);
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= q * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t i = pivot_row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        found = i;
        break;
      }
    }
    if (found == m.rows()) continue;
    m.swap_rows(pivot_row, found);
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) -= factor * m(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

RationalMatrix kernel(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const auto pivots = rref(reduced);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.append_row(v);
  }
  return basis;
}

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  const std::size_t r = hermite_in_place(m, m.cols());
  IntegerMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // Row j of the augmented matrix is [column j of m | unit vector e_j]; the
  // unimodular transform recorded on the right exposes the kernel in the rows
  // whose left part vanishes.
  IntegerMatrix aug(n, k + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = m(i, j);
    aug(j, k + j) = 1;
  }
  const std::size_t r = hermite_in_place(aug, k);
  IntegerMatrix basis(0, n);
  for (std::size_t i = r; i < n; ++i) {
    std::vector<BigInt> v(aug.row(i).begin() + static_cast<std::ptrdiff_t>(k),
                          aug.row(i).end());
    basis.append_row(v);
  }
  if (basis.rows() == 0) return IntegerMatrix(0, n);
  return hermite_normal_form(std::move(basis));
}

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
  BigInt lcm = 1;
  for (const auto& x : v) {
    const BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) return 0;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t i = col; i < n; ++i) {
      if (m(i, col) != 0) {
        found = i;
        break;
      }
    }
    if (found == n) return 0;
    if (found != col) {
      m.swap_rows(found, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace tropsurf::linalg
