#include "tropsurf/inertia.hpp"

#include <algorithm>
#include <numeric>

#include "tropsurf/error.hpp"

namespace tropsurf {

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
  return os << '(' << in.n_plus << ", " << in.n_zero << ", " << in.n_minus << ')';
}

SymmetricRationalMatrix SymmetricRationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  SymmetricRationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ") differs from its transpose");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymmetricRationalMatrix SymmetricRationalMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto x : rows[i]) q[i].emplace_back(x);
  return from_rows(q);
}

SymmetricRationalMatrix SymmetricRationalMatrix::from_matrix(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return from_rows(rows);
}

SymmetricRationalMatrix SymmetricRationalMatrix::principal(
    std::span<const std::size_t> indices) const {
  SymmetricRationalMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a; b < indices.size(); ++b)
      out.set(a, b, (*this)(indices[a], indices[b]));
  return out;
}

SymmetricRationalMatrix SymmetricRationalMatrix::leading(std::size_t k) const {
  std::vector<std::size_t> idx(std::min(k, n_));
  std::iota(idx.begin(), idx.end(), 0);
  return principal(idx);
}

RationalMatrix SymmetricRationalMatrix::dense() const {
  RationalMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

namespace {

struct Overflow {};

/// Reduced fraction with 64-bit parts; every operation is exact or throws
/// Overflow.
struct Frac64 {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac64() = default;
  explicit Frac64(std::int64_t n) : num(n) {}

  static Frac64 make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw Overflow{};
    Frac64 out;
    out.num = static_cast<std::int64_t>(n);
    out.den = static_cast<std::int64_t>(d);
    return out;
  }
};

Frac64 operator-(const Frac64& a, const Frac64& b) {
  return Frac64::make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                      static_cast<__int128>(a.den) * b.den);
}
Frac64 operator+(const Frac64& a, const Frac64& b) {
  return Frac64::make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                      static_cast<__int128>(a.den) * b.den);
}
Frac64 operator*(const Frac64& a, const Frac64& b) {
  return Frac64::make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}
Frac64 operator/(const Frac64& a, const Frac64& b) {
  return Frac64::make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

int sign_of(const Frac64& x) { return (x.num > 0) - (x.num < 0); }
int sign_of(const Rational& x) { return x.sign(); }

bool abs_less(const Frac64& a, const Frac64& b) {
  __int128 l = static_cast<__int128>(a.num < 0 ? -a.num : a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num < 0 ? -b.num : b.num) * a.den;
  return l < r;
}
bool abs_less(const Rational& a, const Rational& b) { return abs(a) < abs(b); }

// Congruence elimination on a dense symmetric n x n matrix. Each step either
// removes the diagonal pivot of largest magnitude (contributing its sign) or,
// when the remaining diagonal vanishes, a 2x2 hyperbolic block
// [[0, a], [a, 0]] contributing one positive and one negative direction.
template <class T>
Inertia eliminate(std::vector<T> a, std::size_t n) {
  Inertia out;
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };

  while (!active.empty()) {
    std::size_t best = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      const auto i = active[k];
      if (sign_of(at(i, i)) == 0) continue;
      if (best == active.size() || abs_less(at(active[best], active[best]), at(i, i))) best = k;
    }
    if (best != active.size()) {
      const std::size_t p = active[best];
      const T pivot = at(p, p);
      if (sign_of(pivot) > 0) ++out.n_plus; else ++out.n_minus;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
      for (std::size_t x = 0; x < active.size(); ++x) {
        const auto k = active[x];
        if (sign_of(at(k, p)) == 0) continue;
        const T factor = at(k, p) / pivot;
        for (std::size_t y = x; y < active.size(); ++y) {
          const auto l = active[y];
          if (sign_of(at(p, l)) == 0) continue;
          at(k, l) = at(k, l) - factor * at(p, l);
          at(l, k) = at(k, l);
        }
      }
      continue;
    }
    std::size_t bi = active.size(), bj = active.size();
    for (std::size_t x = 0; x < active.size() && bi == active.size(); ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (sign_of(at(active[x], active[y])) != 0) {
          bi = x;
          bj = y;
          break;
        }
    if (bi == active.size()) {
      out.n_zero += static_cast<int>(active.size());
      break;
    }
    const std::size_t i = active[bi], j = active[bj];
    const T off = at(i, j);
    ++out.n_plus;
    ++out.n_minus;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
    // Schur complement of the block: M_kl -= (M_ki M_jl + M_kj M_il) / a.
    for (std::size_t x = 0; x < active.size(); ++x) {
      const auto k = active[x];
      for (std::size_t y = x; y < active.size(); ++y) {
        const auto l = active[y];
        const T update = (at(k, i) * at(j, l) + at(k, j) * at(i, l)) / off;
        if (sign_of(update) == 0) continue;
        at(k, l) = at(k, l) - update;
        at(l, k) = at(k, l);
      }
    }
  }
  return out;
}

// Fraction-free elimination on diagonal pivots. After k pivots, entry (i, j)
// is the minor on rows {pivots, i} and columns {pivots, j}, so each new pivot
// divided by the previous one has the sign of one eigenvalue direction.
// Returns false when the remaining diagonal vanishes above a nonzero
// off-diagonal entry, or when an entry leaves the 64-bit range.
bool fraction_free_inertia(std::int64_t* a, std::size_t n, Inertia& out) {
  out = {};
  std::size_t active[64];
  std::size_t count = n;
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  std::int64_t prev = 1;
  while (count > 0) {
    std::size_t best = count;
    std::int64_t best_abs = 0;
    for (std::size_t x = 0; x < count; ++x) {
      const std::int64_t d = a[active[x] * n + active[x]];
      const std::int64_t m = d < 0 ? -d : d;
      if (m > best_abs) {
        best_abs = m;
        best = x;
      }
    }
    if (best == count) {
      for (std::size_t x = 0; x < count; ++x)
        for (std::size_t y = x + 1; y < count; ++y)
          if (a[active[x] * n + active[y]] != 0) return false;
      out.n_zero += static_cast<int>(count);
      return true;
    }
    const std::size_t p = active[best];
    const std::int64_t pivot = a[p * n + p];
    if ((pivot > 0) == (prev > 0)) ++out.n_plus; else ++out.n_minus;
    active[best] = active[--count];
    for (std::size_t x = 0; x < count; ++x) {
      const std::size_t k = active[x];
      const __int128 kp = a[k * n + p];
      for (std::size_t y = x; y < count; ++y) {
        const std::size_t l = active[y];
        const __int128 num = static_cast<__int128>(pivot) * a[k * n + l] - kp * a[p * n + l];
        const __int128 q = num / prev;
        if (q * prev != num || q > INT64_MAX || q < -INT64_MAX) return false;
        a[k * n + l] = a[l * n + k] = static_cast<std::int64_t>(q);
      }
    }
    prev = pivot;
  }
  return true;
}

}  // namespace

Inertia inertia(const SymmetricRationalMatrix& m) {
  const std::size_t n = m.dimension();
  std::vector<Rational> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = m(i, j);
  return eliminate(std::move(dense), n);
}

Inertia leading_inertia(const SymmetricRationalMatrix& m, std::size_t k) {
  return inertia(m.leading(k));
}

Inertia inertia(std::span<const std::int64_t> row_major, std::size_t n) {
  if (row_major.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n * n) + " entries");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (row_major[i * n + j] != row_major[j * n + i]) {
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ") differs from its transpose");
      }
  if (n <= 16) {
    std::int64_t scratch[256];
    std::copy(row_major.begin(), row_major.end(), scratch);
    Inertia out;
    if (fraction_free_inertia(scratch, n, out)) return out;
  }
  try {
    std::vector<Frac64> a;
    a.reserve(n * n);
    for (auto x : row_major) a.emplace_back(x);
    return eliminate(std::move(a), n);
  } catch (const Overflow&) {
    std::vector<Rational> a;
    a.reserve(n * n);
    for (auto x : row_major) a.emplace_back(x);
    return eliminate(std::move(a), n);
  }
}

SymmetricRationalMatrix congruence(const SymmetricRationalMatrix& m, const RationalMatrix& c) {
  const std::size_t n = m.dimension();
  if (c.rows() != n || c.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "transform must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
  if (linalg::determinant(c) == 0) throw Error(ErrorCode::Singular, "transform is not invertible");
  RationalMatrix cm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (c(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) cm(i, j) += c(i, k) * m(k, j);
    }
  SymmetricRationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += cm(i, k) * c(j, k);
      out.set(i, j, s);
    }
  return out;
}

}  // namespace tropsurf
