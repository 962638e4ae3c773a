#pragma once

// Exact signature of symmetric matrices by Sylvester congruence elimination.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "tropsurf/linalg.hpp"

namespace tropsurf {

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int dimension() const { return n_plus + n_zero + n_minus; }
  bool operator==(const Inertia&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

/// Symmetric matrix over Q; only the upper triangle is stored, so symmetry
/// holds by construction.
class SymmetricRationalMatrix {
 public:
  SymmetricRationalMatrix() = default;
  explicit SymmetricRationalMatrix(std::size_t n)
      : n_(n), upper_(n * (n + 1) / 2) {}

  /// Throws NotSymmetric unless `rows` is square and symmetric.
  static SymmetricRationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymmetricRationalMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static SymmetricRationalMatrix from_matrix(const RationalMatrix& m);

  std::size_t dimension() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return upper_[index(i, j)];
  }
  void set(std::size_t i, std::size_t j, Rational value) {
    upper_[index(i, j)] = std::move(value);
  }

  SymmetricRationalMatrix principal(std::span<const std::size_t> indices) const;
  SymmetricRationalMatrix leading(std::size_t k) const;
  RationalMatrix dense() const;

  bool operator==(const SymmetricRationalMatrix&) const = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_ = 0;
  std::vector<Rational> upper_;
};

Inertia inertia(const SymmetricRationalMatrix& m);

/// Inertia of the leading k x k principal submatrix. By Cauchy interlacing,
/// n_plus of a principal submatrix never exceeds n_plus of the whole.
Inertia leading_inertia(const SymmetricRationalMatrix& m, std::size_t k);

/// Inertia of a symmetric integer matrix given densely in row-major order.
/// Uses checked 64-bit fractions and falls back to arbitrary precision on
/// overflow. Throws NotSymmetric.
Inertia inertia(std::span<const std::int64_t> row_major, std::size_t n);

/// C * M * C^T. Throws DimensionMismatch or Singular.
SymmetricRationalMatrix congruence(const SymmetricRationalMatrix& m,
                                   const RationalMatrix& c);

}  // namespace tropsurf
