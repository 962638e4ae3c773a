#pragma once

// Exact dense linear algebra over Q and Z for the small systems that appear
// in cohomology, sheaf sections and congruence checks.

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropsurf {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

namespace linalg {

/// Reduces `m` to reduced row echelon form and returns its pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}; one row per free column, carrying a 1 in that
/// column and 0 in every other free column.
RationalMatrix kernel(const RationalMatrix& m);

/// Row Hermite normal form: positive pivots, entries above a pivot reduced
/// into [0, pivot), zero rows removed. Unique for the row lattice.
IntegerMatrix hermite_normal_form(IntegerMatrix m);

/// Z-basis of the saturated lattice {x in Z^n : m x = 0}, in Hermite normal
/// form.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

Rational determinant(RationalMatrix m);

RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace linalg
}  // namespace tropsurf
