#pragma once

// Exact linear algebra over the integers. Every entry is an unbounded GMP
// integer; nothing in this header touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sftflow {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of unbounded integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> entries() const noexcept { return entries_; }
  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& scalar, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
bool is_zero(std::span<const Integer> v);
IntVector to_int_vector(std::initializer_list<long> values);

/// Polynomial with integer coefficients in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t power) const;
  Integer evaluate(const Integer& t) const;

  // "t^2 - 2t + 1"; the zero polynomial prints as "0".
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

struct SmithDecomposition {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, d = u * m * v
  IntMatrix v;  // unimodular, cols x cols

  IntVector diagonal() const;
};

/// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& m);

/// Smith normal form with transforms. Pivots on the entry of least
/// nonzero absolute value; the diagonal is nonnegative and each entry
/// divides the next.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// det(tI - m), obtained by evaluating det(kI - m) at k = 0..N and
/// interpolating over the rationals.
IntPolynomial char_poly(const IntMatrix& m);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_pow(const IntMatrix& m, std::size_t k);

/// True iff m^N v = 0 for the N x N matrix m. The chain ker m ⊆ ker m^2 ⊆ ...
/// is stationary from power N on, so this is the union of all kernels.
bool eventual_kernel_member(const IntMatrix& m, std::span<const Integer> v);

}  // namespace sftflow
