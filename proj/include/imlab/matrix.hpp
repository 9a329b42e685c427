#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace imlab {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions are at least 1x1 and every
/// entry is finite; both are checked on construction.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix conjugate_transpose(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
/// Entrywise modulus |a_ij|.
ComplexMatrix entrywise_abs(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
/// max_ij |a_ij - conj(a_ji)|
double hermitian_asymmetry(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// The square submatrix a[rows|cols].
ComplexMatrix submatrix(const ComplexMatrix& a, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols);

Complex trace(const ComplexMatrix& a);
/// Determinant by LU elimination with partial pivoting.
Complex determinant(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, const char* what);

}  // namespace imlab
