#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace toricmirror {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<mpq_class> column(std::size_t j) const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator*=(const mpq_class& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend std::vector<mpq_class> operator*(const RationalMatrix& a, const std::vector<mpq_class>& x);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  Eigen::MatrixXcd to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

struct RowEchelon {
  RationalMatrix reduced;  // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Exact Gauss-Jordan elimination; pivots are chosen left to right.
RowEchelon reduced_row_echelon(RationalMatrix m);

/// Solves a square system exactly; nullopt when singular.
std::optional<std::vector<mpq_class>> solve_exact(const RationalMatrix& a, const std::vector<mpq_class>& b);

/// Basis of the right null space.
std::vector<std::vector<mpq_class>> null_space(const RationalMatrix& a);

}  // namespace toricmirror
