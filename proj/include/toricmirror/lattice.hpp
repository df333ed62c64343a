#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toricmirror {

using Int = std::int64_t;

/// An element of N = Z^n (or of its dual M).
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Int> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t n) { return LatticePoint(std::vector<Int>(n, 0)); }
  static LatticePoint basis(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t j) const { return coords_[j]; }
  Int& operator[](std::size_t j) { return coords_[j]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// gcd of the absolute values of the coordinates (0 for the zero vector).
  Int content() const;

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  LatticePoint operator-() const;
  friend LatticePoint operator*(Int s, LatticePoint a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

Int dot(const LatticePoint& a, const LatticePoint& b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);
  /// Builds a matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Result of unimodular column reduction A U = [H | 0].
///
/// H is n x rank lower triangular with positive diagonal; the trailing
/// cols - rank columns of U span the integer kernel of A.
struct ColumnReduction {
  IntMatrix hermite;   // A U restricted to the first `rank` columns
  IntMatrix unimodular;  // U, cols x cols, det +-1
  std::size_t rank = 0;
};

ColumnReduction column_reduce(const IntMatrix& a);

/// Row Hermite normal form: echelon rows, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix row_hermite_form(const IntMatrix& a);

/// Invariant factors (diagonal of the Smith normal form), nonzero ones only.
std::vector<mpz_class> smith_invariants(const IntMatrix& a);

/// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& a);

/// Inverse of a unimodular square matrix; nullopt when det != +-1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

}  // namespace toricmirror
