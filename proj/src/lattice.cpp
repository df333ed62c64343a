#include "toricmirror/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toricmirror/error.hpp"

namespace toricmirror {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix to_z(const IntMatrix& a) {
  ZMatrix z(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) z[i][j] = static_cast<long>(a(i, j));
  return z;
}

Int narrow(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer overflow in lattice computation");
  return static_cast<Int>(v.get_si());
}

IntMatrix from_z(const ZMatrix& z, std::size_t cols) {
  IntMatrix m(z.size(), cols);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = narrow(z[i][j]);
  return m;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col[target] -= factor * col[source]
void axpy_col(ZMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
  for (auto& row : m) row[target] -= factor * row[source];
}

void axpy_row(ZMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
  for (std::size_t j = 0; j < m[target].size(); ++j) m[target][j] -= factor * m[source][j];
}

}  // namespace

LatticePoint LatticePoint::basis(std::size_t n, std::size_t j) {
  LatticePoint p = zero(n);
  p[j] = 1;
  return p;
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

Int LatticePoint::content() const {
  Int g = 0;
  for (Int c : coords_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += other.coords_[j];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= other.coords_[j];
  return *this;
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t j = 0; j < p.size(); ++j) os << (j ? "," : "") << p[j];
  return os << ')';
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
  Int s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::InvalidArgument, "ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

ColumnReduction column_reduce(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t d = a.cols();
  ZMatrix m = to_z(a);
  ZMatrix u = to_z(IntMatrix::identity(d));

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < n && pivot < d; ++r) {
    while (true) {
      // smallest nonzero |entry| in row r among the unreduced columns
      std::size_t best = d;
      for (std::size_t c = pivot; c < d; ++c) {
        if (m[r][c] == 0) continue;
        if (best == d || abs(m[r][c]) < abs(m[r][best])) best = c;
      }
      if (best == d) break;
      swap_cols(m, pivot, best);
      swap_cols(u, pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < d; ++c) {
        if (m[r][c] == 0) continue;
        const mpz_class q = floor_div(m[r][c], m[r][pivot]);
        axpy_col(m, c, pivot, q);
        axpy_col(u, c, pivot, q);
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][pivot] == 0) continue;
    if (m[r][pivot] < 0) {
      for (auto& row : m) row[pivot] = -row[pivot];
      for (auto& row : u) row[pivot] = -row[pivot];
    }
    ++pivot;
  }

  ColumnReduction out;
  out.rank = pivot;
  out.hermite = IntMatrix(n, pivot);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < pivot; ++j) out.hermite(i, j) = narrow(m[i][j]);
  out.unimodular = from_z(u, d);
  return out;
}

IntMatrix row_hermite_form(const IntMatrix& a) {
  ZMatrix m = to_z(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (m[r][c] == 0) continue;
        if (best == rows || abs(m[r][c]) < abs(m[best][c])) best = r;
      }
      if (best == rows) break;
      std::swap(m[pivot_row], m[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m[r][c] == 0) continue;
        axpy_row(m, r, pivot_row, floor_div(m[r][c], m[pivot_row][c]));
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[pivot_row][c] == 0) continue;
    if (m[pivot_row][c] < 0)
      for (auto& e : m[pivot_row]) e = -e;
    for (std::size_t r = 0; r < pivot_row; ++r)
      axpy_row(m, r, pivot_row, floor_div(m[r][c], m[pivot_row][c]));
    ++pivot_row;
  }
  m.resize(pivot_row);
  return from_z(m, cols);
}

std::vector<mpz_class> smith_invariants(const IntMatrix& a) {
  ZMatrix m = to_z(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // move the smallest nonzero entry of the trailing block to (t, t)
    auto find_min = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      std::swap(m[t], m[bi]);
      swap_cols(m, t, bj);
      return true;
    };
    if (!find_min()) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        axpy_row(m, i, t, floor_div(m[i][t], m[t][t]));
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        axpy_col(m, j, t, floor_div(m[t][j], m[t][t]));
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        find_min();
        continue;
      }
      // divisibility: the pivot must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            axpy_row(m, t, i, mpz_class(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = to_z(a);
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const mpz_class det = determinant(a);
  if (abs(det) != 1) return std::nullopt;
  // A U = [H] with H lower triangular unit-diagonal, so A^{-1} = U H^{-1}.
  const ColumnReduction red = column_reduce(a);
  const std::size_t n = a.rows();
  ZMatrix hinv(n, std::vector<mpz_class>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class rhs = (i == col) ? 1 : 0;
      for (std::size_t k = 0; k < i; ++k) rhs -= static_cast<long>(red.hermite(i, k)) * hinv[k][col];
      hinv[i][col] = rhs;  // diagonal is 1
    }
  }
  IntMatrix out = red.unimodular * from_z(hinv, n);
  return out;
}

}  // namespace toricmirror
