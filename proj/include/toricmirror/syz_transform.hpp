#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>

#include "toricmirror/disc_algebra.hpp"
#include "toricmirror/lattice.hpp"
#include "toricmirror/qlaurent.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

/// Sparse Laurent object sum_w c_w(q) z^w in mirror coordinates z_1..z_n.
class LaurentSeriesZ {
 public:
  using Terms = std::map<LatticePoint, QLaurent>;

  LaurentSeriesZ(std::size_t n, std::size_t l) : n_(n), l_(l) {}
  static LaurentSeriesZ monomial(const LatticePoint& w, const QLaurent& c);
  static LaurentSeriesZ constant(std::size_t n, std::size_t l, const mpq_class& c);

  std::size_t n() const noexcept { return n_; }
  std::size_t l() const noexcept { return l_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  QLaurent coefficient(const LatticePoint& w) const;

  /// Disc degree bound when the object is a truncated exponential.
  std::optional<Int> truncation_order() const noexcept { return truncation_order_; }
  void set_truncation_order(std::optional<Int> order) { truncation_order_ = order; }

  void add(const LatticePoint& w, const QLaurent& c);

  LaurentSeriesZ& operator+=(const LaurentSeriesZ& other);
  LaurentSeriesZ& operator-=(const LaurentSeriesZ& other);
  LaurentSeriesZ& operator*=(const mpq_class& s);
  friend LaurentSeriesZ operator+(LaurentSeriesZ a, const LaurentSeriesZ& b) { return a += b; }
  friend LaurentSeriesZ operator-(LaurentSeriesZ a, const LaurentSeriesZ& b) { return a -= b; }
  friend LaurentSeriesZ operator*(const LaurentSeriesZ& a, const LaurentSeriesZ& b);
  friend LaurentSeriesZ operator*(LaurentSeriesZ a, const mpq_class& s) { return a *= s; }

  /// z_j d/dz_j.
  LaurentSeriesZ log_derivative(std::size_t j) const;

  /// Value at complex z (all nonzero) with numeric q.
  std::complex<double> evaluate(std::span<const std::complex<double>> z, std::span<const double> q) const;

  /// Term equality; truncation metadata is not compared.
  friend bool operator==(const LaurentSeriesZ& a, const LaurentSeriesZ& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t l_;
  Terms terms_;
  std::optional<Int> truncation_order_;
};

/// e^{lambda_i} z^{v_i}.
LaurentSeriesZ ray_monomial(const ToricFanoData& data, std::size_t i);

/// Fiberwise Fourier series: coefficient f_v becomes the coefficient of z^v.
LaurentSeriesZ transform(const AdmissibleFunction& f);

/// Fiberwise Fourier coefficients: the coefficient of z^w becomes f_w.
AdmissibleFunction inverse_transform(const LaurentSeriesZ& phi);

/// sum_{m <= k_max} W^m / m! with W = sum_i e^{lambda_i} z^{v_i}.
///
/// By the multinomial theorem this is the sum over classes k with
/// sum k_i <= k_max of prod (e^{lambda_i})^{k_i} z^{sum k_i v_i} / prod k_i!.
LaurentSeriesZ exp_superpotential_truncated(const ToricFanoData& data, Int k_max);

}  // namespace toricmirror
