#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "toricmirror/syz_transform.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

using ComplexVector = std::vector<std::complex<double>>;

/// W = sum_i e^{lambda_i} z^{v_i}, kept in ray order.
struct Superpotential {
  std::vector<LatticePoint> exponents;  // v_i
  std::vector<QMonomial> coefficients;  // e^{lambda_i}
  LaurentSeriesZ series;

  std::size_t n() const noexcept { return series.n(); }
  std::size_t d() const noexcept { return exponents.size(); }
  std::complex<double> evaluate(const ComplexVector& z, const std::vector<double>& q) const;
};

Superpotential superpotential(const ToricFanoData& data);

/// z_j dW/dz_j = sum_i v_i^j e^{lambda_i} z^{v_i}, j = 1..n.
std::vector<LaurentSeriesZ> jacobian_generators(const Superpotential& w);

/// |e^{lambda_i} z^{v_i}| < 1 for every i, with e^{lambda_i} evaluated at q.
bool domain_membership(const ToricFanoData& data, const ComplexVector& z, const std::vector<double>& q);

struct CriticalPointConfig {
  std::size_t starts = 0;  // 0 selects 50 * expected_count
  int max_iter = 100;
  double tol = 1e-12;
  double dedup_tol = 1e-6;
  std::uint64_t seed = 0;
  std::size_t expected_count = 0;
};

struct CriticalPointSet {
  std::vector<ComplexVector> points;           // z*
  std::vector<ComplexVector> log_points;       // u* with z* = exp(u*), Im u in [0, 2 pi)
  std::vector<std::complex<double>> values;    // W(z*)
  std::vector<ComplexVector> monomial_values;  // Z_i = e^{lambda_i} z*^{v_i}
  std::vector<double> residuals;               // max_j |z_j dW/dz_j| at z*
  std::size_t starts = 0;
  std::size_t failed_starts = 0;
  /// Two returned points closer than 10 * dedup_tol.
  bool degenerate_spectrum = false;
};

/// Number of vertices of the anticanonical polytope, i.e. the number of
/// torus-fixed points; used as the expected critical point count.
std::size_t expected_critical_count(const ToricFanoData& data);

/// Multistart Newton iteration in u = log z on z_j dW/dz_j = 0.
///
/// Starting points have real parts uniform in [-3, 3] and imaginary parts
/// uniform in [0, 2 pi), drawn from a generator seeded with `seed`. Starts are
/// solved independently (possibly in parallel) and deduplicated in start
/// order, so the result depends only on the configuration. Throws
/// IncompleteRootSet / RootCountMismatch unless exactly expected_count
/// distinct points are found.
CriticalPointSet critical_points(const Superpotential& w, const std::vector<double>& q,
                                 const CriticalPointConfig& config);

/// {phi(z*) : z* in cps}, in the order of cps.points.
std::vector<std::complex<double>> evaluate_at_critical(const LaurentSeriesZ& phi, const CriticalPointSet& cps,
                                                      const std::vector<double>& q);

}  // namespace toricmirror
