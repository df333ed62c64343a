#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "toricmirror/lattice.hpp"
#include "toricmirror/qlaurent.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

/// Torus-invariant function f(p, v) = f_v(q) e^{-<x, v>} on X x N, stored by
/// its coefficients f_v. Only finitely supported representatives are held.
class AdmissibleFunction {
 public:
  using Terms = std::map<LatticePoint, QLaurent>;

  AdmissibleFunction(std::size_t n, std::size_t l) : n_(n), l_(l) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t l() const noexcept { return l_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// f_v, zero when v is outside the support.
  QLaurent coefficient(const LatticePoint& v) const;

  void add(const LatticePoint& v, const QLaurent& c);

  AdmissibleFunction& operator+=(const AdmissibleFunction& other);
  AdmissibleFunction& operator*=(const QLaurent& s);
  friend AdmissibleFunction operator+(AdmissibleFunction a, const AdmissibleFunction& b) { return a += b; }
  friend AdmissibleFunction operator*(AdmissibleFunction a, const QLaurent& s) { return a *= s; }

  friend bool operator==(const AdmissibleFunction& a, const AdmissibleFunction& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::size_t l_;
  Terms terms_;
};

using DiscClass = std::vector<Int>;

/// Generating function over disc classes k in Z^d_{>=0}, truncated at total degree.
///
/// Only the rational weight of each class is stored; the q-monomial
/// prod (e^{lambda_i})^{k_i} and the boundary sum k_i v_i are derived from the
/// toric data when needed.
class DiscSeries {
 public:
  using Terms = std::map<DiscClass, mpq_class>;

  DiscSeries(std::size_t d, Int truncation_order) : d_(d), truncation_order_(truncation_order) {}

  std::size_t d() const noexcept { return d_; }
  Int truncation_order() const noexcept { return truncation_order_; }
  const Terms& terms() const noexcept { return terms_; }
  mpq_class coefficient(const DiscClass& k) const;

  /// Adds c to class k; classes beyond the truncation order are dropped.
  void add(const DiscClass& k, const mpq_class& c);

  DiscSeries& operator+=(const DiscSeries& other);
  DiscSeries& operator*=(const mpq_class& s);
  friend DiscSeries operator+(DiscSeries a, const DiscSeries& b) { return a += b; }
  friend DiscSeries operator*(DiscSeries a, const mpq_class& s) { return a *= s; }

  friend bool operator==(const DiscSeries& a, const DiscSeries& b) {
    return a.d_ == b.d_ && a.truncation_order_ == b.truncation_order_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t d_;
  Int truncation_order_;
  Terms terms_;
};

Int total_degree(const DiscClass& k);

/// Psi_i (power +1): e^{lambda_i} at v_i. Psi_i^{-1} (power -1): e^{-lambda_i} at -v_i.
AdmissibleFunction make_psi(const ToricFanoData& data, std::size_t i, int power = 1);

/// The convolution identity: 1 at v = 0.
AdmissibleFunction unit(std::size_t n, std::size_t l);

/// (f * g)_v = sum_{v1 + v2 = v} f_{v1} g_{v2}.
AdmissibleFunction convolve(const AdmissibleFunction& f, const AdmissibleFunction& g);

/// f convolved with itself e >= 0 times.
AdmissibleFunction convolution_power(const AdmissibleFunction& f, Int e);

/// Every class with total degree <= k_max, weighted 1/(k_1! ... k_d!).
DiscSeries phi_truncated(const ToricFanoData& data, Int k_max);

/// Groups disc classes by boundary v = sum k_i v_i.
AdmissibleFunction disc_to_admissible(const DiscSeries& s, const ToricFanoData& data);

/// q_a d/dq_a at disc level: class k scales by the q_a-exponent of prod (e^{lambda_i})^{k_i}.
DiscSeries q_log_derivative(const DiscSeries& s, std::size_t a, const ToricFanoData& data);

/// s * Psi_i at disc level: class k moves to k + e_i.
DiscSeries convolve_psi(const DiscSeries& s, std::size_t i);

/// sum_i Lambda_ia (s * Psi_i), where Lambda_ia is the q_a-exponent of e^{lambda_i}.
///
/// Applied to Phi this is the right-hand side of the logarithmic-derivative
/// identity q_a dPhi/dq_a; it reduces to Phi * Psi_{n+a} when e^{lambda_i} = 1
/// for i <= n and e^{lambda_{n+a}} = q_a.
DiscSeries log_derivative_rhs(const DiscSeries& s, std::size_t a, const ToricFanoData& data);

/// prod_i Psi_i^{Q_ia}, which equals q_a times the unit for every kernel column a.
AdmissibleFunction psi_relation(const ToricFanoData& data, std::size_t a);

}  // namespace toricmirror
