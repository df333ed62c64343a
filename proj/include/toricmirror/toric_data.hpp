#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toricmirror/lattice.hpp"
#include "toricmirror/qlaurent.hpp"

namespace toricmirror {

/// Validated geometric input shared by every module.
///
/// Holds the rays v_1..v_d of the fan, the formal values e^{lambda_i} as
/// q-monomials, an optional numeric lambda, and a Z-basis Q (d x l) of the
/// kernel of the boundary map k -> sum k_i v_i. The invariant tying them
/// together is prod_i (e^{lambda_i})^{Q_ia} = q_a for every a.
/// Instances are immutable and only produced by build_toric_data.
class ToricFanoData {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return rays_.size(); }
  std::size_t l() const noexcept { return kbasis_.cols(); }

  const std::vector<LatticePoint>& rays() const noexcept { return rays_; }
  const LatticePoint& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<QMonomial>& lambda_monomials() const noexcept { return lambda_monomials_; }
  const QMonomial& lambda_monomial(std::size_t i) const { return lambda_monomials_.at(i); }
  const std::optional<std::vector<double>>& lambda_numeric() const noexcept { return lambda_numeric_; }
  /// d x l, columns span ker(boundary).
  const IntMatrix& kbasis() const noexcept { return kbasis_; }

  /// Boundary map k -> sum_i k_i v_i.
  LatticePoint boundary(const std::vector<Int>& k) const;

 private:
  friend ToricFanoData build_toric_data(std::vector<LatticePoint>, std::optional<std::vector<QMonomial>>,
                                        std::optional<IntMatrix>, std::optional<std::vector<double>>,
                                        std::string);
  ToricFanoData() = default;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<LatticePoint> rays_;
  std::vector<QMonomial> lambda_monomials_;
  std::optional<std::vector<double>> lambda_numeric_;
  IntMatrix kbasis_;
};

/// Validates rays and fills in the kernel basis and formal lambda when omitted.
///
/// Without a kbasis, one is computed by kernel_basis(); if lambda monomials are
/// supplied instead, the basis is chosen so that the monomials are consistent
/// with it. Without lambda monomials, a consistent choice is made with
/// lambda_i = 0 outside one unimodular l-subset of rays (preferring the last
/// rays, which gives e^{lambda_{n+a}} = q_a whenever the trailing block of the
/// basis is the identity).
ToricFanoData build_toric_data(std::vector<LatticePoint> rays,
                               std::optional<std::vector<QMonomial>> lambda_monomials = std::nullopt,
                               std::optional<IntMatrix> kbasis = std::nullopt,
                               std::optional<std::vector<double>> lambda_numeric = std::nullopt,
                               std::string name = {});

/// Z-basis of ker(boundary) in row-Hermite form, normalized so its trailing
/// l x l block is the identity when that block is unimodular.
IntMatrix kernel_basis(const std::vector<LatticePoint>& rays);

/// Integer m with boundary(m) = target; rays must span the lattice.
std::vector<Int> boundary_preimage(const std::vector<LatticePoint>& rays, const LatticePoint& target);

/// q_a = exp(-r_a) with r_a = -sum_i Q_ia lambda_i.
std::vector<double> kahler_params(const ToricFanoData& data, const std::vector<double>& lambda_numeric);

/// lambda_i = log of the formal monomial e^{lambda_i} evaluated at q.
std::vector<double> lambda_from_q(const ToricFanoData& data, const std::vector<double>& q);

/// lambda_i = -1 for every i: the anticanonical polytope, whose normal fan is
/// the fan of a toric Fano manifold.
std::vector<double> anticanonical_lambda(const ToricFanoData& data);

using RationalPoint = std::vector<mpq_class>;

/// Vertices of {x : <x, v_i> >= lambda_i}, exact in the (exactly converted) lambda.
std::vector<RationalPoint> polytope_vertices(const ToricFanoData& data, const std::vector<double>& lambda_numeric);

/// Symplectic area 2 pi (<x, v_i> - lambda_i) of the basic disc class beta_i at x.
double disc_area(const ToricFanoData& data, const std::vector<double>& x, std::size_t i,
                 const std::vector<double>& lambda_numeric);

}  // namespace toricmirror
