#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "toricmirror/lg_model.hpp"
#include "toricmirror/qlaurent.hpp"
#include "toricmirror/rational_matrix.hpp"
#include "toricmirror/syz_transform.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

using DivisorExponent = std::vector<Int>;

/// Polynomial in the toric divisors D_1..D_d with q-Laurent coefficients.
class DivisorPolynomial {
 public:
  using Terms = std::map<DivisorExponent, QLaurent>;

  DivisorPolynomial(std::size_t d, std::size_t l) : d_(d), l_(l) {}
  static DivisorPolynomial variable(std::size_t d, std::size_t l, std::size_t i);
  static DivisorPolynomial monomial(const DivisorExponent& e, const QLaurent& c);
  static DivisorPolynomial constant(std::size_t d, const QLaurent& c);

  std::size_t d() const noexcept { return d_; }
  std::size_t l() const noexcept { return l_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  Int degree() const;
  bool is_homogeneous_linear() const;

  void add(const DivisorExponent& e, const QLaurent& c);

  DivisorPolynomial& operator+=(const DivisorPolynomial& other);
  DivisorPolynomial& operator-=(const DivisorPolynomial& other);
  friend DivisorPolynomial operator+(DivisorPolynomial a, const DivisorPolynomial& b) { return a += b; }
  friend DivisorPolynomial operator-(DivisorPolynomial a, const DivisorPolynomial& b) { return a -= b; }
  friend DivisorPolynomial operator*(const DivisorPolynomial& a, const DivisorPolynomial& b);

  friend bool operator==(const DivisorPolynomial& a, const DivisorPolynomial& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// e.g. "D1*D2*D3 - q1"
  std::string to_string() const;

 private:
  std::size_t d_;
  std::size_t l_;
  Terms terms_;
};

enum class Provenance { ComputedProduct, BuiltinExample };
std::string_view to_string(Provenance p);

struct RingPresentation {
  std::size_t d = 0;
  std::size_t l = 0;
  std::vector<DivisorPolynomial> linear_gens;
  std::vector<DivisorPolynomial> quantum_gens;
  Provenance provenance = Provenance::ComputedProduct;
  std::string label;
  Int default_degree_cap = 4;
};

/// l_j = sum_i v_i^j D_i, j = 1..n.
std::vector<DivisorPolynomial> linear_ideal(const ToricFanoData& data);

/// Ray grouping of CP^{n_1} x ... x CP^{n_l}: group a holds the rays e_j
/// (j in a block of coordinates) followed by -sum e_j, in ray order.
struct ProductFactorization {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> dims;  // n_a = |group| - 1
};

std::optional<ProductFactorization> product_structure(const ToricFanoData& data);

/// One generator prod_{i in group a} D_i - prod_{i in group a} e^{lambda_i} per factor.
std::vector<DivisorPolynomial> quantum_sr_ideal(const ToricFanoData& data,
                                                const std::optional<ProductFactorization>& factorization);

/// Linear and quantum Stanley-Reisner generators for a product of projective spaces.
RingPresentation product_presentation(const ToricFanoData& data);

/// Built-in presentation by name; only "BlP2" is known.
///
/// The quantum generators D1 D3 - q1 D4 and D2 D4 - q2 are written in the
/// convention e^lambda = (1, 1, q1 q2, q2) of the BlP2 fixture.
RingPresentation builtin_presentation(std::string_view name);

/// Product presentation when the rays factor, otherwise the built-in one named
/// after the data; throws NotAProduct when neither applies.
RingPresentation presentation_for(const ToricFanoData& data);

/// D_i -> e^{lambda_i} z^{v_i}, extended as a ring map.
LaurentSeriesZ substitute_divisors(const DivisorPolynomial& p, const ToricFanoData& data);

/// Finite-dimensional model of C[D]/(linear + quantum) at an exact rational q.
///
/// Variables D_i are first rewritten as linear forms in the free variables left
/// after eliminating the linear generators; the quotient is then computed from
/// a Macaulay matrix in those variables, graded reverse lexicographic order.
struct QuotientModel {
  std::vector<std::size_t> free_vars;                 // indices i of the D_i kept
  std::vector<std::vector<mpq_class>> substitution;   // D_i as linear form in the free vars
  std::vector<DivisorExponent> basis;                 // standard monomials in the free vars
  std::size_t dim = 0;
  std::vector<RationalMatrix> variable_matrices;      // multiplication by each free var
  std::vector<mpq_class> q;
  Int degree_cap = 0;
  std::size_t l = 0;
};

/// Builds the model; retries once at twice the cap on DimensionUnstable.
QuotientModel quotient_model(const RingPresentation& pres, const std::vector<mpq_class>& q,
                             std::optional<Int> degree_cap = std::nullopt);

/// Exact matrix of multiplication by `cls` on the quotient basis.
RationalMatrix multiplication_matrix(const QuotientModel& model, const DivisorPolynomial& cls);

/// Eigenvalues (with multiplicity) of multiplication by `cls`.
std::vector<std::complex<double>> multiplication_spectrum(const QuotientModel& model, const DivisorPolynomial& cls);

/// Greedy minimal-distance pairing of two multisets of equal size; returns the
/// largest paired distance (infinity when sizes differ).
double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string message;
};

struct VerificationReport {
  std::string presentation_label;
  Provenance provenance = Provenance::ComputedProduct;
  std::vector<CheckResult> checks;  // syntactic, ideal_membership, spectral
  std::size_t quotient_dim = 0;
  std::size_t critical_count = 0;
  std::vector<std::vector<std::complex<double>>> qh_spectra;       // per divisor D_i
  std::vector<std::vector<std::complex<double>>> critical_spectra;  // per divisor D_i
  CriticalPointSet critical;
  std::vector<double> q_numeric;

  bool passed() const;
};

struct VerificationTolerances {
  double ideal_tol = 1e-8;
  double spectral_tol = 1e-6;
  double commute_tol = 1e-8;
};

/// Checks the isomorphism D_i -> e^{lambda_i} z^{v_i} between the quantum ring
/// presentation and the Jacobian ring at one q.
VerificationReport verify_isomorphism(const ToricFanoData& data, const RingPresentation& pres,
                                      const std::vector<mpq_class>& q, CriticalPointConfig solver,
                                      const VerificationTolerances& tol = {});

}  // namespace toricmirror
