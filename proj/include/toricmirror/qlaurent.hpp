#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toricmirror/lattice.hpp"

namespace toricmirror {

/// Monomial q_1^{e_1} ... q_l^{e_l} in the Kahler parameters; exponents may be negative.
class QMonomial {
 public:
  QMonomial() = default;
  explicit QMonomial(std::vector<Int> exponents) : exponents_(std::move(exponents)) {}

  static QMonomial one(std::size_t l) { return QMonomial(std::vector<Int>(l, 0)); }
  static QMonomial generator(std::size_t l, std::size_t a);

  std::size_t size() const noexcept { return exponents_.size(); }
  Int operator[](std::size_t a) const { return exponents_[a]; }
  const std::vector<Int>& exponents() const noexcept { return exponents_; }
  bool is_one() const;

  QMonomial& operator*=(const QMonomial& other);
  friend QMonomial operator*(QMonomial a, const QMonomial& b) { return a *= b; }
  QMonomial inverse() const;
  QMonomial pow(Int e) const;

  double evaluate(std::span<const double> q) const;
  mpq_class evaluate(std::span<const mpq_class> q) const;

  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
  friend bool operator==(const QMonomial&, const QMonomial&) = default;

  /// "1", "q1", "q1^2*q2^-1", ...
  std::string to_string() const;

 private:
  std::vector<Int> exponents_;
};

/// Sparse Laurent polynomial in q_1..q_l with exact rational coefficients.
class QLaurent {
 public:
  using Terms = std::map<QMonomial, mpq_class>;

  QLaurent() = default;
  explicit QLaurent(std::size_t num_params) : num_params_(num_params) {}
  QLaurent(const QMonomial& m, const mpq_class& c = 1);
  static QLaurent constant(std::size_t num_params, const mpq_class& c);

  std::size_t num_params() const noexcept { return num_params_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coefficient(const QMonomial& m) const;

  void add_term(const QMonomial& m, const mpq_class& c);

  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const mpq_class& s);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(QLaurent a, const mpq_class& s) { return a *= s; }
  friend QLaurent operator*(const mpq_class& s, QLaurent a) { return a *= s; }
  QLaurent operator-() const;

  /// q_a d/dq_a applied termwise.
  QLaurent log_derivative(std::size_t a) const;

  double evaluate(std::span<const double> q) const;
  mpq_class evaluate(std::span<const mpq_class> q) const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::size_t num_params_ = 0;
  Terms terms_;
};

/// Parses a decimal or fraction string ("0.7", "-3/4", "2") into an exact rational.
mpq_class parse_rational(const std::string& text);
std::string rational_string(const mpq_class& value);

}  // namespace toricmirror
