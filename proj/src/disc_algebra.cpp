#include "toricmirror/disc_algebra.hpp"

#include <numeric>

#include "toricmirror/error.hpp"

namespace toricmirror {

namespace {

mpz_class factorial(Int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

QMonomial class_monomial(const DiscClass& k, const ToricFanoData& data) {
  QMonomial m = QMonomial::one(data.l());
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0) m *= data.lambda_monomial(i).pow(k[i]);
  return m;
}

void check_ray_index(const ToricFanoData& data, std::size_t i) {
  if (i >= data.d())
    throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i) + " with d = " + std::to_string(data.d()));
}

}  // namespace

QLaurent AdmissibleFunction::coefficient(const LatticePoint& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? QLaurent(l_) : it->second;
}

void AdmissibleFunction::add(const LatticePoint& v, const QLaurent& c) {
  if (v.size() != n_) throw Error(ErrorCode::InvalidArgument, "lattice point dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AdmissibleFunction& AdmissibleFunction::operator+=(const AdmissibleFunction& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  return *this;
}

AdmissibleFunction& AdmissibleFunction::operator*=(const QLaurent& s) {
  Terms scaled;
  for (const auto& [v, c] : terms_) {
    QLaurent p = c * s;
    if (!p.is_zero()) scaled.emplace(v, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

mpq_class DiscSeries::coefficient(const DiscClass& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void DiscSeries::add(const DiscClass& k, const mpq_class& c) {
  if (k.size() != d_) throw Error(ErrorCode::InvalidArgument, "disc class length mismatch");
  for (Int ki : k)
    if (ki < 0) throw Error(ErrorCode::InvalidArgument, "disc classes have nonnegative entries");
  if (total_degree(k) > truncation_order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DiscSeries& DiscSeries::operator+=(const DiscSeries& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

DiscSeries& DiscSeries::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Int total_degree(const DiscClass& k) { return std::accumulate(k.begin(), k.end(), Int{0}); }

AdmissibleFunction make_psi(const ToricFanoData& data, std::size_t i, int power) {
  check_ray_index(data, i);
  if (power != 1 && power != -1) throw Error(ErrorCode::InvalidArgument, "Psi power must be +1 or -1");
  AdmissibleFunction f(data.n(), data.l());
  if (power == 1)
    f.add(data.ray(i), QLaurent(data.lambda_monomial(i)));
  else
    f.add(-data.ray(i), QLaurent(data.lambda_monomial(i).inverse()));
  return f;
}

AdmissibleFunction unit(std::size_t n, std::size_t l) {
  AdmissibleFunction f(n, l);
  f.add(LatticePoint::zero(n), QLaurent::constant(l, 1));
  return f;
}

AdmissibleFunction convolve(const AdmissibleFunction& f, const AdmissibleFunction& g) {
  if (f.n() != g.n()) throw Error(ErrorCode::InvalidArgument, "convolution of functions on different lattices");
  AdmissibleFunction out(f.n(), std::max(f.l(), g.l()));
  for (const auto& [v1, c1] : f.terms())
    for (const auto& [v2, c2] : g.terms()) out.add(v1 + v2, c1 * c2);
  return out;
}

AdmissibleFunction convolution_power(const AdmissibleFunction& f, Int e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative convolution power");
  AdmissibleFunction result = unit(f.n(), f.l());
  for (Int k = 0; k < e; ++k) result = convolve(result, f);
  return result;
}

DiscSeries phi_truncated(const ToricFanoData& data, Int k_max) {
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  const std::size_t d = data.d();
  DiscSeries s(d, k_max);
  DiscClass k(d, 0);
  auto rec = [&](auto&& self, std::size_t i, Int remaining, const mpz_class& weight) -> void {
    if (i == d) {
      s.add(k, mpq_class(mpz_class(1), weight));
      return;
    }
    for (Int ki = 0; ki <= remaining; ++ki) {
      k[i] = ki;
      self(self, i + 1, remaining - ki, weight * factorial(ki));
    }
    k[i] = 0;
  };
  rec(rec, 0, k_max, mpz_class(1));
  return s;
}

AdmissibleFunction disc_to_admissible(const DiscSeries& s, const ToricFanoData& data) {
  if (s.d() != data.d()) throw Error(ErrorCode::InvalidArgument, "disc series does not match the toric data");
  AdmissibleFunction f(data.n(), data.l());
  for (const auto& [k, c] : s.terms()) f.add(data.boundary(k), QLaurent(class_monomial(k, data), c));
  return f;
}

DiscSeries q_log_derivative(const DiscSeries& s, std::size_t a, const ToricFanoData& data) {
  if (a >= data.l()) throw Error(ErrorCode::IndexOutOfRange, "Kahler parameter index " + std::to_string(a));
  DiscSeries out(s.d(), s.truncation_order());
  for (const auto& [k, c] : s.terms()) {
    const Int e = class_monomial(k, data)[a];
    out.add(k, c * mpq_class(static_cast<long>(e)));
  }
  return out;
}

DiscSeries convolve_psi(const DiscSeries& s, std::size_t i) {
  if (i >= s.d()) throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i));
  DiscSeries out(s.d(), s.truncation_order());
  for (const auto& [k, c] : s.terms()) {
    DiscClass shifted = k;
    ++shifted[i];
    out.add(shifted, c);
  }
  return out;
}

DiscSeries log_derivative_rhs(const DiscSeries& s, std::size_t a, const ToricFanoData& data) {
  if (a >= data.l()) throw Error(ErrorCode::IndexOutOfRange, "Kahler parameter index " + std::to_string(a));
  DiscSeries out(s.d(), s.truncation_order());
  for (std::size_t i = 0; i < data.d(); ++i) {
    const Int weight = data.lambda_monomial(i)[a];
    if (weight != 0) out += convolve_psi(s, i) * mpq_class(static_cast<long>(weight));
  }
  return out;
}

AdmissibleFunction psi_relation(const ToricFanoData& data, std::size_t a) {
  if (a >= data.l()) throw Error(ErrorCode::IndexOutOfRange, "Kahler parameter index " + std::to_string(a));
  AdmissibleFunction result = unit(data.n(), data.l());
  for (std::size_t i = 0; i < data.d(); ++i) {
    const Int e = data.kbasis()(i, a);
    if (e == 0) continue;
    result = convolve(result, convolution_power(make_psi(data, i, e > 0 ? 1 : -1), e > 0 ? e : -e));
  }
  return result;
}

}  // namespace toricmirror
