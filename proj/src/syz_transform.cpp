#include "toricmirror/syz_transform.hpp"

#include <sstream>

#include "toricmirror/error.hpp"

namespace toricmirror {

LaurentSeriesZ LaurentSeriesZ::monomial(const LatticePoint& w, const QLaurent& c) {
  LaurentSeriesZ s(w.size(), c.num_params());
  s.add(w, c);
  return s;
}

LaurentSeriesZ LaurentSeriesZ::constant(std::size_t n, std::size_t l, const mpq_class& c) {
  LaurentSeriesZ s(n, l);
  s.add(LatticePoint::zero(n), QLaurent::constant(l, c));
  return s;
}

QLaurent LaurentSeriesZ::coefficient(const LatticePoint& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QLaurent(l_) : it->second;
}

void LaurentSeriesZ::add(const LatticePoint& w, const QLaurent& c) {
  if (w.size() != n_) throw Error(ErrorCode::InvalidArgument, "z-exponent dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentSeriesZ& LaurentSeriesZ::operator+=(const LaurentSeriesZ& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

LaurentSeriesZ& LaurentSeriesZ::operator-=(const LaurentSeriesZ& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

LaurentSeriesZ& LaurentSeriesZ::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

LaurentSeriesZ operator*(const LaurentSeriesZ& a, const LaurentSeriesZ& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "product of Laurent objects in different ranks");
  LaurentSeriesZ out(a.n_, std::max(a.l_, b.l_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

LaurentSeriesZ LaurentSeriesZ::log_derivative(std::size_t j) const {
  if (j >= n_) throw Error(ErrorCode::IndexOutOfRange, "coordinate index " + std::to_string(j));
  LaurentSeriesZ out(n_, l_);
  for (const auto& [w, c] : terms_) out.add(w, c * mpq_class(static_cast<long>(w[j])));
  return out;
}

std::complex<double> LaurentSeriesZ::evaluate(std::span<const std::complex<double>> z,
                                              std::span<const double> q) const {
  if (z.size() != n_) throw Error(ErrorCode::InvalidArgument, "wrong number of z coordinates");
  for (const auto& zj : z)
    if (zj == std::complex<double>(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "z has a zero coordinate");
  std::complex<double> total = 0.0;
  for (const auto& [w, c] : terms_) {
    std::complex<double> term = c.evaluate(q);
    for (std::size_t j = 0; j < n_; ++j)
      if (w[j] != 0) term *= std::pow(z[j], static_cast<int>(w[j]));
    total += term;
  }
  return total;
}

std::string LaurentSeriesZ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << '(' << c.to_string() << ')';
    for (std::size_t j = 0; j < n_; ++j) {
      if (w[j] == 0) continue;
      os << "*z" << (j + 1);
      if (w[j] != 1) os << '^' << w[j];
    }
    first = false;
  }
  return os.str();
}

LaurentSeriesZ ray_monomial(const ToricFanoData& data, std::size_t i) {
  if (i >= data.d()) throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i));
  return LaurentSeriesZ::monomial(data.ray(i), QLaurent(data.lambda_monomial(i)));
}

LaurentSeriesZ transform(const AdmissibleFunction& f) {
  LaurentSeriesZ out(f.n(), f.l());
  for (const auto& [v, c] : f.terms()) out.add(v, c);
  return out;
}

AdmissibleFunction inverse_transform(const LaurentSeriesZ& phi) {
  AdmissibleFunction out(phi.n(), phi.l());
  for (const auto& [w, c] : phi.terms()) out.add(w, c);
  return out;
}

LaurentSeriesZ exp_superpotential_truncated(const ToricFanoData& data, Int k_max) {
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  LaurentSeriesZ w(data.n(), data.l());
  for (std::size_t i = 0; i < data.d(); ++i) w += ray_monomial(data, i);

  LaurentSeriesZ total = LaurentSeriesZ::constant(data.n(), data.l(), 1);
  LaurentSeriesZ power = total;  // W^m / m!
  for (Int m = 1; m <= k_max; ++m) {
    power = power * w;
    power *= mpq_class(1, static_cast<unsigned long>(m));
    total += power;
  }
  total.set_truncation_order(k_max);
  return total;
}

}  // namespace toricmirror
