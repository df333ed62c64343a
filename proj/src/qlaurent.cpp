#include "toricmirror/qlaurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toricmirror/error.hpp"

namespace toricmirror {

namespace {

mpq_class rational_pow(const mpq_class& base, Int e) {
  mpq_class result = 1;
  if (e == 0) return result;
  if (base == 0) throw Error(ErrorCode::InvalidArgument, "zero Kahler parameter raised to a power");
  mpq_class b = e > 0 ? base : mpq_class(1) / base;
  Int k = e > 0 ? e : -e;
  while (k > 0) {
    if (k & 1) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

}  // namespace

QMonomial QMonomial::generator(std::size_t l, std::size_t a) {
  QMonomial m = one(l);
  m.exponents_.at(a) = 1;
  return m;
}

bool QMonomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Int e) { return e == 0; });
}

QMonomial& QMonomial::operator*=(const QMonomial& other) {
  if (other.size() != size()) throw Error(ErrorCode::InvalidArgument, "q-monomial length mismatch");
  for (std::size_t a = 0; a < exponents_.size(); ++a) exponents_[a] += other.exponents_[a];
  return *this;
}

QMonomial QMonomial::inverse() const { return pow(-1); }

QMonomial QMonomial::pow(Int e) const {
  QMonomial r = *this;
  for (auto& x : r.exponents_) x *= e;
  return r;
}

double QMonomial::evaluate(std::span<const double> q) const {
  if (q.size() != size()) throw Error(ErrorCode::InvalidArgument, "wrong number of Kahler parameters");
  double v = 1.0;
  for (std::size_t a = 0; a < size(); ++a)
    if (exponents_[a] != 0) v *= std::pow(q[a], static_cast<double>(exponents_[a]));
  return v;
}

mpq_class QMonomial::evaluate(std::span<const mpq_class> q) const {
  if (q.size() != size()) throw Error(ErrorCode::InvalidArgument, "wrong number of Kahler parameters");
  mpq_class v = 1;
  for (std::size_t a = 0; a < size(); ++a) v *= rational_pow(q[a], exponents_[a]);
  return v;
}

std::string QMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < size(); ++a) {
    if (exponents_[a] == 0) continue;
    os << (first ? "" : "*") << 'q' << (a + 1);
    if (exponents_[a] != 1) os << '^' << exponents_[a];
    first = false;
  }
  return first ? "1" : os.str();
}

QLaurent::QLaurent(const QMonomial& m, const mpq_class& c) : num_params_(m.size()) { add_term(m, c); }

QLaurent QLaurent::constant(std::size_t num_params, const mpq_class& c) {
  return QLaurent(QMonomial::one(num_params), c);
}

mpq_class QLaurent::coefficient(const QMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void QLaurent::add_term(const QMonomial& m, const mpq_class& c) {
  if (m.size() != num_params_) throw Error(ErrorCode::InvalidArgument, "q-monomial length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  if (terms_.empty() && num_params_ == 0) num_params_ = other.num_params_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
  if (terms_.empty() && num_params_ == 0) num_params_ = other.num_params_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out(std::max(a.num_params_, b.num_params_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

QLaurent QLaurent::log_derivative(std::size_t a) const {
  if (a >= num_params_) throw Error(ErrorCode::IndexOutOfRange, "Kahler parameter index");
  QLaurent out(num_params_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * mpq_class(static_cast<long>(m[a])));
  return out;
}

double QLaurent::evaluate(std::span<const double> q) const {
  double v = 0.0;
  for (const auto& [m, c] : terms_) v += c.get_d() * m.evaluate(q);
  return v;
}

mpq_class QLaurent::evaluate(std::span<const mpq_class> q) const {
  mpq_class v = 0;
  for (const auto& [m, c] : terms_) v += c * m.evaluate(q);
  return v;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  try {
    if (text.find('/') != std::string::npos) {
      mpq_class v(text, 10);
      v.canonicalize();
      if (v.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
      return v;
    }
    std::string digits = text;
    bool negative = false;
    if (digits[0] == '-' || digits[0] == '+') {
      negative = digits[0] == '-';
      digits.erase(0, 1);
    }
    const auto dot = digits.find('.');
    mpz_class den = 1;
    if (dot != std::string::npos) {
      const std::size_t frac = digits.size() - dot - 1;
      digits.erase(dot, 1);
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw Error(ErrorCode::ParseError, "not a decimal number: '" + text + "'");
    mpq_class v{mpz_class(digits, 10), den};
    v.canonicalize();
    return negative ? mpq_class(-v) : v;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

std::string rational_string(const mpq_class& value) { return value.get_str(); }

}  // namespace toricmirror
