#include "toricmirror/lg_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "toricmirror/error.hpp"

namespace toricmirror {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Vec = Eigen::VectorXcd;

struct NumericSystem {
  std::vector<LatticePoint> rays;
  std::vector<double> coeffs;

  // Z_i = c_i exp(<v_i, u>)
  Vec monomials(const Vec& u) const {
    Vec m(static_cast<Eigen::Index>(rays.size()));
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::complex<double> e = 0.0;
      for (std::size_t j = 0; j < rays[i].size(); ++j)
        e += static_cast<double>(rays[i][j]) * u(static_cast<Eigen::Index>(j));
      m(static_cast<Eigen::Index>(i)) = coeffs[i] * std::exp(e);
    }
    return m;
  }

  Vec residual(const Vec& m, Eigen::Index n) const {
    Vec f = Vec::Zero(n);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        f(j) += static_cast<double>(rays[i][static_cast<std::size_t>(j)]) * m(static_cast<Eigen::Index>(i));
    return f;
  }

  Eigen::MatrixXcd jacobian(const Vec& m, Eigen::Index n) const {
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
          jac(j, k) += static_cast<double>(rays[i][static_cast<std::size_t>(j)] * rays[i][static_cast<std::size_t>(k)]) *
                       m(static_cast<Eigen::Index>(i));
    return jac;
  }
};

double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

std::optional<Vec> newton(const NumericSystem& sys, Vec u, const CriticalPointConfig& config) {
  const Eigen::Index n = u.size();
  for (int iter = 0; iter <= config.max_iter; ++iter) {
    const Vec m = sys.monomials(u);
    const Vec f = sys.residual(m, n);
    const double res = max_abs(f);
    if (!std::isfinite(res)) return std::nullopt;
    if (res <= config.tol * std::max(1.0, max_abs(m))) return u;
    if (iter == config.max_iter) break;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.jacobian(m, n));
    if (!std::isfinite(std::abs(lu.determinant())) || std::abs(lu.determinant()) < 1e-300) return std::nullopt;
    const Vec step = lu.solve(f);
    double scale = 1.0;
    Vec next = u - step;
    for (int halvings = 0; halvings < 8; ++halvings) {
      const double next_res = max_abs(sys.residual(sys.monomials(next), n));
      if (std::isfinite(next_res) && next_res < res) break;
      scale *= 0.5;
      next = u - scale * step;
    }
    u = next;
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(u(j).real()) > 60.0) return std::nullopt;
  }
  return std::nullopt;
}

double wrapped_angle_distance(double a, double b) {
  double diff = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(diff, kTwoPi - diff);
}

double log_distance(const ComplexVector& a, const ComplexVector& b) {
  double dist = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    dist = std::max({dist, std::abs(a[j].real() - b[j].real()), wrapped_angle_distance(a[j].imag(), b[j].imag())});
  return dist;
}

}  // namespace

std::complex<double> Superpotential::evaluate(const ComplexVector& z, const std::vector<double>& q) const {
  return series.evaluate(z, q);
}

Superpotential superpotential(const ToricFanoData& data) {
  Superpotential w{{}, {}, LaurentSeriesZ(data.n(), data.l())};
  for (std::size_t i = 0; i < data.d(); ++i) {
    w.exponents.push_back(data.ray(i));
    w.coefficients.push_back(data.lambda_monomial(i));
    w.series += ray_monomial(data, i);
  }
  return w;
}

std::vector<LaurentSeriesZ> jacobian_generators(const Superpotential& w) {
  std::vector<LaurentSeriesZ> gens;
  for (std::size_t j = 0; j < w.n(); ++j) gens.push_back(w.series.log_derivative(j));
  return gens;
}

bool domain_membership(const ToricFanoData& data, const ComplexVector& z, const std::vector<double>& q) {
  if (z.size() != data.n()) throw Error(ErrorCode::InvalidArgument, "wrong number of z coordinates");
  for (const auto& zj : z)
    if (zj == std::complex<double>(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "z has a zero coordinate");
  for (std::size_t i = 0; i < data.d(); ++i) {
    double modulus = data.lambda_monomial(i).evaluate(q);
    for (std::size_t j = 0; j < data.n(); ++j)
      if (data.ray(i)[j] != 0) modulus *= std::pow(std::abs(z[j]), static_cast<double>(data.ray(i)[j]));
    if (!(modulus < 1.0)) return false;
  }
  return true;
}

std::size_t expected_critical_count(const ToricFanoData& data) {
  return polytope_vertices(data, anticanonical_lambda(data)).size();
}

CriticalPointSet critical_points(const Superpotential& w, const std::vector<double>& q,
                                 const CriticalPointConfig& config) {
  if (config.expected_count == 0) throw Error(ErrorCode::InvalidArgument, "expected_count is required");
  for (double qa : q)
    if (!(qa > 0)) throw Error(ErrorCode::InvalidArgument, "Kahler parameters must be positive");

  NumericSystem sys{w.exponents, {}};
  for (const auto& c : w.coefficients) sys.coeffs.push_back(c.evaluate(q));

  const std::size_t n = w.n();
  const std::size_t starts = config.starts ? config.starts : 50 * config.expected_count;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> re_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> im_dist(0.0, kTwoPi);
  std::vector<Vec> initial(starts, Vec(static_cast<Eigen::Index>(n)));
  for (auto& u : initial)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = re_dist(rng);
      const double im = im_dist(rng);
      u(static_cast<Eigen::Index>(j)) = {re, im};
    }

  std::vector<std::optional<Vec>> solved(starts);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t s = t; s < starts; s += workers) solved[s] = newton(sys, initial[s], config);
      });
  }

  CriticalPointSet out;
  out.starts = starts;
  for (const auto& u : solved) {
    if (!u) {
      ++out.failed_starts;
      continue;
    }
    ComplexVector log_point(n);
    for (std::size_t j = 0; j < n; ++j) {
      double im = std::fmod((*u)(static_cast<Eigen::Index>(j)).imag(), kTwoPi);
      if (im < 0) im += kTwoPi;
      log_point[j] = {(*u)(static_cast<Eigen::Index>(j)).real(), im};
    }
    const bool duplicate = std::any_of(out.log_points.begin(), out.log_points.end(), [&](const ComplexVector& p) {
      return log_distance(p, log_point) < config.dedup_tol;
    });
    if (duplicate) continue;

    const Vec m = sys.monomials(*u);
    const Vec f = sys.residual(m, static_cast<Eigen::Index>(n));
    ComplexVector z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = std::exp((*u)(static_cast<Eigen::Index>(j)));
    out.log_points.push_back(std::move(log_point));
    out.points.push_back(z);
    out.values.push_back(m.sum());
    out.monomial_values.emplace_back(m.data(), m.data() + m.size());
    out.residuals.push_back(max_abs(f));
  }

  if (out.points.size() < config.expected_count)
    throw Error(ErrorCode::IncompleteRootSet, "found " + std::to_string(out.points.size()) + " of " +
                                                  std::to_string(config.expected_count) + " critical points after " +
                                                  std::to_string(starts) + " starts");
  if (out.points.size() > config.expected_count)
    throw Error(ErrorCode::RootCountMismatch, "found " + std::to_string(out.points.size()) +
                                                  " distinct critical points, expected " +
                                                  std::to_string(config.expected_count));

  for (std::size_t a = 0; a < out.log_points.size(); ++a)
    for (std::size_t b = a + 1; b < out.log_points.size(); ++b)
      if (log_distance(out.log_points[a], out.log_points[b]) < 10.0 * config.dedup_tol) out.degenerate_spectrum = true;
  return out;
}

std::vector<std::complex<double>> evaluate_at_critical(const LaurentSeriesZ& phi, const CriticalPointSet& cps,
                                                      const std::vector<double>& q) {
  std::vector<std::complex<double>> values;
  values.reserve(cps.points.size());
  for (const auto& z : cps.points) values.push_back(phi.evaluate(z, q));
  return values;
}

}  // namespace toricmirror
