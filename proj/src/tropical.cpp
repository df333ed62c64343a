#include "toricmirror/tropical.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "toricmirror/error.hpp"

namespace toricmirror {

namespace {

// true when v = c w for some integer c > 0
bool positive_multiple(const LatticePoint& v, const LatticePoint& w) {
  if (v.size() != w.size() || w.is_zero()) return false;
  std::optional<Int> factor;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (w[j] == 0) {
      if (v[j] != 0) return false;
      continue;
    }
    if (v[j] % w[j] != 0) return false;
    const Int c = v[j] / w[j];
    if (c <= 0 || (factor && *factor != c)) return false;
    factor = c;
  }
  return true;
}

}  // namespace

TropicalDisc make_disc(const ToricFanoData& data, const RationalPoint& vertex, std::size_t i) {
  if (i >= data.d()) throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i));
  if (vertex.size() != data.n()) throw Error(ErrorCode::InvalidArgument, "vertex has the wrong dimension");
  return {vertex, data.ray(i)};
}

TropicalCurve glue_discs(const std::vector<TropicalDisc>& discs) {
  if (discs.empty()) throw Error(ErrorCode::InvalidArgument, "no discs to glue");
  TropicalCurve curve{discs.front().vertex, {}};
  LatticePoint total = LatticePoint::zero(discs.front().direction.size());
  for (const auto& disc : discs) {
    if (disc.vertex != curve.vertex) throw Error(ErrorCode::VertexMismatch, "discs do not share a vertex");
    if (disc.direction.size() != total.size()) throw Error(ErrorCode::InvalidArgument, "direction dimension mismatch");
    total += disc.direction;
    curve.edges.push_back(disc.direction);
  }
  if (!total.is_zero()) throw Error(ErrorCode::Unbalanced, "edge directions sum to " + total.to_string());
  return curve;
}

std::vector<Int> curve_degree(const TropicalCurve& curve, const ToricFanoData& data) {
  std::vector<Int> degree(data.d(), 0);
  for (const auto& e : curve.edges) {
    bool found = false;
    for (std::size_t i = 0; i < data.d() && !found; ++i)
      if (data.ray(i) == e) {
        ++degree[i];
        found = true;
      }
    if (!found) throw Error(ErrorCode::InvalidArgument, "edge direction " + e.to_string() + " is not a ray");
  }
  return degree;
}

std::vector<TropicalCurve> enumerate_tgw_curves(const ToricFanoData& data,
                                                const std::optional<ProductFactorization>& factorization,
                                                std::size_t a, const RationalPoint& xi) {
  if (!factorization)
    throw Error(ErrorCode::NotAProduct, "'" + data.name() + "' is not a product of projective spaces");
  if (a >= factorization->groups.size()) throw Error(ErrorCode::IndexOutOfRange, "factor index " + std::to_string(a));
  if (xi.size() != data.n()) throw Error(ErrorCode::InvalidArgument, "xi has the wrong dimension");

  const auto& marked = factorization->groups[a];
  std::vector<std::vector<std::size_t>> candidates;
  for (auto j : marked) {
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < data.d(); ++i)
      if (positive_multiple(data.ray(i), data.ray(j))) options.push_back(i);
    candidates.push_back(std::move(options));
  }

  std::vector<TropicalCurve> curves;
  std::vector<std::size_t> choice(marked.size(), 0);
  while (true) {
    std::vector<TropicalDisc> discs;
    for (std::size_t k = 0; k < marked.size(); ++k) discs.push_back(make_disc(data, xi, candidates[k][choice[k]]));
    try {
      curves.push_back(glue_discs(discs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unbalanced) throw;
    }
    std::size_t k = 0;
    while (k < marked.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == marked.size()) break;
  }
  return curves;
}

Int count_tgw(const ToricFanoData& data, const std::optional<ProductFactorization>& factorization, std::size_t a,
              const RationalPoint& xi) {
  return static_cast<Int>(enumerate_tgw_curves(data, factorization, a, xi).size());
}

std::vector<double> log_map(const std::vector<std::complex<double>>& w) {
  std::vector<double> out;
  for (const auto& wj : w) {
    if (wj == std::complex<double>(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "log of a zero coordinate");
    out.push_back(std::log(std::abs(wj)));
  }
  return out;
}

std::string curve_svg(const TropicalCurve& curve) {
  const std::size_t n = curve.vertex.size();
  // image of the j-th coordinate direction in the plane
  std::vector<std::pair<double, double>> axes;
  for (std::size_t j = 0; j < n; ++j) {
    if (n <= 2) {
      axes.emplace_back(j == 0 ? 1.0 : 0.0, j == 1 ? 1.0 : 0.0);
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      axes.emplace_back(std::cos(angle), std::sin(angle));
    }
  }
  auto project = [&](auto coord) {
    double x = 0.0, y = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      x += coord(j) * axes[j].first;
      y += coord(j) * axes[j].second;
    }
    return std::pair{x, y};
  };

  constexpr double size = 400.0, scale = 40.0, reach = 8.0;
  const auto [vx, vy] = project([&](std::size_t j) { return curve.vertex[j].get_d(); });
  auto screen = [&](double x, double y) {
    return std::pair{size / 2 + scale * (x - vx), size / 2 - scale * (y - vy)};
  };

  std::ostringstream os;
  os << std::setprecision(6);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const auto [cx, cy] = screen(vx, vy);
  for (const auto& e : curve.edges) {
    const auto [dx, dy] = project([&](std::size_t j) { return static_cast<double>(e[j]); });
    const double norm = std::hypot(dx, dy);
    const double t = norm > 0 ? reach / norm : 0.0;
    const auto [ex, ey] = screen(vx + t * dx, vy + t * dy);
    os << "  <line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << ex << "\" y2=\"" << ey
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n"
       << "  <text x=\"" << ex << "\" y=\"" << ey << "\" font-size=\"12\">" << e.to_string() << "</text>\n";
  }
  os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"red\"/>\n</svg>\n";
  return os.str();
}

}  // namespace toricmirror
