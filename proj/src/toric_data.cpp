#include "toricmirror/toric_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "toricmirror/error.hpp"
#include "toricmirror/rational_matrix.hpp"

namespace toricmirror {

namespace {

IntMatrix ray_matrix(const std::vector<LatticePoint>& rays) {
  std::vector<std::vector<Int>> cols;
  cols.reserve(rays.size());
  for (const auto& r : rays) cols.push_back(r.coords());
  return IntMatrix::from_columns(cols, rays.front().size());
}

ColumnReduction spanning_reduction(const std::vector<LatticePoint>& rays) {
  if (rays.empty()) throw Error(ErrorCode::InvalidArgument, "no rays given");
  const std::size_t n = rays.front().size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rays must have positive dimension");
  for (const auto& r : rays)
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "rays have inconsistent dimensions");
  ColumnReduction red = column_reduce(ray_matrix(rays));
  if (red.rank < n) throw Error(ErrorCode::NonSpanningRays, "rays span a sublattice of lower rank");
  for (std::size_t j = 0; j < n; ++j)
    if (red.hermite(j, j) != 1)
      throw Error(ErrorCode::NonSpanningRays, "rays span a proper finite-index sublattice of Z^n");
  return red;
}

// Kernel columns of the reduction, in row-Hermite form (no trailing-block normalization).
IntMatrix hermite_kernel(const std::vector<LatticePoint>& rays) {
  const ColumnReduction red = spanning_reduction(rays);
  const std::size_t n = rays.front().size();
  const std::size_t d = rays.size();
  const std::size_t l = d - n;
  if (l == 0) return IntMatrix(d, 0);
  IntMatrix kt(l, d);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t i = 0; i < d; ++i) kt(a, i) = red.unimodular(i, n + a);
  return row_hermite_form(kt).transpose();
}

IntMatrix lambda_matrix(const std::vector<QMonomial>& lambda, std::size_t l) {
  IntMatrix m(lambda.size(), l);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].size() != l)
      throw Error(ErrorCode::InconsistentLambda, "lambda monomial " + std::to_string(i + 1) + " has " +
                                                     std::to_string(lambda[i].size()) + " exponents, expected " +
                                                     std::to_string(l));
    for (std::size_t a = 0; a < l; ++a) m(i, a) = lambda[i][a];
  }
  return m;
}

std::vector<QMonomial> monomials_from_matrix(const IntMatrix& m) {
  std::vector<QMonomial> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i));
  return out;
}

// All k-subsets of {0..d-1}, each sorted ascending.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Formal lambda with Q^T Lambda = I, supported on one unimodular row block of Q when possible.
IntMatrix default_lambda(const IntMatrix& q) {
  const std::size_t d = q.rows();
  const std::size_t l = q.cols();
  auto combos = subsets(d, l);
  // prefer later rays: compare index tuples from the largest element down
  std::sort(combos.begin(), combos.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
  });
  for (const auto& s : combos) {
    auto inv = unimodular_inverse(q.select_rows(s));
    if (!inv) continue;
    const IntMatrix block = inv->transpose();
    IntMatrix lambda(d, l);
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t a = 0; a < l; ++a) lambda(s[r], a) = block(r, a);
    return lambda;
  }
  // Q^T U = [H 0] with H unimodular because the columns of Q are saturated.
  const ColumnReduction red = column_reduce(q.transpose());
  IntMatrix u_head(d, l);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < l; ++a) u_head(i, a) = red.unimodular(i, a);
  auto hinv = unimodular_inverse(red.hermite);
  if (!hinv) throw Error(ErrorCode::BasisNotKernel, "kernel basis is not saturated");
  return u_head * *hinv;
}

void check_consistency(const IntMatrix& q, const IntMatrix& lambda) {
  const IntMatrix product = q.transpose() * lambda;
  if (product != IntMatrix::identity(q.cols()))
    throw Error(ErrorCode::InconsistentLambda,
                "prod_i (e^lambda_i)^Q_ia does not reproduce q_a for every a");
}

mpq_class exact(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite lambda value");
  return mpq_class(v);
}

std::vector<mpq_class> exact_lambda(const ToricFanoData& data, const std::vector<double>& lambda) {
  if (lambda.size() != data.d())
    throw Error(ErrorCode::InvalidArgument, "lambda must have one entry per ray");
  std::vector<mpq_class> out;
  out.reserve(lambda.size());
  for (double v : lambda) out.push_back(exact(v));
  return out;
}

mpq_class pairing(const RationalPoint& x, const LatticePoint& v) {
  mpq_class s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += x[j] * mpq_class(static_cast<long>(v[j]));
  return s;
}

void check_bounded(const ToricFanoData& data) {
  const std::size_t n = data.n();
  for (const auto& t : subsets(data.d(), n - 1)) {
    RationalMatrix m(t.size(), n);
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) m(r, j) = static_cast<long>(data.ray(t[r])[j]);
    const auto ns = null_space(m);
    if (ns.size() != 1) continue;
    for (int sign : {1, -1}) {
      bool recedes = true;
      for (const auto& v : data.rays()) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < n; ++j) s += ns[0][j] * mpq_class(static_cast<long>(v[j]));
        if (sign * sgn(s) < 0) {
          recedes = false;
          break;
        }
      }
      if (recedes) throw Error(ErrorCode::UnboundedPolytope, "polytope has a nonzero recession direction");
    }
  }
}

}  // namespace

LatticePoint ToricFanoData::boundary(const std::vector<Int>& k) const {
  if (k.size() != d()) throw Error(ErrorCode::InvalidArgument, "disc class must have one entry per ray");
  LatticePoint v = LatticePoint::zero(n_);
  for (std::size_t i = 0; i < d(); ++i)
    if (k[i] != 0) v += k[i] * rays_[i];
  return v;
}

IntMatrix kernel_basis(const std::vector<LatticePoint>& rays) {
  IntMatrix k = hermite_kernel(rays);
  const std::size_t d = rays.size();
  const std::size_t l = k.cols();
  if (l == 0) return k;
  std::vector<std::size_t> tail(l);
  for (std::size_t a = 0; a < l; ++a) tail[a] = d - l + a;
  if (auto inv = unimodular_inverse(k.select_rows(tail))) k = k * *inv;
  return k;
}

std::vector<Int> boundary_preimage(const std::vector<LatticePoint>& rays, const LatticePoint& target) {
  const ColumnReduction red = spanning_reduction(rays);
  const std::size_t n = rays.front().size();
  if (target.size() != n) throw Error(ErrorCode::InvalidArgument, "target dimension mismatch");
  // H y = target by forward substitution (unit diagonal), then m = U[:, :n] y
  std::vector<Int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int rhs = target[i];
    for (std::size_t k = 0; k < i; ++k) rhs -= red.hermite(i, k) * y[k];
    y[i] = rhs;
  }
  std::vector<Int> m(rays.size(), 0);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) m[i] += red.unimodular(i, k) * y[k];
  return m;
}

ToricFanoData build_toric_data(std::vector<LatticePoint> rays, std::optional<std::vector<QMonomial>> lambda_monomials,
                               std::optional<IntMatrix> kbasis, std::optional<std::vector<double>> lambda_numeric,
                               std::string name) {
  if (rays.empty()) throw Error(ErrorCode::InvalidArgument, "no rays given");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].content() != 1)
      throw Error(ErrorCode::NonPrimitiveRay, "ray " + std::to_string(i + 1) + " " + rays[i].to_string() +
                                                  " is zero or not primitive");
  spanning_reduction(rays);

  const std::size_t n = rays.front().size();
  const std::size_t d = rays.size();
  const std::size_t l = d - n;
  const IntMatrix boundary_map = ray_matrix(rays);

  IntMatrix q;
  if (kbasis) {
    if (kbasis->rows() != d || kbasis->cols() != l)
      throw Error(ErrorCode::BasisNotKernel, "kbasis must be " + std::to_string(d) + " x " + std::to_string(l));
    if (boundary_map * *kbasis != IntMatrix(n, l))
      throw Error(ErrorCode::BasisNotKernel, "a kbasis column is not in the kernel of the boundary map");
    const auto inv = smith_invariants(*kbasis);
    if (inv.size() != l || std::any_of(inv.begin(), inv.end(), [](const mpz_class& x) { return x != 1; }))
      throw Error(ErrorCode::BasisNotKernel, "kbasis columns do not form a Z-basis of the kernel");
    q = *kbasis;
  } else if (lambda_monomials) {
    if (lambda_monomials->size() != d)
      throw Error(ErrorCode::InconsistentLambda, "need one lambda monomial per ray");
    const IntMatrix k = hermite_kernel(rays);
    const IntMatrix m = k.transpose() * lambda_matrix(*lambda_monomials, l);
    auto inv = unimodular_inverse(m);
    if (!inv) throw Error(ErrorCode::InconsistentLambda, "no kernel basis is consistent with the lambda monomials");
    q = k * inv->transpose();
  } else {
    q = kernel_basis(rays);
  }

  IntMatrix lambda;
  if (lambda_monomials) {
    if (lambda_monomials->size() != d)
      throw Error(ErrorCode::InconsistentLambda, "need one lambda monomial per ray");
    lambda = lambda_matrix(*lambda_monomials, l);
    check_consistency(q, lambda);
  } else {
    lambda = default_lambda(q);
    check_consistency(q, lambda);
  }

  if (lambda_numeric) {
    if (lambda_numeric->size() != d) throw Error(ErrorCode::InvalidArgument, "lambda_numeric must have d entries");
    for (double v : *lambda_numeric)
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "lambda_numeric entries must be finite");
  }

  ToricFanoData data;
  data.name_ = std::move(name);
  data.n_ = n;
  data.rays_ = std::move(rays);
  data.kbasis_ = std::move(q);
  data.lambda_monomials_ = monomials_from_matrix(lambda);
  data.lambda_numeric_ = std::move(lambda_numeric);
  return data;
}

std::vector<double> kahler_params(const ToricFanoData& data, const std::vector<double>& lambda_numeric) {
  if (lambda_numeric.size() != data.d()) throw Error(ErrorCode::InvalidArgument, "lambda must have d entries");
  std::vector<double> q(data.l());
  for (std::size_t a = 0; a < data.l(); ++a) {
    double r = 0.0;
    for (std::size_t i = 0; i < data.d(); ++i) r -= static_cast<double>(data.kbasis()(i, a)) * lambda_numeric[i];
    q[a] = std::exp(-r);
  }
  return q;
}

std::vector<double> lambda_from_q(const ToricFanoData& data, const std::vector<double>& q) {
  if (q.size() != data.l()) throw Error(ErrorCode::InvalidArgument, "need one value per Kahler parameter");
  std::vector<double> lambda(data.d(), 0.0);
  for (std::size_t i = 0; i < data.d(); ++i)
    for (std::size_t a = 0; a < data.l(); ++a) {
      if (!(q[a] > 0)) throw Error(ErrorCode::InvalidArgument, "Kahler parameters must be positive");
      lambda[i] += static_cast<double>(data.lambda_monomial(i)[a]) * std::log(q[a]);
    }
  return lambda;
}

std::vector<double> anticanonical_lambda(const ToricFanoData& data) { return std::vector<double>(data.d(), -1.0); }

std::vector<RationalPoint> polytope_vertices(const ToricFanoData& data, const std::vector<double>& lambda_numeric) {
  const std::vector<mpq_class> lambda = exact_lambda(data, lambda_numeric);
  const std::size_t n = data.n();
  check_bounded(data);

  std::set<RationalPoint> found;
  for (const auto& s : subsets(data.d(), n)) {
    RationalMatrix a(n, n);
    std::vector<mpq_class> b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) a(r, j) = static_cast<long>(data.ray(s[r])[j]);
      b[r] = lambda[s[r]];
    }
    auto x = solve_exact(a, b);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < data.d() && feasible; ++i) feasible = pairing(*x, data.ray(i)) >= lambda[i];
    if (feasible) found.insert(*x);
  }
  if (found.empty()) throw Error(ErrorCode::DegeneratePolytope, "polytope is empty");

  RationalPoint centroid(n, mpq_class(0));
  for (const auto& v : found)
    for (std::size_t j = 0; j < n; ++j) centroid[j] += v[j];
  for (auto& c : centroid) c /= mpq_class(static_cast<long>(found.size()));
  for (std::size_t i = 0; i < data.d(); ++i)
    if (pairing(centroid, data.ray(i)) <= lambda[i])
      throw Error(ErrorCode::DegeneratePolytope, "polytope has empty interior");
  return {found.begin(), found.end()};
}

double disc_area(const ToricFanoData& data, const std::vector<double>& x, std::size_t i,
                 const std::vector<double>& lambda_numeric) {
  if (i >= data.d()) throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i));
  if (x.size() != data.n()) throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
  if (lambda_numeric.size() != data.d()) throw Error(ErrorCode::InvalidArgument, "lambda must have d entries");
  auto slack = [&](std::size_t j) {
    double s = -lambda_numeric[j];
    for (std::size_t c = 0; c < data.n(); ++c) s += x[c] * static_cast<double>(data.ray(j)[c]);
    return s;
  };
  for (std::size_t j = 0; j < data.d(); ++j)
    if (!(slack(j) > 0.0))
      throw Error(ErrorCode::PointOutsidePolytope, "x is not in the open polytope (facet " + std::to_string(j + 1) + ")");
  return 2.0 * std::numbers::pi * slack(i);
}

}  // namespace toricmirror
