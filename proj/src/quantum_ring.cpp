#include "toricmirror/quantum_ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "toricmirror/error.hpp"
#include "toricmirror/fixtures.hpp"

namespace toricmirror {

namespace {

// Polynomial in the free variables with rational coefficients.
using Poly = std::map<DivisorExponent, mpq_class>;

void poly_add(Poly& p, const DivisorExponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      DivisorExponent e(ea.size());
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      poly_add(out, e, ca * cb);
    }
  return out;
}

Int degree_of(const DivisorExponent& e) { return std::accumulate(e.begin(), e.end(), Int{0}); }

// true when a > b in graded reverse lexicographic order
bool grevlex_greater(const DivisorExponent& a, const DivisorExponent& b) {
  const Int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  for (std::size_t t = a.size(); t-- > 0;)
    if (a[t] != b[t]) return a[t] < b[t];
  return false;
}

std::vector<DivisorExponent> monomials_up_to(std::size_t vars, Int max_degree) {
  std::vector<DivisorExponent> out;
  DivisorExponent cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t t, Int remaining) -> void {
    if (t == vars) {
      out.push_back(cur);
      return;
    }
    for (Int e = 0; e <= remaining; ++e) {
      cur[t] = e;
      self(self, t + 1, remaining - e);
    }
    cur[t] = 0;
  };
  if (max_degree >= 0) rec(rec, 0, max_degree);
  return out;
}

mpq_class specialize(const QLaurent& c, const std::vector<mpq_class>& q) {
  if (c.num_params() != q.size() && !c.is_zero())
    throw Error(ErrorCode::ClassNotReducible, "coefficient has the wrong number of Kahler parameters");
  return c.is_zero() ? mpq_class(0) : c.evaluate(std::span<const mpq_class>(q));
}

struct LinearElimination {
  std::vector<std::size_t> free_vars;
  std::vector<std::vector<mpq_class>> substitution;
};

LinearElimination eliminate_linear(const RingPresentation& pres, const std::vector<mpq_class>& q) {
  const std::size_t d = pres.d;
  RationalMatrix lin(pres.linear_gens.size(), d);
  for (std::size_t r = 0; r < pres.linear_gens.size(); ++r) {
    const auto& g = pres.linear_gens[r];
    if (!g.is_homogeneous_linear())
      throw Error(ErrorCode::InvalidArgument, "linear generator " + g.to_string() + " is not homogeneous of degree 1");
    for (const auto& [e, c] : g.terms()) {
      const auto it = std::find(e.begin(), e.end(), 1);
      lin(r, static_cast<std::size_t>(it - e.begin())) += specialize(c, q);
    }
  }
  const RowEchelon ech = reduced_row_echelon(lin);
  std::vector<bool> is_pivot(d, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  LinearElimination out;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_pivot[i]) out.free_vars.push_back(i);
  const std::size_t k = out.free_vars.size();
  out.substitution.assign(d, std::vector<mpq_class>(k, mpq_class(0)));
  for (std::size_t t = 0; t < k; ++t) out.substitution[out.free_vars[t]][t] = 1;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    for (std::size_t t = 0; t < k; ++t) out.substitution[ech.pivots[r]][t] = -ech.reduced(r, out.free_vars[t]);
  return out;
}

Poly reduce_to_free(const DivisorPolynomial& p, const LinearElimination& elim, const std::vector<mpq_class>& q) {
  const std::size_t k = elim.free_vars.size();
  std::vector<Poly> linear_forms(elim.substitution.size());
  for (std::size_t i = 0; i < elim.substitution.size(); ++i)
    for (std::size_t t = 0; t < k; ++t) {
      DivisorExponent e(k, 0);
      e[t] = 1;
      poly_add(linear_forms[i], e, elim.substitution[i][t]);
    }
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Poly term;
    term[DivisorExponent(k, 0)] = specialize(c, q);
    if (term.begin()->second == 0) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (Int power = 0; power < e[i]; ++power) term = poly_mul(term, linear_forms[i]);
    for (const auto& [te, tc] : term) poly_add(out, te, tc);
  }
  return out;
}

struct MacaulayResult {
  std::vector<DivisorExponent> basis;
  std::vector<RationalMatrix> variable_matrices;
};

MacaulayResult macaulay_quotient(const std::vector<Poly>& gens, std::size_t vars, Int cap) {
  std::vector<DivisorExponent> columns = monomials_up_to(vars, cap);
  std::sort(columns.begin(), columns.end(), grevlex_greater);
  std::map<DivisorExponent, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;

  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> rows;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    Int gdeg = 0;
    for (const auto& [e, c] : g) gdeg = std::max(gdeg, degree_of(e));
    for (const auto& m : monomials_up_to(vars, cap - gdeg)) {
      std::vector<std::pair<std::size_t, mpq_class>> row;
      for (const auto& [e, c] : g) {
        DivisorExponent prod(vars);
        for (std::size_t t = 0; t < vars; ++t) prod[t] = e[t] + m[t];
        row.emplace_back(column_of.at(prod), c);
      }
      rows.push_back(std::move(row));
    }
  }
  RationalMatrix mac(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) mac(r, c) += v;
  const RowEchelon ech = reduced_row_echelon(std::move(mac));

  std::map<std::size_t, std::size_t> row_of_pivot;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) row_of_pivot[ech.pivots[r]] = r;

  MacaulayResult out;
  std::vector<std::size_t> basis_columns;
  for (std::size_t c = columns.size(); c-- > 0;)
    if (!row_of_pivot.contains(c)) {
      basis_columns.push_back(c);
      out.basis.push_back(columns[c]);
    }
  if (out.basis.empty() || out.basis.front() != DivisorExponent(vars, 0))
    throw Error(ErrorCode::EmptyQuotient, "the ideal contains 1");
  for (const auto& b : out.basis)
    if (degree_of(b) >= cap)
      throw Error(ErrorCode::DimensionUnstable, "standard monomial reaches the degree cap " + std::to_string(cap));

  std::map<std::size_t, std::size_t> basis_index;
  for (std::size_t k = 0; k < basis_columns.size(); ++k) basis_index[basis_columns[k]] = k;

  const std::size_t dim = out.basis.size();
  for (std::size_t t = 0; t < vars; ++t) {
    RationalMatrix m(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      DivisorExponent prod = out.basis[b];
      ++prod[t];
      const std::size_t c = column_of.at(prod);
      if (auto it = basis_index.find(c); it != basis_index.end()) {
        m(it->second, b) = 1;
        continue;
      }
      const std::size_t r = row_of_pivot.at(c);
      for (const auto& [col, k] : basis_index)
        if (ech.reduced(r, col) != 0) m(k, b) = -ech.reduced(r, col);
    }
    out.variable_matrices.push_back(std::move(m));
  }
  return out;
}

QuotientModel quotient_model_at(const RingPresentation& pres, const std::vector<mpq_class>& q, Int cap) {
  const LinearElimination elim = eliminate_linear(pres, q);
  const std::size_t vars = elim.free_vars.size();
  std::vector<Poly> gens;
  Int max_degree = 0;
  for (const auto& g : pres.quantum_gens) {
    gens.push_back(reduce_to_free(g, elim, q));
    for (const auto& [e, c] : gens.back()) max_degree = std::max(max_degree, degree_of(e));
  }
  if (cap < max_degree)
    throw Error(ErrorCode::InvalidArgument, "degree cap is below the generator degree " + std::to_string(max_degree));

  const MacaulayResult at_cap = macaulay_quotient(gens, vars, cap);
  const MacaulayResult at_next = macaulay_quotient(gens, vars, cap + 1);
  if (at_cap.basis != at_next.basis)
    throw Error(ErrorCode::DimensionUnstable, "quotient dimension " + std::to_string(at_cap.basis.size()) +
                                                  " at cap " + std::to_string(cap) + " vs " +
                                                  std::to_string(at_next.basis.size()) + " at cap " +
                                                  std::to_string(cap + 1));
  QuotientModel model;
  model.free_vars = elim.free_vars;
  model.substitution = elim.substitution;
  model.basis = at_cap.basis;
  model.dim = at_cap.basis.size();
  model.variable_matrices = at_cap.variable_matrices;
  model.q = q;
  model.degree_cap = cap;
  model.l = pres.l;
  return model;
}

RationalMatrix matrix_power_product(const QuotientModel& model, const DivisorExponent& e) {
  RationalMatrix result = RationalMatrix::identity(model.dim);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    RationalMatrix lin(model.dim, model.dim);
    for (std::size_t t = 0; t < model.free_vars.size(); ++t) {
      if (model.substitution[i][t] == 0) continue;
      RationalMatrix scaled = model.variable_matrices[t];
      scaled *= model.substitution[i][t];
      lin += scaled;
    }
    for (Int p = 0; p < e[i]; ++p) result = result * lin;
  }
  return result;
}

bool is_factor_block(const ToricFanoData& data, const std::vector<std::size_t>& group) {
  // group = {e_j : j in B} u {-sum_{j in B} e_j} for a coordinate block B
  std::vector<std::size_t> negatives;
  std::set<std::size_t> positives;
  for (auto i : group) {
    const auto& v = data.ray(i);
    std::size_t ones = 0, minus = 0, others = 0, where = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 1) {
        ++ones;
        where = j;
      } else if (v[j] == -1) {
        ++minus;
      } else if (v[j] != 0) {
        ++others;
      }
    }
    if (others) return false;
    if (ones == 1 && minus == 0)
      positives.insert(where);
    else if (ones == 0 && minus > 0)
      negatives.push_back(i);
    else
      return false;
  }
  if (negatives.size() != 1 || positives.size() + 1 != group.size()) return false;
  const auto& neg = data.ray(negatives.front());
  for (std::size_t j = 0; j < neg.size(); ++j)
    if ((neg[j] == -1) != positives.contains(j)) return false;
  return true;
}

}  // namespace

DivisorPolynomial DivisorPolynomial::variable(std::size_t d, std::size_t l, std::size_t i) {
  DivisorExponent e(d, 0);
  e.at(i) = 1;
  DivisorPolynomial p(d, l);
  p.add(e, QLaurent::constant(l, 1));
  return p;
}

DivisorPolynomial DivisorPolynomial::monomial(const DivisorExponent& e, const QLaurent& c) {
  DivisorPolynomial p(e.size(), c.num_params());
  p.add(e, c);
  return p;
}

DivisorPolynomial DivisorPolynomial::constant(std::size_t d, const QLaurent& c) {
  return monomial(DivisorExponent(d, 0), c);
}

Int DivisorPolynomial::degree() const {
  Int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, degree_of(e));
  return deg;
}

bool DivisorPolynomial::is_homogeneous_linear() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return degree_of(t.first) == 1; });
}

void DivisorPolynomial::add(const DivisorExponent& e, const QLaurent& c) {
  if (e.size() != d_) throw Error(ErrorCode::InvalidArgument, "divisor exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DivisorPolynomial& DivisorPolynomial::operator+=(const DivisorPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

DivisorPolynomial& DivisorPolynomial::operator-=(const DivisorPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

DivisorPolynomial operator*(const DivisorPolynomial& a, const DivisorPolynomial& b) {
  if (a.d_ != b.d_) throw Error(ErrorCode::InvalidArgument, "divisor polynomials over different rings");
  DivisorPolynomial out(a.d_, std::max(a.l_, b.l_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      DivisorExponent e(a.d_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

std::string DivisorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads most naturally
  std::vector<const Terms::value_type*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return grevlex_greater(a->first, b->first); });
  for (const auto* t : ordered) {
    const auto& [e, c] = *t;
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
      negative = true;
      coeff = (-c).to_string();
    }
    std::ostringstream mono;
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono << (first_var ? "" : "*") << 'D' << (i + 1);
      if (e[i] != 1) mono << '^' << e[i];
      first_var = false;
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (first_var) {
      os << coeff;
    } else {
      if (coeff != "1") os << (c.terms().size() > 1 ? "(" + coeff + ")" : coeff) << '*';
      os << mono.str();
    }
    first = false;
  }
  return os.str();
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::ComputedProduct:
      return "computed-product";
    case Provenance::BuiltinExample:
      return "builtin-example";
  }
  return "unknown";
}

std::vector<DivisorPolynomial> linear_ideal(const ToricFanoData& data) {
  std::vector<DivisorPolynomial> gens;
  for (std::size_t j = 0; j < data.n(); ++j) {
    DivisorPolynomial g(data.d(), data.l());
    for (std::size_t i = 0; i < data.d(); ++i) {
      const Int c = data.ray(i)[j];
      if (c == 0) continue;
      DivisorExponent e(data.d(), 0);
      e[i] = 1;
      g.add(e, QLaurent::constant(data.l(), mpq_class(static_cast<long>(c))));
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::optional<ProductFactorization> product_structure(const ToricFanoData& data) {
  // each factor owns exactly one ray with no positive entry
  std::vector<std::size_t> negatives;
  std::map<std::size_t, std::size_t> positive_of;  // coordinate -> ray
  for (std::size_t i = 0; i < data.d(); ++i) {
    const auto& v = data.ray(i);
    const bool nonpositive = std::all_of(v.coords().begin(), v.coords().end(), [](Int c) { return c <= 0; });
    if (nonpositive) {
      negatives.push_back(i);
      continue;
    }
    std::size_t where = 0, ones = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        where = j;
        ++ones;
      }
    if (ones != 1 || v[where] != 1 || positive_of.contains(where)) return std::nullopt;
    positive_of[where] = i;
  }
  ProductFactorization out;
  std::set<std::size_t> covered;
  for (std::size_t neg : negatives) {
    std::vector<std::size_t> group{neg};
    for (std::size_t j = 0; j < data.n(); ++j) {
      if (data.ray(neg)[j] == 0) continue;
      if (!positive_of.contains(j) || !covered.insert(j).second) return std::nullopt;
      group.push_back(positive_of[j]);
    }
    std::sort(group.begin(), group.end());
    if (!is_factor_block(data, group)) return std::nullopt;
    out.groups.push_back(std::move(group));
  }
  if (covered.size() != data.n() || positive_of.size() != data.n()) return std::nullopt;
  std::sort(out.groups.begin(), out.groups.end());
  for (const auto& g : out.groups) out.dims.push_back(g.size() - 1);
  return out;
}

std::vector<DivisorPolynomial> quantum_sr_ideal(const ToricFanoData& data,
                                                const std::optional<ProductFactorization>& factorization) {
  if (!factorization)
    throw Error(ErrorCode::NotAProduct, "'" + data.name() + "' is not a product of projective spaces");
  std::vector<DivisorPolynomial> gens;
  for (const auto& group : factorization->groups) {
    DivisorExponent e(data.d(), 0);
    QMonomial coefficient = QMonomial::one(data.l());
    for (auto i : group) {
      e[i] = 1;
      coefficient *= data.lambda_monomial(i);
    }
    DivisorPolynomial g = DivisorPolynomial::monomial(e, QLaurent::constant(data.l(), 1));
    g -= DivisorPolynomial::constant(data.d(), QLaurent(coefficient));
    gens.push_back(std::move(g));
  }
  return gens;
}

RingPresentation product_presentation(const ToricFanoData& data) {
  const auto factorization = product_structure(data);
  RingPresentation pres;
  pres.d = data.d();
  pres.l = data.l();
  pres.linear_gens = linear_ideal(data);
  pres.quantum_gens = quantum_sr_ideal(data, factorization);
  pres.provenance = Provenance::ComputedProduct;
  std::ostringstream label;
  for (std::size_t a = 0; a < factorization->dims.size(); ++a)
    label << (a ? " x " : "") << "CP^" << factorization->dims[a];
  pres.label = label.str();
  pres.default_degree_cap =
      static_cast<Int>(std::accumulate(factorization->dims.begin(), factorization->dims.end(), std::size_t{0})) + 2;
  return pres;
}

RingPresentation builtin_presentation(std::string_view name) {
  if (name != "BlP2") throw Error(ErrorCode::UnknownExample, "no built-in presentation named '" + std::string(name) + "'");
  const ToricFanoData data = make_fixture("BlP2");
  const std::size_t d = 4, l = 2;
  auto var = [&](std::size_t i) { return DivisorPolynomial::variable(d, l, i); };
  auto scalar = [&](const QMonomial& m) { return DivisorPolynomial::constant(d, QLaurent(m)); };
  const QMonomial q1 = QMonomial::generator(l, 0);
  const QMonomial q2 = QMonomial::generator(l, 1);

  RingPresentation pres;
  pres.d = d;
  pres.l = l;
  pres.linear_gens = linear_ideal(data);
  pres.quantum_gens.push_back(var(0) * var(2) - scalar(q1) * var(3));
  pres.quantum_gens.push_back(var(1) * var(3) - scalar(q2));
  pres.provenance = Provenance::BuiltinExample;
  pres.label = "BlP2";
  pres.default_degree_cap = 4;
  return pres;
}

RingPresentation presentation_for(const ToricFanoData& data) {
  if (product_structure(data)) return product_presentation(data);
  try {
    RingPresentation pres = builtin_presentation(data.name());
    const ToricFanoData reference = make_fixture(data.name());
    if (reference.rays() == data.rays() && reference.lambda_monomials() == data.lambda_monomials()) return pres;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownExample && e.code() != ErrorCode::UnknownFixture) throw;
  }
  throw Error(ErrorCode::NotAProduct,
              "'" + data.name() +
                  "' is not a product of projective spaces and has no built-in presentation; the general quantum "
                  "Stanley-Reisner ideal is not implemented");
}

LaurentSeriesZ substitute_divisors(const DivisorPolynomial& p, const ToricFanoData& data) {
  if (p.d() != data.d()) throw Error(ErrorCode::InvalidArgument, "divisor polynomial does not match the toric data");
  LaurentSeriesZ out(data.n(), data.l());
  for (const auto& [e, c] : p.terms()) {
    LatticePoint w = LatticePoint::zero(data.n());
    QMonomial m = QMonomial::one(data.l());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      w += e[i] * data.ray(i);
      m *= data.lambda_monomial(i).pow(e[i]);
    }
    out.add(w, c * QLaurent(m));
  }
  return out;
}

QuotientModel quotient_model(const RingPresentation& pres, const std::vector<mpq_class>& q,
                             std::optional<Int> degree_cap) {
  if (q.size() != pres.l) throw Error(ErrorCode::InvalidArgument, "need one Kahler parameter per kernel direction");
  for (const auto& qa : q)
    if (qa <= 0) throw Error(ErrorCode::InvalidArgument, "Kahler parameters must be positive");
  const Int cap = degree_cap.value_or(pres.default_degree_cap);
  try {
    return quotient_model_at(pres, q, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DimensionUnstable) throw;
  }
  return quotient_model_at(pres, q, 2 * cap);
}

RationalMatrix multiplication_matrix(const QuotientModel& model, const DivisorPolynomial& cls) {
  if (cls.d() != model.substitution.size())
    throw Error(ErrorCode::ClassNotReducible, "class lives in a ring with " + std::to_string(cls.d()) +
                                                  " divisors, model has " + std::to_string(model.substitution.size()));
  RationalMatrix out(model.dim, model.dim);
  for (const auto& [e, c] : cls.terms()) {
    RationalMatrix term = matrix_power_product(model, e);
    term *= specialize(c, model.q);
    out += term;
  }
  return out;
}

std::vector<std::complex<double>> multiplication_spectrum(const QuotientModel& model, const DivisorPolynomial& cls) {
  const Eigen::MatrixXcd m = multiplication_matrix(model, cls).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::ClassNotReducible, "eigenvalue iteration failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (const double dist = std::abs(a[i] - b[j]); dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return worst;
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_isomorphism(const ToricFanoData& data, const RingPresentation& pres,
                                      const std::vector<mpq_class>& q, CriticalPointConfig solver,
                                      const VerificationTolerances& tol) {
  if (pres.d != data.d() || pres.l != data.l())
    throw Error(ErrorCode::InvalidArgument, "presentation does not match the toric data");
  VerificationReport report;
  report.presentation_label = pres.label;
  report.provenance = pres.provenance;
  for (const auto& qa : q) report.q_numeric.push_back(qa.get_d());

  const Superpotential w = superpotential(data);
  const auto jac = jacobian_generators(w);

  CheckResult syntactic{"syntactic", true, 0.0, {}};
  if (pres.linear_gens.size() != jac.size()) {
    syntactic.passed = false;
    syntactic.message = "presentation has " + std::to_string(pres.linear_gens.size()) + " linear generators, expected " +
                        std::to_string(jac.size());
  } else {
    for (std::size_t j = 0; j < jac.size(); ++j)
      if (substitute_divisors(pres.linear_gens[j], data) != jac[j]) {
        syntactic.passed = false;
        syntactic.message += "linear generator " + std::to_string(j + 1) + " maps to " +
                             substitute_divisors(pres.linear_gens[j], data).to_string() + ", z_j dW/dz_j is " +
                             jac[j].to_string() + "; ";
      }
  }

  if (solver.expected_count == 0) solver.expected_count = expected_critical_count(data);
  report.critical = critical_points(w, report.q_numeric, solver);
  report.critical_count = report.critical.points.size();

  CheckResult membership{"ideal_membership", true, 0.0, {}};
  for (std::size_t g = 0; g < pres.quantum_gens.size(); ++g) {
    const LaurentSeriesZ image = substitute_divisors(pres.quantum_gens[g], data);
    for (const auto& v : evaluate_at_critical(image, report.critical, report.q_numeric))
      membership.residual = std::max(membership.residual, std::abs(v));
  }
  membership.passed = membership.residual <= tol.ideal_tol;
  if (!membership.passed) membership.message = "a quantum generator does not vanish at every critical point";

  const QuotientModel model = quotient_model(pres, q);
  report.quotient_dim = model.dim;

  CheckResult spectral{"spectral", true, 0.0, {}};
  for (std::size_t a = 0; a < model.variable_matrices.size(); ++a)
    for (std::size_t b = a + 1; b < model.variable_matrices.size(); ++b) {
      const RationalMatrix& ma = model.variable_matrices[a];
      const RationalMatrix& mb = model.variable_matrices[b];
      if (!(ma * mb - mb * ma).is_zero()) {
        spectral.passed = false;
        spectral.message += "multiplication matrices do not commute; ";
      }
    }
  if (model.dim != report.critical_count) {
    spectral.passed = false;
    spectral.message += "quotient dimension " + std::to_string(model.dim) + " differs from critical point count " +
                        std::to_string(report.critical_count) + "; ";
  }
  for (std::size_t i = 0; i < data.d(); ++i) {
    const auto qh = multiplication_spectrum(model, DivisorPolynomial::variable(data.d(), data.l(), i));
    std::vector<std::complex<double>> crit;
    for (const auto& mv : report.critical.monomial_values) crit.push_back(mv[i]);
    spectral.residual = std::max(spectral.residual, multiset_distance(qh, crit));
    report.qh_spectra.push_back(qh);
    report.critical_spectra.push_back(std::move(crit));
  }
  if (spectral.residual > tol.spectral_tol) {
    spectral.passed = false;
    spectral.message += "divisor spectra differ from critical-point evaluations; ";
  }

  report.checks = {syntactic, membership, spectral};
  return report;
}

}  // namespace toricmirror
