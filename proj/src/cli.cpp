#include "toricmirror/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toricmirror/disc_algebra.hpp"
#include "toricmirror/error.hpp"
#include "toricmirror/fixtures.hpp"
#include "toricmirror/lg_model.hpp"
#include "toricmirror/quantum_ring.hpp"
#include "toricmirror/syz_transform.hpp"
#include "toricmirror/tropical.hpp"

namespace toricmirror {

namespace {

constexpr double kResidualTol = 1e-9;

struct Check {
  std::string name;
  bool passed;
  Json details;
};

struct Outcome {
  Json parameters = Json::object();
  std::vector<Check> checks;
  Json result = Json::object();
  std::vector<std::string> artifacts;
};

[[noreturn]] void parse_fail(const std::string& origin, const std::string& message) {
  throw Error(ErrorCode::ParseError, origin + ": " + message);
}

std::vector<Int> int_vector(const Json& j, const std::string& origin, const std::string& field) {
  if (!j.is_array()) parse_fail(origin, "field '" + field + "' must be an array of integers");
  std::vector<Int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer())
      parse_fail(origin, "field '" + field + "[" + std::to_string(k) + "]' must be an integer");
    out.push_back(j[k].get<Int>());
  }
  return out;
}

std::vector<std::vector<Int>> int_rows(const Json& doc, const std::string& origin, const std::string& field) {
  const Json& j = doc.at(field);
  if (!j.is_array()) parse_fail(origin, "field '" + field + "' must be an array of integer arrays");
  std::vector<std::vector<Int>> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(int_vector(j[k], origin, field + "[" + std::to_string(k) + "]"));
  return out;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return static_cast<std::size_t>(std::count(text.begin(), end, '\n')) + 1;
}

std::vector<mpq_class> resolve_q(const std::vector<std::string>& raw, std::size_t l) {
  std::vector<mpq_class> q;
  for (const auto& s : raw) q.push_back(parse_rational(s));
  if (q.empty()) q.assign(l, mpq_class(1));
  if (q.size() == 1 && l > 1) q.assign(l, q.front());
  if (q.size() != l)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(l) + " Kahler parameters, got " + std::to_string(q.size()));
  for (const auto& qa : q)
    if (qa <= 0) throw Error(ErrorCode::InvalidArgument, "Kahler parameters must be positive");
  return q;
}

std::vector<double> to_double(const std::vector<mpq_class>& q) {
  std::vector<double> out;
  for (const auto& x : q) out.push_back(x.get_d());
  return out;
}

Json q_json(const std::vector<mpq_class>& q) {
  Json out = Json::array();
  for (const auto& x : q) out.push_back(rational_string(x));
  return out;
}

CriticalPointConfig solver_config(const RunRequest& req, const ToricFanoData& data) {
  CriticalPointConfig config;
  config.seed = req.seed;
  config.starts = req.starts;
  config.expected_count = expected_critical_count(data);
  return config;
}

// Lambda = [0; I]: the normalization in which e^{lambda_{n+a}} = q_a.
bool trailing_identity_lambda(const ToricFanoData& data) {
  for (std::size_t i = 0; i < data.d(); ++i)
    for (std::size_t a = 0; a < data.l(); ++a) {
      const Int expected = (i >= data.n() && i - data.n() == a) ? 1 : 0;
      if (data.lambda_monomial(i)[a] != expected) return false;
    }
  return true;
}

Outcome cmd_info(const ToricFanoData& data) {
  Outcome out;
  out.result["data"] = to_json(data);
  const auto factorization = product_structure(data);
  Json product = nullptr;
  if (factorization) product = Json{{"dims", factorization->dims}, {"groups", factorization->groups}};
  out.result["product_structure"] = product;
  out.result["expected_critical_count"] = expected_critical_count(data);
  return out;
}

Outcome cmd_vertices(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  std::vector<double> lambda;
  std::string source;
  if (!req.q.empty()) {
    const auto q = resolve_q(req.q, data.l());
    out.parameters["q"] = q_json(q);
    lambda = lambda_from_q(data, to_double(q));
    source = "q";
  } else if (data.lambda_numeric()) {
    lambda = *data.lambda_numeric();
    source = "input";
  } else {
    lambda = anticanonical_lambda(data);
    source = "anticanonical";
  }
  const auto vertices = polytope_vertices(data, lambda);
  Json vj = Json::array();
  for (const auto& v : vertices) vj.push_back(to_json(v));
  out.result["lambda_source"] = source;
  out.result["lambda"] = lambda;
  out.result["vertices"] = vj;
  out.checks.push_back({"vertex_count", vertices.size() == expected_critical_count(data),
                        Json{{"vertices", vertices.size()}, {"expected", expected_critical_count(data)}}});
  return out;
}

Outcome cmd_superpotential(const ToricFanoData& data) {
  Outcome out;
  const Superpotential w = superpotential(data);
  out.result["W"] = to_json(w.series);
  out.result["W_text"] = w.series.to_string();
  Json gens = Json::array();
  for (const auto& g : jacobian_generators(w)) gens.push_back(to_json(g));
  out.result["jacobian_generators"] = gens;
  return out;
}

Outcome cmd_phi(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  out.parameters["kmax"] = req.kmax;
  const DiscSeries phi = phi_truncated(data, req.kmax);
  out.result["phi"] = to_json(phi);
  out.result["admissible"] = to_json(disc_to_admissible(phi, data));
  return out;
}

Outcome cmd_check_log_derivative(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  out.parameters["kmax"] = req.kmax;
  const DiscSeries phi = phi_truncated(data, req.kmax);
  const bool literal = trailing_identity_lambda(data);
  for (std::size_t a = 0; a < data.l(); ++a) {
    const DiscSeries lhs = q_log_derivative(phi, a, data);
    const DiscSeries rhs = log_derivative_rhs(phi, a, data);
    out.checks.push_back({"log_derivative_q" + std::to_string(a + 1), lhs == rhs,
                          Json{{"classes", lhs.terms().size()}, {"form", "sum_i Lambda_ia Phi * Psi_i"}}});
    if (literal) {
      const DiscSeries direct = convolve_psi(phi, data.n() + a);
      out.checks.push_back({"log_derivative_q" + std::to_string(a + 1) + "_psi_n_plus_a", lhs == direct,
                            Json{{"classes", lhs.terms().size()}, {"form", "Phi * Psi_{n+a}"}}});
    }
  }
  const auto factorization = product_structure(data);
  for (std::size_t a = 0; a < data.l(); ++a) {
    const AdmissibleFunction rel = psi_relation(data, a);
    AdmissibleFunction expected = unit(data.n(), data.l());
    expected *= QLaurent(QMonomial::generator(data.l(), a));
    out.checks.push_back({"psi_relation_q" + std::to_string(a + 1), rel == expected, Json{{"relation", "prod_i Psi_i^Q_ia = q_a 1"}}});
  }
  out.result["normalized_lambda"] = literal;
  out.result["product"] = factorization.has_value();
  return out;
}

Outcome cmd_check_fourier(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  out.parameters["kmax"] = req.kmax;
  const LaurentSeriesZ lhs = transform(disc_to_admissible(phi_truncated(data, req.kmax), data));
  const LaurentSeriesZ rhs = exp_superpotential_truncated(data, req.kmax);
  out.checks.push_back({"fourier_phi_equals_exp_w", lhs == rhs, Json{{"terms", lhs.terms().size()}}});
  const bool round_trip = inverse_transform(lhs) == disc_to_admissible(phi_truncated(data, req.kmax), data);
  out.checks.push_back({"inverse_round_trip", round_trip, Json::object()});
  out.result["terms"] = lhs.terms().size();
  return out;
}

// Solves at q, moving to the generic sample when q was defaulted and the
// spectrum comes out degenerate.
template <typename Solve>
auto solve_with_shift(const RunRequest& req, const ToricFanoData& data, Outcome& out, Solve solve) {
  std::vector<mpq_class> q = resolve_q(req.q, data.l());
  auto result = solve(q);
  bool shifted = false;
  if (req.q.empty() && result.degenerate()) {
    q = generic_q(data.l());
    result = solve(q);
    shifted = true;
  }
  out.parameters["q"] = q_json(q);
  out.parameters["seed"] = req.seed;
  out.result["q_shifted_for_degenerate_spectrum"] = shifted;
  return result;
}

struct CriticalRun {
  CriticalPointSet cps;
  bool degenerate() const { return cps.degenerate_spectrum; }
};

Outcome cmd_critical_points(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  const auto config = solver_config(req, data);
  const Superpotential w = superpotential(data);
  const CriticalRun run = solve_with_shift(req, data, out, [&](const std::vector<mpq_class>& q) {
    return CriticalRun{critical_points(w, to_double(q), config)};
  });
  double worst = 0.0;
  for (double r : run.cps.residuals) worst = std::max(worst, r);
  out.checks.push_back({"critical_count", run.cps.points.size() == config.expected_count,
                        Json{{"found", run.cps.points.size()}, {"expected", config.expected_count}}});
  out.checks.push_back({"jacobian_residual", worst <= kResidualTol, Json{{"max_residual", worst}, {"tol", kResidualTol}}});
  out.result["critical_points"] = to_json(run.cps);
  return out;
}

Outcome cmd_presentation(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  const RingPresentation pres = presentation_for(data);
  const auto q = resolve_q(req.q, data.l());
  out.parameters["q"] = q_json(q);
  if (req.degree_cap) out.parameters["degree_cap"] = *req.degree_cap;
  const QuotientModel model = quotient_model(pres, q, req.degree_cap);
  Json basis = Json::array();
  for (const auto& b : model.basis) basis.push_back(b);
  out.result["presentation"] = to_json(pres);
  out.result["free_vars"] = model.free_vars;
  out.result["basis"] = basis;
  out.result["dim"] = model.dim;
  out.result["degree_cap_used"] = model.degree_cap;
  const std::size_t expected = expected_critical_count(data);
  out.checks.push_back({"dimension", model.dim == expected, Json{{"dim", model.dim}, {"vertices", expected}}});
  return out;
}

struct VerifyRun {
  VerificationReport report;
  bool degenerate() const { return report.critical.degenerate_spectrum; }
};

Outcome cmd_verify_iso(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  const RingPresentation pres = presentation_for(data);
  const auto config = solver_config(req, data);
  const VerifyRun run = solve_with_shift(req, data, out, [&](const std::vector<mpq_class>& q) {
    return VerifyRun{verify_isomorphism(data, pres, q, config)};
  });
  for (const auto& c : run.report.checks)
    out.checks.push_back({c.name, c.passed, Json{{"residual", c.residual}, {"message", c.message}}});
  out.result["verification"] = to_json(run.report);
  return out;
}

Outcome cmd_tropical(const RunRequest& req, const ToricFanoData& data) {
  Outcome out;
  const auto factorization = product_structure(data);
  if (!factorization)
    throw Error(ErrorCode::NotAProduct, "'" + data.name() + "' is not a product of projective spaces");
  if (req.factor == 0 || req.factor > factorization->groups.size())
    throw Error(ErrorCode::IndexOutOfRange, "factor must lie in 1.." + std::to_string(factorization->groups.size()));
  const std::size_t a = req.factor - 1;
  RationalPoint xi(data.n(), mpq_class(0));
  if (!req.xi.empty()) {
    if (req.xi.size() != data.n())
      throw Error(ErrorCode::InvalidArgument, "xi needs " + std::to_string(data.n()) + " coordinates");
    for (std::size_t j = 0; j < data.n(); ++j) xi[j] = parse_rational(req.xi[j]);
  }
  out.parameters["factor"] = req.factor;
  out.parameters["xi"] = to_json(xi);

  const auto curves = enumerate_tgw_curves(data, factorization, a, xi);
  Json cj = Json::array();
  for (const auto& c : curves) cj.push_back(to_json(c, data));
  out.result["curves"] = cj;
  out.result["tgw"] = curves.size();
  out.checks.push_back({"tgw_count", curves.size() == 1, Json{{"count", curves.size()}, {"expected", 1}}});

  if (!curves.empty()) {
    const auto degree = curve_degree(curves.front(), data);
    QMonomial pairing = QMonomial::one(data.l());
    for (std::size_t i = 0; i < data.d(); ++i) pairing *= data.lambda_monomial(i).pow(degree[i]);
    out.checks.push_back({"degree_pairs_to_q" + std::to_string(req.factor),
                          pairing == QMonomial::generator(data.l(), a), Json{{"monomial", pairing.to_string()}}});
    if (req.svg_path) {
      std::ofstream svg(*req.svg_path);
      if (!svg) throw Error(ErrorCode::InvalidArgument, "cannot write " + *req.svg_path);
      svg << curve_svg(curves.front());
      out.artifacts.push_back(*req.svg_path);
    }
  }
  return out;
}

Outcome dispatch(const RunRequest& req, const ToricFanoData& data) {
  const std::string& c = req.command;
  if (c == "info") return cmd_info(data);
  if (c == "vertices") return cmd_vertices(req, data);
  if (c == "superpotential") return cmd_superpotential(data);
  if (c == "phi") return cmd_phi(req, data);
  if (c == "check-prop21") return cmd_check_log_derivative(req, data);
  if (c == "check-thm32") return cmd_check_fourier(req, data);
  if (c == "critical-points") return cmd_critical_points(req, data);
  if (c == "presentation") return cmd_presentation(req, data);
  if (c == "verify-iso") return cmd_verify_iso(req, data);
  if (c == "tropical") return cmd_tropical(req, data);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + c + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"info",         "vertices",        "superpotential", "phi",
                                              "check-prop21", "check-thm32",     "critical-points", "presentation",
                                              "verify-iso",   "tropical"};
  return names;
}

ToricFanoData parse_input(const std::string& text, const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(origin, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) parse_fail(origin, "top level must be an object");
  for (const char* field : {"n", "rays"})
    if (!doc.contains(field)) parse_fail(origin, std::string("missing field '") + field + "'");
  if (!doc["n"].is_number_integer() || doc["n"].get<Int>() <= 0) parse_fail(origin, "field 'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<Int>());
  std::string name = "input";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_fail(origin, "field 'name' must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<LatticePoint> rays;
  const auto rows = int_rows(doc, origin, "rays");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      parse_fail(origin, "field 'rays[" + std::to_string(i) + "]' has " + std::to_string(rows[i].size()) +
                             " entries, n = " + std::to_string(n));
    rays.emplace_back(rows[i]);
  }

  std::optional<std::vector<QMonomial>> lambda;
  if (doc.contains("lambda_monomials")) {
    lambda.emplace();
    for (auto& row : int_rows(doc, origin, "lambda_monomials")) lambda->emplace_back(std::move(row));
  }

  std::optional<IntMatrix> kbasis;
  if (doc.contains("kbasis")) {
    const auto cols = int_rows(doc, origin, "kbasis");
    for (std::size_t a = 0; a < cols.size(); ++a)
      if (cols[a].size() != rays.size())
        parse_fail(origin, "field 'kbasis[" + std::to_string(a) + "]' must have one entry per ray");
    kbasis = IntMatrix::from_columns(cols, rays.size());
  }

  std::optional<std::vector<double>> lambda_numeric;
  if (doc.contains("lambda_numeric")) {
    const Json& j = doc["lambda_numeric"];
    if (!j.is_array()) parse_fail(origin, "field 'lambda_numeric' must be an array of numbers");
    lambda_numeric.emplace();
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_number()) parse_fail(origin, "field 'lambda_numeric[" + std::to_string(k) + "]' must be a number");
      lambda_numeric->push_back(j[k].get<double>());
    }
  }
  return build_toric_data(std::move(rays), std::move(lambda), std::move(kbasis), std::move(lambda_numeric),
                          std::move(name));
}

ToricFanoData load_input(const std::string& source) {
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return make_fixture(source);
  std::ifstream file(source);
  if (!file)
    throw Error(ErrorCode::UnknownFixture, "'" + source + "' is neither a registered fixture nor a readable file");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_input(buffer.str(), source);
}

std::vector<mpq_class> generic_q(std::size_t l) {
  std::vector<mpq_class> q(l, mpq_class(1, 5));
  if (l > 0) q[0] = mpq_class(7, 10);
  return q;
}

RunResult run(const RunRequest& request) {
  RunResult result;
  Json report{{"command", request.command}, {"input", request.input}};
  std::ostringstream summary;
  try {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), request.command) == names.end())
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + request.command + "'");
    const ToricFanoData data = load_input(request.input);
    Outcome out = dispatch(request, data);

    Json checks = Json::array();
    bool all_pass = true;
    for (const auto& c : out.checks) {
      checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
      all_pass = all_pass && c.passed;
      summary << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << '\n';
    }
    report["parameters"] = out.parameters;
    report["checks"] = checks;
    report["artifacts"] = out.artifacts;
    report["result"] = out.result;
    result.exit_code = all_pass ? 0 : 1;
    summary << request.command << ' ' << request.input << ": " << out.checks.size() << " check(s), "
            << (all_pass ? "all passed" : "some failed") << '\n';
  } catch (const Error& e) {
    report["parameters"] = Json::object();
    report["checks"] = Json::array();
    report["artifacts"] = Json::array();
    report["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    result.exit_code = 2;
    summary << request.command << ' ' << request.input << ": error: " << e.what() << '\n';
  }
  result.report = std::move(report);
  result.summary = summary.str();
  return result;
}

}  // namespace toricmirror
