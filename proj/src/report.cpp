#include "toricmirror/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace toricmirror {

namespace {

Json int_array(const std::vector<Int>& v) { return Json(v); }

Json check_json(const CheckResult& c) {
  return Json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"message", c.message}};
}

void dump(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        os << (first ? "" : ",\n") << inner << Json(key).dump() << ": ";
        dump(value, os, indent + 1);
        first = false;
      }
      os << '\n' << pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& value : j) {
        os << (first ? "" : ",\n") << inner;
        dump(value, os, indent + 1);
        first = false;
      }
      os << '\n' << pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      std::string text(buf);
      if (text.find_first_of(".en") == std::string::npos) text += ".0";
      os << text;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

Json to_json(const ToricFanoData& data) {
  Json rays = Json::array();
  for (const auto& v : data.rays()) rays.push_back(int_array(v.coords()));
  Json lambda = Json::array();
  for (const auto& m : data.lambda_monomials()) lambda.push_back(int_array(m.exponents()));
  Json kbasis = Json::array();  // one entry per column
  for (std::size_t a = 0; a < data.l(); ++a) {
    std::vector<Int> col;
    for (std::size_t i = 0; i < data.d(); ++i) col.push_back(data.kbasis()(i, a));
    kbasis.push_back(int_array(col));
  }
  Json out{{"name", data.name()}, {"n", data.n()}, {"d", data.d()}, {"l", data.l()},
           {"rays", rays},        {"lambda_monomials", lambda},      {"kbasis", kbasis}};
  if (data.lambda_numeric()) out["lambda_numeric"] = *data.lambda_numeric();
  return out;
}

Json to_json(const QLaurent& c) {
  Json out = Json::array();
  for (const auto& [m, coeff] : c.terms())
    out.push_back(Json{{"q_exponents", int_array(m.exponents())}, {"coefficient", rational_string(coeff)}});
  return out;
}

Json to_json(const LaurentSeriesZ& s) {
  Json out = Json::array();
  for (const auto& [w, c] : s.terms())
    for (const auto& [m, coeff] : c.terms())
      out.push_back(Json{{"z_exponents", int_array(w.coords())},
                         {"q_exponents", int_array(m.exponents())},
                         {"coefficient", rational_string(coeff)}});
  return out;
}

Json to_json(const AdmissibleFunction& f) {
  Json out = Json::object();
  for (const auto& [v, c] : f.terms()) {
    Json inner = Json::object();
    for (const auto& [m, coeff] : c.terms()) inner[Json(m.exponents()).dump()] = rational_string(coeff);
    out[Json(v.coords()).dump()] = inner;
  }
  return out;
}

Json to_json(const DiscSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(Json{{"class", int_array(k)}, {"coefficient", rational_string(c)}});
  return Json{{"truncation_order", s.truncation_order()}, {"terms", terms}};
}

Json to_json(std::complex<double> z) { return Json{z.real(), z.imag()}; }

Json to_json(const CriticalPointSet& cps) {
  Json points = Json::array();
  for (std::size_t p = 0; p < cps.points.size(); ++p) {
    Json re = Json::array(), im = Json::array(), mono = Json::array();
    for (const auto& z : cps.points[p]) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    for (const auto& m : cps.monomial_values[p]) mono.push_back(to_json(m));
    points.push_back(Json{{"re", re},
                          {"im", im},
                          {"value", to_json(cps.values[p])},
                          {"residual", cps.residuals[p]},
                          {"monomials", mono}});
  }
  return Json{{"count", cps.points.size()},
              {"starts", cps.starts},
              {"failed_starts", cps.failed_starts},
              {"degenerate_spectrum", cps.degenerate_spectrum},
              {"points", points}};
}

Json to_json(const RingPresentation& pres) {
  Json linear = Json::array(), quantum = Json::array();
  for (const auto& g : pres.linear_gens) linear.push_back(g.to_string());
  for (const auto& g : pres.quantum_gens) quantum.push_back(g.to_string());
  return Json{{"label", pres.label},
              {"provenance", std::string(to_string(pres.provenance))},
              {"linear", linear},
              {"quantum", quantum},
              {"degree_cap", pres.default_degree_cap}};
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  auto spectra = [](const std::vector<std::vector<std::complex<double>>>& s) {
    Json out = Json::array();
    for (const auto& row : s) {
      Json r = Json::array();
      for (const auto& z : row) r.push_back(to_json(z));
      out.push_back(r);
    }
    return out;
  };
  return Json{{"presentation", report.presentation_label},
              {"provenance", std::string(to_string(report.provenance))},
              {"q", report.q_numeric},
              {"quotient_dim", report.quotient_dim},
              {"critical_count", report.critical_count},
              {"checks", checks},
              {"qh_spectra", spectra(report.qh_spectra)},
              {"critical_spectra", spectra(report.critical_spectra)},
              {"critical_points", to_json(report.critical)}};
}

Json to_json(const std::vector<mpq_class>& point) {
  Json out = Json::array();
  for (const auto& x : point) out.push_back(rational_string(x));
  return out;
}

Json to_json(const TropicalCurve& curve, const ToricFanoData& data) {
  Json edges = Json::array();
  for (const auto& e : curve.edges) edges.push_back(int_array(e.coords()));
  return Json{{"vertex", to_json(curve.vertex)}, {"edges", edges}, {"degree", int_array(curve_degree(curve, data))}};
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  dump(j, os, 0);
  os << '\n';
  return os.str();
}

}  // namespace toricmirror
