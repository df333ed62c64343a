// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toricmirror/disc_algebra.hpp"
#include "toricmirror/error.hpp"
#include "toricmirror/fixtures.hpp"
#include "toricmirror/lg_model.hpp"
#include "toricmirror/quantum_ring.hpp"
#include "toricmirror/syz_transform.hpp"
#include "toricmirror/tropical.hpp"

#ifndef TORICMIRROR_CLI
#error "TORICMIRROR_CLI must name the command-line binary"
#endif

using namespace toricmirror;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

// Same rays as the fixtures, ordered so e^{lambda_{n+a}} = q_a and e^{lambda_i} = 1 otherwise.
std::vector<ToricFanoData> normalized_fixtures() {
  return {
      build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, std::nullopt, std::nullopt, std::nullopt, "P2"),
      build_toric_data({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, std::nullopt, std::nullopt, std::nullopt, "P1xP1"),
      build_toric_data({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, -1}}, std::nullopt, std::nullopt,
                       std::nullopt, "P1xP2"),
      build_toric_data({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, 0, 0}, {0, 0, -1, -1}},
                       std::nullopt, std::nullopt, std::nullopt, "P2xP2"),
      build_toric_data({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, std::nullopt, std::nullopt, std::nullopt, "BlP2"),
  };
}

bool trailing_identity(const ToricFanoData& d) {
  for (std::size_t i = 0; i < d.d(); ++i)
    for (std::size_t a = 0; a < d.l(); ++a)
      if (d.lambda_monomial(i)[a] != ((i >= d.n() && i - d.n() == a) ? 1 : 0)) return false;
  return true;
}

bool close_multiset(std::vector<cd> got, std::vector<cd> want, double tol) {
  if (got.size() != want.size()) return false;
  for (const auto& g : got) {
    auto it = std::min_element(want.begin(), want.end(),
                               [&](const cd& a, const cd& b) { return std::abs(a - g) < std::abs(b - g); });
    if (std::abs(*it - g) > tol) return false;
    want.erase(it);
  }
  return true;
}

CriticalPointConfig config_for(const ToricFanoData& d) {
  CriticalPointConfig c;
  c.expected_count = expected_critical_count(d);
  return c;
}

std::vector<mpq_class> all_ones(std::size_t l) { return std::vector<mpq_class>(l, mpq_class(1)); }

std::vector<mpq_class> generic(std::size_t l) {
  std::vector<mpq_class> q(l, mpq_class(1, 5));
  q[0] = mpq_class(7, 10);
  return q;
}

std::vector<double> as_double(const std::vector<mpq_class>& q) {
  std::vector<double> out;
  for (const auto& x : q) out.push_back(x.get_d());
  return out;
}

// 1: Fourier transform of truncated Phi equals truncated exp(W)
Outcome fourier_of_phi(double& worst_seconds) {
  Outcome out;
  for (const char* name : {"P2", "P1xP1", "P1xP2", "BlP2"}) {
    const auto start = std::chrono::steady_clock::now();
    const ToricFanoData d = make_fixture(name);
    for (Int k = 0; k <= 8; ++k)
      if (transform(disc_to_admissible(phi_truncated(d, k), d)) != exp_superpotential_truncated(d, k))
        out.fail(std::string(name) + " differs at K=" + std::to_string(k));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst_seconds = std::max(worst_seconds, secs);
    if (secs > 2.0) out.fail(std::string(name) + " took " + std::to_string(secs) + " s");
  }
  if (out.passed) out.detail = "P2, P1xP1, P1xP2, BlP2 at K=0..8 exact";
  return out;
}

// 2: q_a dPhi/dq_a = Phi * Psi_{n+a}
Outcome log_derivative() {
  Outcome out;
  std::size_t checks = 0;
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    const DiscSeries phi = phi_truncated(d, 8);
    for (std::size_t a = 0; a < d.l(); ++a, ++checks)
      if (q_log_derivative(phi, a, d) != log_derivative_rhs(phi, a, d))
        out.fail(name + " general form fails at a=" + std::to_string(a + 1));
  }
  for (const auto& d : normalized_fixtures()) {
    if (!trailing_identity(d)) out.fail(d.name() + " is not in the normalized ray order");
    const DiscSeries phi = phi_truncated(d, 8);
    for (std::size_t a = 0; a < d.l(); ++a, ++checks)
      if (q_log_derivative(phi, a, d) != convolve_psi(phi, d.n() + a))
        out.fail(d.name() + " Psi_{n+a} form fails at a=" + std::to_string(a + 1));
  }
  if (out.passed)
    out.detail = std::to_string(checks) +
                 " identities at K=8: sum_i Lambda_ia Phi*Psi_i on fixtures, Phi*Psi_{n+a} on normalized ray orders";
  return out;
}

// 3: prod_{i<=n} Psi_i^{Q_ia} * Psi_{n+a} = q_a 1 on products
Outcome psi_relations() {
  Outcome out;
  for (const auto& d : normalized_fixtures()) {
    if (!product_structure(d)) continue;
    for (std::size_t a = 0; a < d.l(); ++a) {
      AdmissibleFunction acc = make_psi(d, d.n() + a);
      for (std::size_t i = 0; i < d.n(); ++i) {
        const Int e = d.kbasis()(i, a);
        if (e < 0) out.fail(d.name() + " has a negative exponent");
        acc = convolve(acc, convolution_power(make_psi(d, i), std::max<Int>(e, 0)));
      }
      AdmissibleFunction expected = unit(d.n(), d.l());
      expected *= QLaurent(QMonomial::generator(d.l(), a));
      if (acc != expected) out.fail(d.name() + " relation fails at a=" + std::to_string(a + 1));
    }
  }
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    if (!product_structure(d)) continue;
    for (std::size_t a = 0; a < d.l(); ++a) {
      AdmissibleFunction expected = unit(d.n(), d.l());
      expected *= QLaurent(QMonomial::generator(d.l(), a));
      if (psi_relation(d, a) != expected) out.fail(name + " kernel-basis relation fails");
    }
  }
  if (out.passed) out.detail = "P2, P1xP1, P1xP2, P2xP2, every factor";
  return out;
}

// 4: transform is a homomorphism with inverse
Outcome fourier_homomorphism() {
  Outcome out;
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3, l = 1 + trial % 2;
    const auto f = oracle::random_admissible(rng, n, l);
    const auto g = oracle::random_admissible(rng, n, l);
    if (transform(convolve(f, g)) != transform(f) * transform(g)) out.fail("product mismatch at trial " + std::to_string(trial));
    if (inverse_transform(transform(f)) != f) out.fail("inverse round trip fails at trial " + std::to_string(trial));
    if (transform(inverse_transform(transform(g))) != transform(g)) out.fail("forward round trip fails");
  }
  if (out.passed) out.detail = "200 random pairs, exact";
  return out;
}

// 5: critical points against closed forms
Outcome critical_points_check() {
  Outcome out;
  const cd omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  auto timed = [&](const char* name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 5.0) out.fail(std::string(name) + " took " + std::to_string(secs) + " s");
  };
  timed("P2", [&] {
    const ToricFanoData d = make_fixture("P2");
    const auto cps = critical_points(superpotential(d), {1.0}, config_for(d));
    if (!close_multiset(cps.values, {3.0, 3.0 * omega, 3.0 * omega * omega}, 1e-9)) out.fail("P2 critical values");
    if (oracle::matched_distance(cps.points, oracle::product_critical_points({2}, {1.0})) > 1e-9) out.fail("P2 points");
  });
  timed("P1xP1", [&] {
    const ToricFanoData d = make_fixture("P1xP1");
    const auto cps = critical_points(superpotential(d), {1.0, 1.0}, config_for(d));
    const std::vector<std::vector<cd>> corners{{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}};
    if (oracle::matched_distance(cps.points, corners) > 1e-9) out.fail("P1xP1 points");
    if (!close_multiset(cps.values, {4.0, 0.0, 0.0, -4.0}, 1e-9)) out.fail("P1xP1 critical values");
  });
  timed("BlP2", [&] {
    const ToricFanoData d = make_fixture("BlP2");
    CriticalPointConfig c = config_for(d);
    c.expected_count = 4;
    const auto cps = critical_points(superpotential(d), {1.0, 1.0}, c);
    if (cps.points.size() != 4) out.fail("BlP2 count");
    for (double r : cps.residuals)
      if (r > 1e-9) out.fail("BlP2 residual " + std::to_string(r));
  });
  if (out.passed) out.detail = "P2 {3, 3w, 3w^2}, P1xP1 (+-1, +-1) {4, 0, 0, -4}, BlP2 4 points";
  return out;
}

// 6: quotient dim = critical count = vertex count
Outcome dimensions() {
  Outcome out;
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"P2", 3}, {"P1xP1", 4}, {"P1xP2", 6}, {"P2xP2", 9}, {"BlP2", 4}};
  std::ostringstream summary;
  for (const auto& [name, dim] : expected) {
    const ToricFanoData d = make_fixture(name);
    const std::size_t vertices = polytope_vertices(d, anticanonical_lambda(d)).size();
    const QuotientModel m = quotient_model(presentation_for(d), generic(d.l()));
    const std::size_t crit = critical_points(superpotential(d), as_double(generic(d.l())), config_for(d)).points.size();
    if (vertices != dim || m.dim != dim || crit != dim)
      out.fail(name + ": vertices " + std::to_string(vertices) + ", quotient " + std::to_string(m.dim) + ", critical " +
               std::to_string(crit));
    if (const auto f = product_structure(d)) {
      std::size_t prod = 1;
      for (auto n : f->dims) prod *= n + 1;
      if (prod != dim) out.fail(name + " product of (n_a + 1) is " + std::to_string(prod));
    }
    summary << name << '=' << dim << ' ';
  }
  if (out.passed) out.detail = summary.str();
  return out;
}

// 7: spectral verification of the ring isomorphism
Outcome isomorphism() {
  Outcome out;
  double worst_spectral = 0.0, worst_ideal = 0.0;
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    for (const auto& q : {all_ones(d.l()), generic(d.l())}) {
      const VerificationReport r = verify_isomorphism(d, presentation_for(d), q, config_for(d));
      for (const auto& c : r.checks) {
        if (!c.passed) out.fail(name + " " + c.name + ": " + c.message);
        if (c.name == "spectral") worst_spectral = std::max(worst_spectral, c.residual);
        if (c.name == "ideal_membership") worst_ideal = std::max(worst_ideal, c.residual);
      }
    }
  }
  if (out.passed) {
    std::ostringstream s;
    s << "all fixtures at q=1 and q=(0.7,0.2,...); max spectral gap " << worst_spectral << ", max ideal residual "
      << worst_ideal;
    out.detail = s.str();
  }
  return out;
}

// 8: tropical counts
Outcome tropical() {
  Outcome out;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    const auto f = product_structure(d);
    if (!f) {
      try {
        count_tgw(d, f, 0, RationalPoint(d.n(), mpq_class(0)));
        out.fail(name + " did not report NotAProduct");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAProduct) out.fail(name + " raised " + std::string(to_string(e.code())));
      }
      continue;
    }
    for (std::size_t a = 0; a < f->groups.size(); ++a)
      for (int trial = 0; trial < 20; ++trial) {
        RationalPoint xi;
        for (std::size_t j = 0; j < d.n(); ++j) {
          xi.emplace_back(num(rng), den(rng));
          xi.back().canonicalize();
        }
        if (count_tgw(d, f, a, xi) != 1) out.fail(name + " count differs from 1");
      }
    // glue succeeds exactly for balanced multisets of up to five rays
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (!pick.empty()) {
        LatticePoint sum = LatticePoint::zero(d.n());
        std::vector<TropicalDisc> discs;
        for (auto i : pick) {
          sum += d.ray(i);
          discs.push_back(make_disc(d, RationalPoint(d.n(), mpq_class(0)), i));
        }
        bool glued = true;
        try {
          glue_discs(discs);
        } catch (const Error&) {
          glued = false;
        }
        if (glued != sum.is_zero()) out.fail(name + " gluing disagrees with balancing");
      }
      if (pick.size() == 5) return;
      for (std::size_t i = start; i < d.d(); ++i) {
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
  }
  if (out.passed) out.detail = "count 1 for every factor at 20 random vertices; BlP2 NotAProduct";
  return out;
}

// 9: bounded domain membership
Outcome domain() {
  Outcome out;
  const ToricFanoData p2 = make_fixture("P2");
  const std::vector<double> q{std::exp(-1.0)};
  if (domain_membership(p2, {0.5, 0.5}, q)) out.fail("(0.5, 0.5) accepted");
  const double r = std::exp(-1.0 / 3.0);
  if (!domain_membership(p2, {r, r}, q)) out.fail("(e^{-1/3}, e^{-1/3}) rejected");
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    const cd a = std::polar(1.0, phase(rng)), b = std::polar(1.0, phase(rng));
    if (domain_membership(p2, {0.5 * a, 0.5 * b}, q)) out.fail("rotated (0.5, 0.5) accepted");
    if (!domain_membership(p2, {r * a, r * b}, q)) out.fail("rotated center rejected");
  }
  if (out.passed) out.detail = "|q/(z1 z2)| = 1.4715 rejected, center accepted, 50 phases";
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10: byte-identical CLI reports
Outcome cli_determinism() {
  Outcome out;
  const std::string a = "acceptance_verify_iso_a.json", b = "acceptance_verify_iso_b.json";
  const std::string base = std::string("\"") + TORICMIRROR_CLI + "\" verify-iso P2 --q 1 --seed 0 --output ";
  const int ra = std::system((base + a + " 2>/dev/null").c_str());
  const int rb = std::system((base + b + " 2>/dev/null").c_str());
  if (ra != 0 || rb != 0) out.fail("command exited nonzero");
  const std::string ta = slurp(a), tb = slurp(b);
  if (ta.empty()) out.fail("empty report");
  if (ta != tb) out.fail("reports differ");
  std::remove(a.c_str());
  std::remove(b.c_str());
  if (out.passed) out.detail = std::to_string(ta.size()) + " identical bytes";
  return out;
}

}  // namespace

int main() {
  double fourier_seconds = 0.0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fourier transform of Phi equals exp(W)", [&] { return fourier_of_phi(fourier_seconds); }},
      {"logarithmic q-derivatives of Phi", log_derivative},
      {"Psi relations on products", psi_relations},
      {"Fourier homomorphism and inversion", fourier_homomorphism},
      {"critical points", critical_points_check},
      {"dimension agreement", dimensions},
      {"spectral ring isomorphism", isomorphism},
      {"tropical counts", tropical},
      {"domain membership", domain},
      {"CLI determinism", cli_determinism},
  };
  const std::vector<double> budgets{8.0, 2.0, 1.0, 5.0, 15.0, 10.0, 30.0, 2.0, 1.0, 60.0};

  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budgets[c]) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budgets[c]) + " s");
    std::printf("%s criterion %2zu  %-40s %8.3f s  %s\n", o.passed ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                secs, o.detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
