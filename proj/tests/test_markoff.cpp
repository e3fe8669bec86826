#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "twobridge/markoff.hpp"

using namespace tb;

namespace {

std::vector<std::pair<long long, long long>> coeffs(const TracePolynomial& p) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& c : p.c) out.emplace_back(static_cast<long long>(c.re), static_cast<long long>(c.im));
  return out;
}

cd random_x(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  return {u(rng), u(rng)};
}

double rel(cd a, cd b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

}  // namespace

TEST_CASE("figure-eight trace polynomial") {
  const auto P = trace_polynomial(Slope(2, 5));
  const std::vector<std::pair<long long, long long>> expect{{0, 0}, {-1, 0}, {0, 0}, {1, 0}, {0, 0}, {-1, 0}};
  CHECK(coeffs(P) == expect);
  CHECK(oracle::christoffel_trace_polynomial(2, 5) == expect);
}

TEST_CASE("trace polynomials match Christoffel word traces") {
  for (const auto& r : support::hyperbolic_slopes(30)) {
    const auto P = trace_polynomial(r);
    CHECK(P.degree() == r.den());
    CHECK(coeffs(P) == oracle::christoffel_trace_polynomial(r.num(), r.den()));
  }
  CHECK_THROWS_AS(trace_polynomial(Slope(1, 3)), NotHyperbolic);
  CHECK(trace_polynomial(Slope(1, 3), true).degree() == 3);
}

TEST_CASE("polynomial roots") {
  const auto roots = polynomial_roots(trace_polynomial(Slope(2, 5)));
  REQUIRE(roots.size() == 5);
  int unit = 0;
  for (const auto& z : roots) {
    if (std::abs(z) < 1e-12) continue;
    const cd w(double(z.real()), double(z.imag()));
    CHECK(std::abs(std::pow(w, 4) - w * w + 1.0) < 1e-12);
    unit += std::abs(std::abs(w) - 1.0) < 1e-12;
  }
  CHECK(unit == 4);
  for (const auto& r : support::hyperbolic_slopes(30, 20)) {
    const auto P = trace_polynomial(r);
    const auto info = root_report(P, polynomial_roots(P));
    for (const auto& ri : info) CHECK(std::abs(P.evaluate(ri.value)) <= 1e-6L * (1 + std::pow(std::abs(ri.value), P.degree())));
  }
  const auto ext = polynomial_roots(trace_polynomial(Slope(7, 17)), Precision::Extended);
  CHECK(ext.size() == 17);
  CHECK_THROWS_AS(polynomial_roots(std::vector<cld>{1.0L}), DomainError);
}

TEST_CASE("edge flips preserve the Markoff equation") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10000; ++k) {
    const cd x = random_x(rng);
    const Slope m = support::random_unit_slope(rng, int(rng() % 10));
    const auto [a, b] = oracle::stern_brocot_parents(m.num(), m.den());
    // triangle <a, b, m>; flipping m across <a, b> gives the vertex b - a
    const MarkoffTriple t{oracle::christoffel_phi(x, a.n, a.d), oracle::christoffel_phi(x, b.n, b.d),
                          oracle::christoffel_phi(x, m.num(), m.den())};
    CHECK(t.residual() < 1e-10);
    const MarkoffTriple u = edge_flip(t, 2);
    // the flip cancels; measure the new residual against the size of the old triple
    const double scale = std::norm(t.x) + std::norm(t.y) + std::norm(t.z) + std::abs(t.x * t.y * t.z);
    CHECK(std::abs(u.x * u.x + u.y * u.y + u.z * u.z - u.x * u.y * u.z) < 1e-10 * scale);
    CHECK(std::abs(edge_flip(u, 2).z - t.z) <= 1e-12 * std::max(1.0, std::abs(t.x * t.y)));
    if (b.d > a.d) {
      const cd expect = oracle::christoffel_phi(x, b.n - a.n, b.d - a.d);
      CHECK(std::abs(u.z - expect) < 1e-10 * std::max(1.0, std::abs(t.x * t.y)));
    }
  }
  CHECK_THROWS_AS(edge_flip(MarkoffTriple{1.0, 1.0, 1.0}, 3), DomainError);
}

// Edge relation phi(a+b) + phi(a-b) = phi(a) phi(b) on random Farey edges.
TEST_CASE("edge relation on random Farey edges") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const cd x = random_x(rng);
    const Slope m = support::random_unit_slope(rng, 1 + int(rng() % 10));
    // Stern-Brocot parents of m are the edge, m and the opposite vertex its two neighbours.
    const auto [a, b] = oracle::stern_brocot_parents(m.num(), m.den());
    const Slope A(a.n, a.d), B(b.n, b.d);
    const Slope other(b.n - a.n, b.d - a.d);
    const cd pa = phi_at(x, A), pb = phi_at(x, B), pm = phi_at(x, m), po = phi_at(x, other);
    CHECK(rel(pm + po, pa * pb, std::abs(pa * pb) + std::abs(pm)) < 1e-10);
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("path independence of the memoized evaluation") {
  std::mt19937_64 rng(13);
  const std::vector<Slope> bases{Slope(2, 5), Slope(3, 7), Slope(5, 17), Slope(3, 8)};
  for (const auto& r : bases) {
    const auto ev = geometric_evaluation(r);
    for (int k = 0; k < 2500; ++k) {
      const Slope s = support::random_unit_slope(rng, 1 + int(rng() % 14));
      const cd a = ev.phi(s), b = phi_at(ev.root(), s), c = oracle::christoffel_phi(ev.root(), s.num(), s.den());
      CHECK(rel(a, b, std::abs(b)) < 1e-10);
      CHECK(rel(a, c, std::abs(c)) < 1e-10);
    }
  }
  std::mt19937_64 rng2(17);
  for (int k = 0; k < 1000; ++k) {
    const cd x = random_x(rng2);
    const i64 n = i64(rng2() % 9) - 4;
    // edges <n, inf> lie outside the unit interval and are reached by a different walk
    const Slope s(n, 1);
    const cd v = phi_at(x, s);
    const cd w = phi_at(x, Slope(n + 1, 1)), u = phi_at(x, Slope(n - 1, 1));
    CHECK(rel(w + u, v * phi_at(x, Slope::inf()), std::abs(v)) < 1e-10);
  }
}

TEST_CASE("complex translation length") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> re(0.01, 4.0), im(-3.1, 3.1);
  for (int k = 0; k < 10000; ++k) {
    const cd l(re(rng), im(rng));
    const cd phi = 2.0 * std::cosh(l / 2.0) * ((rng() & 1) ? 1.0 : -1.0);
    const auto t = translation_length(phi);
    CHECK(t.value.real() >= 0);
    CHECK(t.value.imag() > -M_PI - 1e-12);
    CHECK(t.value.imag() <= M_PI + 1e-12);
    const cd back = 2.0 * std::cosh(t.value / 2.0);
    CHECK(std::min(std::abs(back - phi), std::abs(back + phi)) < 1e-10 * std::max(1.0, std::abs(phi)));
  }
  CHECK(translation_length(2.0).parabolic);
  CHECK(translation_length(-2.0).parabolic);
  CHECK_THROWS_AS(translation_length(1.0), DomainError);
}

TEST_CASE("geometric root of the figure-eight") {
  const auto sel = select_geometric_root(Slope(2, 5));
  const cd x(double(sel.candidates[sel.chosen].x.real()), double(sel.candidates[sel.chosen].x.imag()));
  CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
  CHECK(std::abs(std::pow(x, 12) - 1.0) < 1e-10);
  CHECK(sel.candidates[sel.chosen].lambda_orbifold.imag() > 0);
  int accepted = 0;
  for (const auto& c : sel.candidates) accepted += c.accepted;
  CHECK(accepted >= 1);
  CHECK_THROWS_AS(select_geometric_root(std::vector<cld>{0.0L}, Slope(2, 5)), NoGeometricRoot);
}

TEST_CASE("extended precision agrees with double") {
  for (const char* rs : {"5/17", "7/19", "8/21"}) {
    const Slope r = Slope::parse(rs);
    CHECK(std::abs(geometric_evaluation(r).root() - geometric_evaluation(r, Precision::Extended).root()) < 1e-10);
  }
}
