#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "twobridge/cusp_geom.hpp"

using namespace tb;

TEST_CASE("folds and longitude on all small slopes") {
  for (const auto& r : support::hyperbolic_slopes(30)) {
    const auto ev = geometric_evaluation(r);
    const auto layout = layout_cusp(r, ev);
    const auto rep = fold_report(layout);
    CHECK_MESSAGE(rep.ok(1e-9), r.str());
    CHECK(layout.max_gluing_error < 1e-9);
    CHECK(layout_coherently_oriented(layout));
    const auto fs = finite_edge_sums(r, ev);
    CHECK(std::abs(layout.lambda_half - fs.E1) < 1e-9);
    CHECK(rep.fold_first == Slope(1, 2));
  }
}

TEST_CASE("fold slopes follow the continued fraction") {
  // [a1, ..., a_{n-1}, a_n - 2] evaluated directly, a zero last term collapsing the tail
  auto expected = [](std::vector<i64> a) {
    a.back() -= 2;
    i64 num = 0, den = 1;  // value of the tail, starting from 1/inf = 0
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      // tail <- 1 / (a + tail)
      const i64 n2 = *it * den + num, d2 = den;
      num = d2, den = n2;
    }
    return Slope(num, den);
  };
  for (const auto& r : support::hyperbolic_slopes(30)) {
    const auto layout = layout_cusp(r, geometric_evaluation(r));
    CHECK_MESSAGE(layout.fold_last == expected(continued_fraction(r).a), r.str());
  }
  const auto layout = layout_cusp(Slope(5, 17), geometric_evaluation(Slope(5, 17)));
  CHECK(layout.fold_last == Slope(1, 3));
  CHECK(check_simply_folded(layout, Slope(5, 17)).ok());
  CHECK_THROWS_AS(check_simply_folded(layout, Slope(2, 5)), DomainError);
}

TEST_CASE("non-geometric roots fail the layout tests") {
  const Slope r(5, 17);
  const auto P = trace_polynomial(r);
  const auto geo = geometric_evaluation(r).root();
  int rejected = 0;
  for (const auto& z : polynomial_roots(P)) {
    const cd x(double(z.real()), double(z.imag()));
    if (std::abs(x) < 1e-9 || std::abs(x - geo) < 1e-8 || std::abs(x + geo) < 1e-8) continue;
    try {
      const auto layout = layout_cusp(r, MarkoffEvaluation(r, x));
      rejected += !fold_report(layout).ok(1e-9);
    } catch (const NotGeometric&) {
      ++rejected;
    }
  }
  CHECK(rejected >= 8);
}

TEST_CASE("SVG output is deterministic") {
  const Slope r(3, 7);
  const auto layout = layout_cusp(r, geometric_evaluation(r));
  const auto a = render_svg(layout);
  const auto b = render_svg(layout_cusp(r, geometric_evaluation(r)));
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("viewBox") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  SvgOptions small;
  small.width = 200;
  small.longitude = false;
  CHECK(render_svg(layout, small) != a);
}
