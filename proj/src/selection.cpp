#include <algorithm>
#include <cmath>

#include "twobridge/cusp_geom.hpp"
#include "twobridge/markoff.hpp"
#include "twobridge/mcshane.hpp"

namespace tb {

MarkoffEvaluation RootSelection::evaluation() const {
  const auto& c = candidates.at(chosen);
  return MarkoffEvaluation(r, cd(double(c.x.real()), double(c.x.imag())));
}

namespace {

// Newton steps on the chain recursion, which is better conditioned than the
// expanded coefficients for larger denominators.
cld polish(const FareyChain& ch, cld x) {
  for (int k = 0; k < 4; ++k) {
    const auto [v, dv] = chain_value_and_derivative(ch, x);
    if (dv == cld(0)) break;
    const cld step = v / dv;
    x -= step;
    if (std::abs(step) <= 1e-19L * (1 + std::abs(x))) break;
  }
  return x;
}

bool same_census(const std::vector<CensusEntry>& a, const std::vector<CensusEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].s == b[i].s)) return false;
  return true;
}

void screen_depth(RootCandidate& cand, const EdgeSets& es, const MarkoffEvaluation& ev) {
  SeriesOptions opt;
  opt.eps = 1e-3;
  opt.tau = 1e-5;
  opt.adaptive = false;
  opt.throw_on_violation = false;
  opt.node_budget = 200'000;
  bool clean = true, stable = true;
  for (int j = 1; j <= 2; ++j) {
    opt.max_depth = 20;
    const auto deep = interval_series(es, ev, j, opt);
    opt.max_depth = 15;
    const auto shallow = interval_series(es, ev, j, opt);
    clean = clean && deep.violations.empty() && shallow.violations.empty();
    stable = stable && same_census(deep.census, shallow.census);
  }
  cand.no_real_short = clean;
  cand.census_stable = stable;
  cand.screened = true;
}

}  // namespace

RootSelection select_geometric_root(const std::vector<cld>& roots, const Slope& r) {
  require_hyperbolic(r);
  const FareyChain ch = farey_chain(r);
  const EdgeSets es = boundary_edge_sets(r);
  RootSelection sel;
  sel.r = r;

  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    RootCandidate cand;
    cand.x = roots[i];
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) <= 1e-7L * (1 + std::abs(roots[i]))) used[j] = true, ++cand.multiplicity;
    if (std::abs(cand.x) > 1e-9L) {
      cand.x = polish(ch, cand.x);
      const cd x(double(cand.x.real()), double(cand.x.imag()));
      const MarkoffEvaluation ev(r, x);
      bool nonvanishing = true;
      for (const auto& t : ch.triangles)
        for (const auto& v : t.v)
          if (!v.is_inf() && !(v == r) && std::abs(ev.phi(v)) < 1e-10) nonvanishing = false;
      cand.chain_nonvanishing = nonvanishing;
      if (nonvanishing) {
        const FiniteSums fs = finite_edge_sums(es, ev);
        cand.lambda_orbifold = 2.0 * fs.E1;
        cand.finite_identity = std::abs(fs.E1 + fs.E2 + 1.0) <= 1e-8;
        try {
          cand.oriented = layout_coherently_oriented(layout_cusp(r, ev));
        } catch (const NotGeometric&) {
          cand.oriented = false;
        }
        if (cand.finite_identity && cand.oriented) screen_depth(cand, es, ev);
      }
      cand.accepted = cand.chain_nonvanishing && cand.finite_identity && cand.oriented && cand.no_real_short &&
                      cand.census_stable && cand.lambda_orbifold.imag() > 0;
    }
    sel.candidates.push_back(cand);
  }

  // Accepted roots must share one value of lambda (x and -x give the same map up to sign).
  std::vector<std::size_t> acc;
  for (std::size_t i = 0; i < sel.candidates.size(); ++i)
    if (sel.candidates[i].accepted) acc.push_back(i);
  if (acc.empty()) throw NoGeometricRoot("no geometric root found for " + r.str());
  for (const auto i : acc)
    if (std::abs(sel.candidates[i].lambda_orbifold - sel.candidates[acc[0]].lambda_orbifold) > 1e-6)
      throw AmbiguousRoot("ambiguous selection: more than one root class survives for " + r.str());
  sel.chosen = *std::max_element(acc.begin(), acc.end(), [&](std::size_t a, std::size_t b) {
    const cld xa = sel.candidates[a].x, xb = sel.candidates[b].x;
    if (std::abs(xa.real() - xb.real()) > 1e-12L) return xa.real() < xb.real();
    return xa.imag() < xb.imag();
  });
  return sel;
}

RootSelection select_geometric_root(const Slope& r, Precision prec) {
  TracePolynomial poly = trace_polynomial(r);
  RootSelection sel = select_geometric_root(polynomial_roots(poly, prec), r);
  sel.poly = std::move(poly);
  return sel;
}

MarkoffEvaluation geometric_evaluation(const Slope& r, Precision prec) {
  return select_geometric_root(r, prec).evaluation();
}

IdentityReport cusp_shape(const Slope& r, const CuspShapeOptions& opt) {
  return identity_report(r, geometric_evaluation(r, opt.precision), opt);
}

}  // namespace tb
