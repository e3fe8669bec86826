#include "twobridge/mcshane.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace tb {

cd h(cd x) {
  if (x.imag() == 0.0 && std::abs(x.real()) <= 2.0) throw DomainError("h is undefined on the real segment [-2,2]");
  return 0.5 * (1.0 - std::sqrt(1.0 - 4.0 / (x * x)));
}

cd psi(const DirectedFareyEdge& e, const MarkoffEvaluation& ev) {
  const cd den = ev.phi(e.s1) * ev.phi(e.s2);
  if (den == 0.0) throw DomainError("psi: vanishing trace at " + e.s1.str() + " or " + e.s2.str());
  return ev.phi(e.s0) / den;
}

namespace {

Slope add_reps(const Slope& a, const Slope& b, int sign) {
  return Slope(checked_add(a.num(), sign * b.num()), checked_add(a.den(), sign * b.den()));
}

DirectedFareyEdge directed(const Slope& u, const Slope& v, const Slope& head_third) {
  DirectedFareyEdge e;
  e.s1 = u < v ? u : v;
  e.s2 = u < v ? v : u;
  e.s0 = head_third;
  const Slope plus = add_reps(e.s1, e.s2, 1);
  e.s3 = plus == head_third ? add_reps(e.s2, e.s1, -1) : plus;
  return e;
}

}  // namespace

EdgeSets boundary_edge_sets(const Slope& r) {
  require_hyperbolic(r);
  const FareyChain ch = farey_chain(r);
  const std::size_t c = ch.size();
  EdgeSets out;
  out.intervals = fundamental_intervals(r);
  out.e_minus = DirectedFareyEdge{Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope::inf()};
  {
    const auto& last = ch.triangles[c - 1];
    const Slope fold = ch.dropped(c - 2);
    std::vector<Slope> shared;
    for (const auto& v : last.v)
      if (!(v == r)) shared.push_back(v);
    out.e_plus = directed(shared[0], shared[1], fold);
    out.e_plus.s3 = r;
  }
  for (std::size_t i = 1; i + 1 < c; ++i) {
    const auto& t = ch.triangles[i];
    for (int k = 0; k < 3; ++k) {
      const Slope& u = t.v[std::size_t(k)];
      const Slope& v = t.v[std::size_t((k + 1) % 3)];
      const Slope& w = t.v[std::size_t((k + 2) % 3)];
      auto shares = [&](std::size_t j) { return ch.triangles[j].contains(u) && ch.triangles[j].contains(v); };
      if (shares(i - 1) || shares(i + 1)) continue;
      const auto e = directed(u, v, w);
      const Interval cut{e.s1, e.s2};
      if (out.intervals.I1.contains(cut.lo) && out.intervals.I1.contains(cut.hi))
        out.E1.push_back(e);
      else if (out.intervals.I2.contains(cut.lo) && out.intervals.I2.contains(cut.hi))
        out.E2.push_back(e);
      else
        throw InternalError("boundary edge " + cut.str() + " lies in neither fundamental interval");
    }
  }
  auto by_left = [](const DirectedFareyEdge& a, const DirectedFareyEdge& b) { return a.s1 < b.s1; };
  std::sort(out.E1.begin(), out.E1.end(), by_left);
  std::sort(out.E2.begin(), out.E2.end(), by_left);
  return out;
}

FiniteSums finite_edge_sums(const EdgeSets& es, const MarkoffEvaluation& ev) {
  FiniteSums fs;
  for (const auto& e : es.E1) fs.E1 += psi(e, ev);
  for (const auto& e : es.E2) fs.E2 += psi(e, ev);
  fs.all = fs.E1 + fs.E2 + psi(es.e_minus, ev) + psi(es.e_plus, ev);
  return fs;
}

FiniteSums finite_edge_sums(const Slope& r, const MarkoffEvaluation& ev) {
  return finite_edge_sums(boundary_edge_sets(r), ev);
}

namespace {

constexpr double kHBound = 1.08;  // |h(x)| <= kHBound / |x|^2 once |x| >= 4
constexpr double kFanBelow = 4.0;
constexpr double kParabolicTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kMaxFanSteps = 20'000'000;

// Neumaier compensated sum of complex terms.
struct CompensatedSum {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void add1(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  void add(cd z) {
    add1(re, cre, z.real());
    add1(im, cim, z.imag());
  }
  cd value() const { return {re + cre, im + cim}; }
};

struct Node {
  i64 n, d;
  cd phi;
};

double subtree_bound(double fa, double fb) {
  const double m = std::min(fa, fb);
  const double p = fa * fb;
  return 8.0 * kHBound / (p * p * (1.0 - 8.0 / (m * m)));
}

// Catalan numbers for the expansion h(u) = sum C_n u^{-2n-2}.
double catalan(int n) {
  double c = 1;
  for (int k = 0; k < n; ++k) c = c * 2.0 * (2.0 * k + 1.0) / (k + 2.0);
  return c;
}

class Engine {
 public:
  Engine(double tau, int max_depth, std::size_t budget) : tau_(tau), max_depth_(max_depth), budget_(budget) {}

  void endpoint(const Node& v) { visit(v, 1.0); }

  void subtree(const Node& a, const Node& b, const Node& c, int depth) {
    depth_used = std::max(depth_used, depth);
    const double fa = std::abs(a.phi), fb = std::abs(b.phi), fc = std::abs(c.phi);
    const bool provable = std::min(fa, fb) >= kFanBelow && fc <= fa * fb / 2;
    const double B = provable ? subtree_bound(fa, fb) : kInf;
    if (B <= tau_) {
      tail += B;
      return;
    }
    if (fa < kFanBelow || fb < kFanBelow) {
      if (fa <= fb)
        fan(a, b, c, depth);
      else
        fan(b, a, c, depth);
      return;
    }
    if (depth >= max_depth_ || nodes >= budget_) {
      partial = true;
      tail += B;
      return;
    }
    const Node m{checked_add(a.n, b.n), checked_add(a.d, b.d), a.phi * b.phi - c.phi};
    visit(m, 2.0);
    subtree(a, m, b, depth + 1);
    subtree(m, b, a, depth + 1);
  }

  CompensatedSum sum;
  double tail = 0;
  bool partial = false;
  int depth_used = 0;
  std::size_t nodes = 0;
  std::vector<CensusEntry> census, violations, parabolics;

 private:
  void visit(const Node& m, double weight) {
    ++nodes;
    const cd f = m.phi;
    const double af = std::abs(f);
    if (af <= 2.0 + kParabolicTol) census.push_back({Slope(m.n, m.d), f});
    if (std::abs(f - 2.0) <= kParabolicTol || std::abs(f + 2.0) <= kParabolicTol) {
      parabolics.push_back({Slope(m.n, m.d), f});
      sum.add(weight * 0.5);
      return;
    }
    if (std::abs(f.imag()) <= kParabolicTol * std::max(1.0, af) && std::abs(f.real()) < 2.0) {
      violations.push_back({Slope(m.n, m.d), f});
      return;
    }
    sum.add(weight * h(f));
  }

  // Fan of triangles around v, starting with edge (v, w) whose far vertex is c.
  void fan(const Node& v, const Node& w, const Node& c, int depth) {
    if (depth >= max_depth_) {
      partial = true;
      tail = kInf;
      return;
    }
    const cd t = v.phi;
    const bool parabolic = std::abs(t * t - 4.0) <= 4.0 * kParabolicTol;
    Node prev = w, pprev = c;
    for (long k = 1;; ++k) {
      if (nodes >= budget_ || k > kMaxFanSteps) {
        partial = true;
        tail = kInf;
        return;
      }
      const Node m{checked_add(v.n, prev.n), checked_add(v.d, prev.d), t * prev.phi - pprev.phi};
      visit(m, 2.0);
      subtree(m, prev, v, depth + 1);
      pprev = prev;
      prev = m;
      if (parabolic) {
        if (close_parabolic_fan(t, prev.phi, pprev.phi)) return;
      } else {
        const double B = loxodromic_fan_tail(t, prev.phi, pprev.phi);
        if (B <= tau_) {
          tail += B;
          return;
        }
      }
    }
  }

  // Bound for the rest of a loxodromic fan: visits u_j, j >= 1, and the side
  // subtrees between u_j and u_{j-1}. u0 is the newest value, um1 the one before.
  static double loxodromic_fan_tail(cd t, cd u0, cd um1) {
    const cd sq = std::sqrt(t * t - 4.0);
    cd mu = 0.5 * (t + sq);
    if (std::abs(mu) < 1.0) mu = 0.5 * (t - sq);
    const double rho = std::abs(mu);
    if (!(rho > 1.0 + 1e-12)) return kInf;
    const cd A = (um1 - mu * u0) / (1.0 / mu - mu);
    const cd Bc = u0 - A;
    const double L1 = std::abs(A) * rho - std::abs(Bc) / rho;
    const double a0 = std::abs(u0);
    if (L1 < kFanBelow || a0 < kFanBelow) return kInf;
    const double mmin = std::min(a0, L1);
    const double r2 = 1.0 / (rho * rho);
    const double visits = 2.0 * kHBound / (L1 * L1 * (1.0 - r2));
    const double first = 1.0 / ((L1 * a0) * (L1 * a0));
    const double rest = r2 / (L1 * L1 * L1 * L1 * (1.0 - r2 * r2));
    const double side = 8.0 * kHBound * (first + rest) / (1.0 - 8.0 / (mmin * mmin));
    return visits + side;
  }

  // u_j = s^j (A + B j) with s = +-1. Sums the visits in closed form once the
  // sequence is far enough along; returns false to keep iterating.
  bool close_parabolic_fan(cd t, cd u0, cd um1) {
    const double s = t.real() > 0 ? 1.0 : -1.0;
    const cd A = u0;
    const cd B = A - s * um1;
    const double bB = std::abs(B);
    if (bB == 0.0) return false;
    const cd z = A / B;
    const double a = z.real();
    if (a < 30.0 || bB * a < 8.0) return false;
    const double mmin = bB * a;
    const double side = 8.0 * kHBound / (bB * bB * bB * bB * (1.0 - 8.0 / (mmin * mmin))) *
                        (1.0 / (a * a * a * a) + 1.0 / (3.0 * a * a * a));
    if (side > tau_) return false;

    // sum_{j>=1} (z + j)^{-e} by Euler-Maclaurin from j = 1
    static constexpr std::array<double, 7> bern{1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    const cd z1 = z + 1.0;
    double em_err = 0;
    auto hurwitz = [&](int e) {
      cd acc = std::pow(z1, 1.0 - e) / double(e - 1) + 0.5 * std::pow(z1, double(-e));
      // f^{(m)}(1) = (-1)^m e(e+1)...(e+m-1) z1^{-e-m}
      double fact = 1;   // (2k)!
      double rising = e; // e(e+1)...(e+2k-2)
      for (int k = 1; k <= 7; ++k) {
        fact *= (2.0 * k - 1) * (2.0 * k);
        if (k > 1) rising *= double(e + 2 * k - 3) * double(e + 2 * k - 2);
        const cd term = bern[std::size_t(k - 1)] / fact * rising * std::pow(z1, double(-e - 2 * k + 1));
        if (k == 7) {
          em_err += 2.0 * std::abs(term);
          break;
        }
        acc += term;  // minus B_{2k}/(2k)! f^{(2k-1)}(1), and f^{(2k-1)} carries a minus sign
      }
      return acc;
    };
    CompensatedSum local;
    const double u1 = std::abs(A + B);
    double series_err = kInf;
    for (int n = 0; n < 200; ++n) {
      const int e = 2 * n + 2;
      const double Cn = catalan(n);
      const double before = em_err;
      const cd Hn = hurwitz(e);
      const double scale = 2.0 * Cn * std::pow(bB, double(-e));
      em_err = before + (em_err - before) * scale;
      local.add(2.0 * Cn * std::pow(B, double(-e)) * Hn);
      const double Cn1 = catalan(n + 1);
      const double ue = std::pow(u1, double(-(e + 2)));
      series_err = 2.0 * Cn1 * (ue + ue * u1 / (bB * double(e + 1))) / (1.0 - 4.0 / (u1 * u1));
      if (series_err < 1e-22) break;
    }
    sum.add(local.value());
    tail += side + series_err + em_err;
    return true;
  }

  double tau_;
  int max_depth_;
  std::size_t budget_;
};

Node node_of(const Slope& s, const MarkoffEvaluation& ev) { return {s.num(), s.den(), ev.phi(s)}; }

void dedupe(std::vector<CensusEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.s < b.s; });
  v.erase(std::unique(v.begin(), v.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.s == b.s; }), v.end());
}

SeriesResult run_once(const std::vector<DirectedFareyEdge>& edges, const MarkoffEvaluation& ev, double tau, const SeriesOptions& opt) {
  Engine eng(tau, opt.max_depth, opt.node_budget);
  for (const auto& e : edges) {
    const Node a = node_of(e.s1, ev), b = node_of(e.s2, ev), c = node_of(e.s0, ev);
    eng.endpoint(a);
    eng.endpoint(b);
    eng.subtree(a, b, c, 0);
  }
  SeriesResult res;
  res.sum = eng.sum.value();
  res.tail_bound = eng.tail;
  res.partial = eng.partial;
  res.depth_used = eng.depth_used;
  res.nodes = eng.nodes;
  res.tau = tau;
  res.census = std::move(eng.census);
  res.violations = std::move(eng.violations);
  res.parabolics = std::move(eng.parabolics);
  dedupe(res.census);
  dedupe(res.violations);
  dedupe(res.parabolics);
  return res;
}

}  // namespace

SeriesResult interval_series(const EdgeSets& es, const MarkoffEvaluation& ev, int j, const SeriesOptions& opt) {
  if (j != 1 && j != 2) throw DomainError("interval index must be 1 or 2");
  if (!(opt.eps > 0)) throw DomainError("eps must be positive");
  const auto& edges = j == 1 ? es.E1 : es.E2;
  double tau = opt.tau > 0 ? opt.tau : opt.eps * 1e-3;
  SeriesResult res;
  for (int pass = 0; pass < 12; ++pass) {
    res = run_once(edges, ev, tau, opt);
    if (!res.violations.empty() && opt.throw_on_violation)
      throw NotGeometric("real trace " + std::to_string(res.violations.front().phi.real()) + " at slope " +
                         res.violations.front().s.str());
    if (!opt.adaptive || res.partial || res.tail_bound <= opt.eps || !res.violations.empty()) break;
    tau *= std::clamp(0.5 * opt.eps / res.tail_bound, 1e-4, 0.5);
  }
  return res;
}

SeriesResult interval_series(const Slope& r, const MarkoffEvaluation& ev, int j, double eps, int max_depth) {
  SeriesOptions opt;
  opt.eps = eps;
  opt.max_depth = max_depth;
  return interval_series(boundary_edge_sets(r), ev, j, opt);
}

IdentityReport identity_report(const Slope& r, const MarkoffEvaluation& ev, const CuspShapeOptions& opt) {
  const EdgeSets es = boundary_edge_sets(r);
  IdentityReport rep;
  rep.r = r;
  rep.x = ev.root();
  rep.components = num_components(r);
  const FiniteSums fs = finite_edge_sums(es, ev);
  rep.finite_sum_E1 = fs.E1;
  rep.finite_sum_E2 = fs.E2;
  rep.finite_sum_all = fs.all;
  SeriesOptions so;
  so.eps = opt.eps;
  so.max_depth = opt.max_depth;
  const SeriesResult s1 = interval_series(es, ev, 1, so);
  const SeriesResult s2 = interval_series(es, ev, 2, so);
  rep.series_S1 = s1.sum;
  rep.series_S2 = s2.sum;
  rep.tail_bound_1 = s1.tail_bound;
  rep.tail_bound_2 = s2.tail_bound;
  rep.depth_used = std::max(s1.depth_used, s2.depth_used);
  rep.nodes = s1.nodes + s2.nodes;
  rep.partial = s1.partial || s2.partial;
  const double K = rep.components;
  rep.lambda_orbifold = 2.0 * fs.E1;
  rep.lambda_link = 2.0 * rep.lambda_orbifold / K;
  rep.lambda_link_I1 = 4.0 / K * s1.sum;
  rep.lambda_link_I2 = -4.0 / K * (s2.sum + 1.0);
  rep.slopes_small_trace = s1.census;
  rep.slopes_small_trace.insert(rep.slopes_small_trace.end(), s2.census.begin(), s2.census.end());
  rep.accidental_parabolics = s1.parabolics;
  rep.accidental_parabolics.insert(rep.accidental_parabolics.end(), s2.parabolics.begin(), s2.parabolics.end());
  return rep;
}

}  // namespace tb
