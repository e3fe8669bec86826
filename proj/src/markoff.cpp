#include "twobridge/markoff.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tb {

double MarkoffTriple::residual() const {
  const cd lhs = x * x + y * y + z * z;
  const cd rhs = x * y * z;
  const double scale = std::max({std::norm(x), std::norm(y), std::norm(z), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

MarkoffTriple edge_flip(const MarkoffTriple& t, int idx) {
  MarkoffTriple out = t;
  switch (idx) {
    case 0: out.x = t.y * t.z - t.x; break;
    case 1: out.y = t.x * t.z - t.y; break;
    case 2: out.z = t.x * t.y - t.z; break;
    default: throw DomainError("edge_flip index must be 0, 1 or 2");
  }
  return out;
}

// ---- Z[i][x] ----

static void trim(TracePolynomial& p) {
  while (p.c.size() > 1 && p.c.back().is_zero()) p.c.pop_back();
  if (p.c.empty()) p.c.push_back({});
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial out;
  out.c.assign(a.c.size() + b.c.size() - 1, {});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      auto& o = out.c[i + j];
      o.re += a.c[i].re * b.c[j].re - a.c[i].im * b.c[j].im;
      o.im += a.c[i].re * b.c[j].im + a.c[i].im * b.c[j].re;
    }
  }
  trim(out);
  return out;
}

TracePolynomial operator-(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial out;
  out.c.assign(std::max(a.c.size(), b.c.size()), {});
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    out.c[i].re -= b.c[i].re;
    out.c[i].im -= b.c[i].im;
  }
  trim(out);
  return out;
}

std::vector<cld> TracePolynomial::coefficients_ld() const {
  std::vector<cld> out;
  out.reserve(c.size());
  for (const auto& g : c) out.emplace_back(g.re.convert_to<long double>(), g.im.convert_to<long double>());
  return out;
}

cld TracePolynomial::evaluate(cld x) const {
  const auto co = coefficients_ld();
  cld acc = 0;
  for (auto it = co.rbegin(); it != co.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string TracePolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& g = c[std::size_t(k)];
    if (g.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << g.re << (g.im < 0 ? "-" : "+") << abs(g.im) << "i)";
    if (k > 0) os << "x^" << k;
  }
  if (first) os << "0";
  return os.str();
}

TracePolynomial trace_polynomial(const Slope& r, bool allow_nonhyperbolic) {
  if (!allow_nonhyperbolic) require_hyperbolic(r);
  const FareyChain ch = farey_chain(r);
  TracePolynomial P_inf{{GaussInt{}}};
  TracePolynomial P0{{GaussInt{}, GaussInt{1, 0}}};
  TracePolynomial P1{{GaussInt{}, GaussInt{0, 1}}};
  // edge (L, R) with opposite vertex, as in farey_chain
  TracePolynomial L = P0, R = P1, opp = P_inf;
  for (std::size_t i = 1; i < ch.size(); ++i) {
    TracePolynomial M = L * R - opp;
    if (i + 1 == ch.size()) return M;
    const Slope& m = ch.triangles[i].v[1];
    if (r < m) {
      opp = std::move(R);
      R = std::move(M);
    } else {
      opp = std::move(L);
      L = std::move(M);
    }
  }
  throw InternalError("chain too short for trace polynomial");
}

std::pair<cld, cld> chain_value_and_derivative(const FareyChain& ch, cld x) {
  const cld I(0, 1);
  cld L = x, dL = 1, R = I * x, dR = I, O = 0, dO = 0;
  for (std::size_t i = 1; i < ch.size(); ++i) {
    const cld M = L * R - O;
    const cld dM = dL * R + L * dR - dO;
    if (i + 1 == ch.size()) return {M, dM};
    if (ch.r < ch.triangles[i].v[1]) {
      O = R, dO = dR, R = M, dR = dM;
    } else {
      O = L, dO = dL, L = M, dL = dM;
    }
  }
  throw InternalError("chain too short");
}

// ---- roots ----

namespace {

template <class C, class Rl>
std::vector<C> aberth(const std::vector<C>& co, int max_iter, Rl tol) {
  using std::abs;
  const int n = int(co.size()) - 1;
  std::vector<C> z(static_cast<std::size_t>(n));
  if (n == 0) return z;
  // initial circle: geometric mean of root moduli
  const Rl r0 = pow(abs(co[0]) / abs(co[std::size_t(n)]), Rl(1) / Rl(n));
  const Rl pi = Rl(3.14159265358979323846264338327950288L);
  for (int k = 0; k < n; ++k) {
    const Rl ang = 2 * pi * Rl(k) / Rl(n) + Rl(0.4);
    z[std::size_t(k)] = C(r0 * cos(ang), r0 * sin(ang));
  }
  std::vector<bool> done(std::size_t(n), false);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[std::size_t(i)]) continue;
      const C zi = z[std::size_t(i)];
      C p = co[std::size_t(n)], dp = C(0);
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * zi + p;
        p = p * zi + co[std::size_t(k)];
      }
      if (abs(p) == 0) {
        done[std::size_t(i)] = true;
        continue;
      }
      const C ratio = p / dp;
      C s = C(0);
      for (int j = 0; j < n; ++j)
        if (j != i) s += C(1) / (zi - z[std::size_t(j)]);
      const C w = ratio / (C(1) - ratio * s);
      z[std::size_t(i)] = zi - w;
      if (abs(w) <= tol * (1 + abs(zi)))
        done[std::size_t(i)] = true;
      else
        all = false;
    }
    if (all) return z;
  }
  // Steps may stall at the rounding level; accept if every residual is small.
  Rl scale = 0;
  for (const auto& c : co) scale = std::max<Rl>(scale, abs(c));
  for (const auto& zi : z) {
    C p = co[std::size_t(n)];
    for (int k = n - 1; k >= 0; --k) p = p * zi + co[std::size_t(k)];
    if (abs(p) > Rl(1e-10) * scale * pow(1 + abs(zi), Rl(n)))
      throw ConvergenceError("Aberth iteration did not converge in " + std::to_string(max_iter) + " iterations");
  }
  return z;
}

template <class C>
C newton_polish(const std::vector<C>& co, C z, int steps) {
  using std::abs;
  const int n = int(co.size()) - 1;
  for (int s = 0; s < steps; ++s) {
    C p = co[std::size_t(n)], dp = C(0);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + co[std::size_t(k)];
    }
    if (abs(dp) == 0) break;
    z -= p / dp;
  }
  return z;
}

}  // namespace

std::vector<cld> polynomial_roots(const std::vector<cld>& coeffs_in, Precision prec) {
  std::vector<cld> co = coeffs_in;
  while (!co.empty() && co.back() == cld(0)) co.pop_back();
  if (co.size() < 2) throw DomainError("polynomial_roots needs degree >= 1");
  std::vector<cld> out;
  std::size_t low = 0;
  while (co[low] == cld(0)) ++low;
  out.assign(low, cld(0));
  co.erase(co.begin(), co.begin() + std::ptrdiff_t(low));
  if (co.size() == 1) return out;

  if (prec == Precision::Extended) {
    using C = boost::multiprecision::cpp_complex_50;
    using Rl = boost::multiprecision::cpp_bin_float_50;
    std::vector<C> cx;
    for (const auto& c : co) cx.emplace_back(Rl(c.real()), Rl(c.imag()));
    auto z = aberth<C, Rl>(cx, 1000, Rl("1e-35"));
    for (auto& zi : z) {
      zi = newton_polish(cx, zi, 3);
      out.emplace_back(zi.real().convert_to<long double>(), zi.imag().convert_to<long double>());
    }
  } else {
    auto z = aberth<cld, long double>(co, 1000, 1e-15L);
    for (auto& zi : z) out.push_back(newton_polish(co, zi, 3));
  }
  return out;
}

std::vector<cld> polynomial_roots(const TracePolynomial& p, Precision prec) {
  return polynomial_roots(p.coefficients_ld(), prec);
}

std::vector<RootInfo> root_report(const TracePolynomial& p, const std::vector<cld>& roots) {
  std::vector<RootInfo> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    RootInfo info{roots[i], 1, std::abs(p.evaluate(roots[i]))};
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= 1e-7L * (1 + std::abs(roots[i]))) {
        used[j] = true;
        ++info.multiplicity;
      }
    }
    out.push_back(info);
  }
  return out;
}

// ---- evaluation ----

namespace {

struct Rep {
  i64 n, d;
};

// Finite comparison of s against a signed representative with d > 0.
int cmp_rep(const Slope& s, const Rep& m) {
  const __int128 l = __int128(s.num()) * m.d, r = __int128(m.n) * s.den();
  return (l > r) - (l < r);
}

template <class Store>
cd walk(cd x, const Slope& s, Store&& store) {
  const cd I(0, 1);
  if (s.is_inf()) return 0.0;
  if (s == Slope(0, 1)) return x;
  if (s == Slope(1, 1)) return I * x;
  Rep a, b, c;
  cd fa, fb, fc;
  if (s.num() > 0 && s.num() < s.den()) {
    a = {0, 1}, b = {1, 1}, c = {1, 0};
    fa = x, fb = I * x, fc = 0.0;
  } else if (s.num() > s.den()) {
    a = {1, 1}, b = {1, 0}, c = {0, 1};
    fa = I * x, fb = 0.0, fc = x;
  } else {
    a = {-1, 0}, b = {0, 1}, c = {1, 1};
    fa = 0.0, fb = x, fc = I * x;
  }
  for (;;) {
    const Rep m{checked_add(a.n, b.n), checked_add(a.d, b.d)};
    const cd fm = fa * fb - fc;
    const int k = cmp_rep(s, m);
    if (k == 0) return fm;
    store(Slope(m.n, m.d), fm);
    if (k < 0) {
      c = b, fc = fb;
      b = m, fb = fm;
    } else {
      c = a, fc = fa;
      a = m, fa = fm;
    }
  }
}

}  // namespace

cd phi_at(cd x, const Slope& s) {
  return walk(x, s, [](const Slope&, cd) {});
}

MarkoffEvaluation::MarkoffEvaluation(const Slope& r, cd x) : r_(r), x_(x) {
  cache_.emplace(Slope::inf(), 0.0);
  cache_.emplace(Slope(0, 1), x);
  cache_.emplace(Slope(1, 1), cd(0, 1) * x);
}

cd MarkoffEvaluation::phi(const Slope& s) const {
  if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  if (sealed_) return phi_at(x_, s);
  const cd v = walk(x_, s, [this](const Slope& m, cd fm) { cache_.emplace(m, fm); });
  cache_.emplace(s, v);
  return v;
}

ComplexLength translation_length(cd phi) {
  const double scale = std::max(1.0, std::abs(phi));
  if (std::abs(phi - 2.0) <= 1e-12 * scale || std::abs(phi + 2.0) <= 1e-12 * scale) return {cd(0, 0), true};
  if (std::abs(phi.imag()) <= 1e-12 * scale && std::abs(phi.real()) < 2.0)
    throw DomainError("elliptic trace: phi is real in (-2,2)");
  cd l = 2.0 * std::acosh(phi / 2.0);
  if (l.real() < 0) l = -l;
  const double two_pi = 2 * std::numbers::pi;
  double im = std::remainder(l.imag(), two_pi);
  if (im <= -std::numbers::pi) im += two_pi;
  return {cd(l.real(), im), false};
}

}  // namespace tb
