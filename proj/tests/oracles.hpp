#pragma once
// Reference computations that share no code path with the library.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using ll = long long;
using cd = std::complex<double>;

// ---------------------------------------------------------------------------
// Trace polynomials from Christoffel words.
//
// With A = [[x, 1], [-1, 0]] and B = diag(i, -i) we get tr A = x, tr B = 0 and
// tr AB = i x. Words for slopes in [0,1] are built by concatenation along the
// Stern-Brocot tree, W(a (+) b) = W(a) W(b), starting from W(0) = A and
// W(1) = AB. The trace of W(q/p) is then phi(q/p) by the Fricke trace identity.

struct GI {
  ll re = 0, im = 0;
};

inline ll add_ll(ll a, ll b) {
  ll r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}
inline ll mul_ll(ll a, ll b) {
  ll r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}

using Poly = std::vector<GI>;  // ascending degree

inline Poly padd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = {add_ll(r[k].re, a[k].re), add_ll(r[k].im, a[k].im)};
  for (std::size_t k = 0; k < b.size(); ++k) r[k] = {add_ll(r[k].re, b[k].re), add_ll(r[k].im, b[k].im)};
  return r;
}

inline Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const ll re = add_ll(mul_ll(a[i].re, b[j].re), -mul_ll(a[i].im, b[j].im));
      const ll im = add_ll(mul_ll(a[i].re, b[j].im), mul_ll(a[i].im, b[j].re));
      r[i + j] = {add_ll(r[i + j].re, re), add_ll(r[i + j].im, im)};
    }
  return r;
}

inline Poly trim(Poly p) {
  while (!p.empty() && p.back().re == 0 && p.back().im == 0) p.pop_back();
  return p;
}

using PMat = std::array<Poly, 4>;

inline PMat pmat_mul(const PMat& m, const PMat& n) {
  return {padd(pmul(m[0], n[0]), pmul(m[1], n[2])), padd(pmul(m[0], n[1]), pmul(m[1], n[3])),
          padd(pmul(m[2], n[0]), pmul(m[3], n[2])), padd(pmul(m[2], n[1]), pmul(m[3], n[3]))};
}

template <class M, class Mul>
M christoffel_matrix(ll q, ll p, const M& A, const M& AB, Mul mul) {
  // Stern-Brocot descent from (0/1, 1/1) to q/p in (0,1).
  ll ln = 0, ld = 1, rn = 1, rd = 1;
  M L = A, R = AB;
  while (true) {
    const ll mn = ln + rn, md = ld + rd;
    M W = mul(L, R);
    if (mn == q && md == p) return W;
    if (q * md < mn * p) {
      rn = mn, rd = md, R = W;
    } else {
      ln = mn, ld = md, L = W;
    }
  }
}

// Coefficients of phi(q/p) in x, ascending, as (re, im) pairs.
inline std::vector<std::pair<ll, ll>> christoffel_trace_polynomial(ll q, ll p) {
  const Poly x{{0, 0}, {1, 0}}, one{{1, 0}}, mone{{-1, 0}}, zero{};
  const PMat A{x, one, mone, zero};
  const PMat B{Poly{{0, 1}}, zero, zero, Poly{{0, -1}}};
  const PMat AB = pmat_mul(A, B);
  PMat W;
  if (q == 0 && p == 1) W = A;
  else if (q == 1 && p == 1) W = AB;
  else W = christoffel_matrix(q, p, A, AB, pmat_mul);
  const Poly t = trim(padd(W[0], W[3]));
  std::vector<std::pair<ll, ll>> out;
  for (const auto& c : t) out.emplace_back(c.re, c.im);
  return out;
}

using CMat = std::array<cd, 4>;

inline CMat cmat_mul(const CMat& m, const CMat& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

// phi(q/p) at a numeric x, for 0 <= q/p <= 1.
inline cd christoffel_phi(cd x, ll q, ll p) {
  const cd I(0, 1);
  const CMat A{x, 1.0, -1.0, 0.0};
  const CMat B{I, 0.0, 0.0, -I};
  const CMat AB = cmat_mul(A, B);
  if (q == 0) return x;
  if (q == p) return I * x;
  const CMat W = christoffel_matrix(q, p, A, AB, cmat_mul);
  return W[0] + W[3];
}

// ---------------------------------------------------------------------------
// Farey neighbours of q/p with smaller denominator, by exhaustive search.

using big = boost::multiprecision::cpp_int;

struct Frac {
  big n = 1, d = 0;  // d == 0 is infinity
  bool operator<(const Frac& o) const {
    if (d == 0 || o.d == 0) return d != 0 && o.d == 0;
    return n * o.d < o.n * d;
  }
  bool operator<=(const Frac& o) const { return !(o < *this); }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

inline Frac make_frac(big n, big d) {
  if (d == 0) return {1, 0};
  if (d < 0) n = -n, d = -d;
  const big g = boost::multiprecision::gcd(n, d);
  return {n / g, d / g};
}

// Machine-size fraction for small inputs.
struct Q {
  ll n, d;
  operator Frac() const { return {n, d}; }
};

inline std::pair<Q, Q> stern_brocot_parents(ll q, ll p) {
  std::vector<Q> found;
  for (ll d = 1; d < p; ++d)
    for (ll n = 0; n <= d; ++n)
      if (std::gcd(n, d) == 1 && (n * p - q * d == 1 || n * p - q * d == -1)) found.push_back({n, d});
  if (found.size() != 2) throw std::logic_error("expected two parents");
  if (found[1].n * found[0].d < found[0].n * found[1].d) std::swap(found[0], found[1]);
  return {found[0], found[1]};
}

// ---------------------------------------------------------------------------
// Orbit balls under reflections in Farey edges.

struct IMat {
  big a, b, c, d;
};

inline IMat imul(const IMat& m, const IMat& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

// Reflection fixing the Farey edge <u, v>: conjugate z -> -z by the matrix
// sending 0 -> v and inf -> u.
inline IMat edge_reflection(const Frac& u, const Frac& v) {
  const IMat g{u.n, v.n, u.d, v.d};
  const big det = g.a * g.d - g.b * g.c;
  if (det != 1 && det != -1) throw std::logic_error("not a Farey edge");
  const IMat ginv{g.d * det, -g.b * det, -g.c * det, g.a * det};
  return imul(imul(g, IMat{-1, 0, 0, 1}), ginv);
}

inline Frac apply(const IMat& m, const Frac& s) {
  return make_frac(m.a * s.n + m.b * s.d, m.c * s.n + m.d * s.d);
}

// Every point reachable from s by at most radius generator applications.
inline std::set<Frac> orbit_ball(const Frac& s, const std::vector<IMat>& gens, int radius) {
  std::set<Frac> seen{s};
  std::vector<Frac> frontier{s};
  for (int k = 0; k < radius; ++k) {
    std::vector<Frac> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        const Frac t = apply(g, f);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier.swap(next);
  }
  return seen;
}

// Closed fundamental set [0, r1] u [r2, 1] u {inf, r} of the reflection group.
inline bool in_fundamental_set(const Frac& f, const Frac& r, const Frac& r1, const Frac& r2) {
  if (f.d == 0 || f == r) return true;
  const Frac zero{0, 1}, one{1, 1};
  return (zero <= f && f <= r1) || (r2 <= f && f <= one);
}

// ---------------------------------------------------------------------------
// Cusp shapes of 2-bridge link exteriors with respect to the homological
// longitude, computed offline with SnapPy from RationalTangle(q, p). The
// representative with positive imaginary part is stored.

inline std::map<std::pair<ll, ll>, cd> load_reference_shapes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::pair<ll, ll>, cd> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string r, re, im;
    std::getline(ss, r, ',');
    std::getline(ss, re, ',');
    std::getline(ss, im, ',');
    const auto slash = r.find('/');
    out[{std::stoll(r.substr(0, slash)), std::stoll(r.substr(slash + 1))}] = cd(std::stod(re), std::stod(im));
  }
  return out;
}

}  // namespace oracle
