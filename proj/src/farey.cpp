#include "twobridge/farey.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace tb {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in slope arithmetic");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in slope arithmetic");
  return out;
}

Slope::Slope(i64 num, i64 den) {
  if (num == 0 && den == 0) throw DomainError("0/0 is not a slope");
  if (den == 0) return;  // inf
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

static i64 parse_int(std::string_view t) {
  i64 v = 0;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw DomainError("cannot parse integer '" + std::string(t) + "'");
  return v;
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "1/0") return Slope::inf();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

double Slope::value() const {
  return is_inf() ? std::numeric_limits<double>::infinity() : double(num_) / double(den_);
}

std::string Slope::str() const {
  if (is_inf()) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int compare(const Slope& a, const Slope& b) {
  if (a.is_inf() || b.is_inf()) return int(a.is_inf()) - int(b.is_inf());
  const __int128 l = __int128(a.num()) * b.den();
  const __int128 r = __int128(b.num()) * a.den();
  return (l > r) - (l < r);
}

bool farey_neighbours(const Slope& a, const Slope& b) {
  const __int128 d = __int128(a.num()) * b.den() - __int128(b.num()) * a.den();
  return d == 1 || d == -1;
}

i64 ContinuedFraction::sum() const { return std::accumulate(a.begin(), a.end(), i64{0}); }

ContinuedFraction continued_fraction(const Slope& r) {
  if (r.is_inf() || r.num() <= 0 || r.num() >= r.den())
    throw DomainError("continued_fraction expects 0 < r < 1, got " + r.str());
  ContinuedFraction cf;
  i64 q = r.num(), p = r.den();
  while (q != 0) {
    cf.a.push_back(p / q);
    const i64 rem = p % q;
    p = q;
    q = rem;
  }
  return cf;
}

Slope evaluate_cf(const std::vector<i64>& a) {
  if (a.empty()) throw DomainError("empty continued fraction");
  // value = n/d, folded from the back: v <- 1/(a_k + v)
  i64 n = 0, d = 1;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const i64 nd = checked_add(checked_mul(*it, d), n);
    n = d;
    d = nd;
  }
  return Slope(n, d);
}

bool is_hyperbolic(const Slope& r) {
  if (r.is_inf() || r.den() < 2) return false;
  const i64 q = ((r.num() % r.den()) + r.den()) % r.den();
  return q != 1 && q != r.den() - 1;
}

int num_components(const Slope& r) { return r.den() % 2 == 0 ? 2 : 1; }

void require_hyperbolic(const Slope& r) {
  if (r.is_inf() || r.num() <= 0 || r.num() >= r.den())
    throw DomainError("slope must lie in (0,1), got " + r.str());
  if (!is_hyperbolic(r))
    throw NotHyperbolic(r.str() + " is not hyperbolic: need q != +-1 mod p");
}

namespace {

Slope mediant(const Slope& a, const Slope& b) {
  return Slope(checked_add(a.num(), b.num()), checked_add(a.den(), b.den()));
}

Slope third_vertex(const FareyTriangle& t, const FareyTriangle& other) {
  for (const auto& v : t.v)
    if (!other.contains(v)) return v;
  throw InternalError("consecutive chain triangles do not share an edge");
}

}  // namespace

Slope FareyChain::dropped(std::size_t i) const { return third_vertex(triangles.at(i), triangles.at(i + 1)); }
Slope FareyChain::added(std::size_t i) const { return third_vertex(triangles.at(i + 1), triangles.at(i)); }

FareyChain farey_chain(const Slope& r) {
  FareyChain ch;
  ch.r = r;
  ch.cf = continued_fraction(r);
  ch.hyperbolic = is_hyperbolic(r);

  Slope L(0, 1), R(1, 1);
  ch.triangles.push_back({{L, R, Slope::inf()}});
  for (;;) {
    const Slope M = mediant(L, R);
    ch.triangles.push_back({{L, M, R}});
    if (M == r) break;
    if (r < M)
      R = M;
    else
      L = M;
  }
  if (i64(ch.triangles.size()) != ch.cf.sum()) throw InternalError("chain length differs from sum of partial quotients");

  auto count_containing = [&](const Slope& s) {
    return std::count_if(ch.triangles.begin(), ch.triangles.end(), [&](const FareyTriangle& t) { return t.contains(s); });
  };

  std::size_t first = 0;
  for (const i64 ak : ch.cf.a) {
    ChainBlock b;
    b.first = first;
    b.count = std::size_t(ak);
    const auto& t0 = ch.triangles[first];
    std::vector<Slope> candidates;
    // the pivot also lies on the triangles adjacent to the block
    const std::size_t lo = first == 0 ? 0 : first - 1;
    const std::size_t hi = std::min(first + b.count + 1, ch.triangles.size());
    for (const auto& v : t0.v) {
      bool in_all = true;
      for (std::size_t i = lo; i < hi; ++i) in_all = in_all && ch.triangles[i].contains(v);
      if (in_all && count_containing(v) >= 3) candidates.push_back(v);
    }
    if (candidates.size() != 1) throw InternalError("block pivot is not unique in chain for " + r.str());
    b.pivot = candidates.front();

    auto non_pivot = [&](const FareyTriangle& t) {
      std::vector<Slope> out;
      for (const auto& v : t.v)
        if (!(v == b.pivot)) out.push_back(v);
      return out;
    };
    const auto np0 = non_pivot(t0);
    Slope s0 = np0[0];
    if (b.count >= 2) {
      if (ch.triangles[first + 1].contains(s0)) s0 = np0[1];
    } else if (first > 0) {
      if (!ch.triangles[first - 1].contains(s0)) s0 = np0[1];
    } else if (first + 1 < ch.triangles.size() && ch.triangles[first + 1].contains(s0)) {
      s0 = np0[1];
    }
    b.others.push_back(s0);
    for (std::size_t i = first; i < first + b.count; ++i) {
      const auto np = non_pivot(ch.triangles[i]);
      b.others.push_back(np[0] == b.others.back() ? np[1] : np[0]);
    }
    ch.blocks.push_back(std::move(b));
    first += std::size_t(ak);
  }
  return ch;
}

bool Interval::contains(const Slope& s) const {
  return !s.is_inf() && compare(lo, s) <= 0 && compare(s, hi) <= 0;
}

bool Interval::contains_interior(const Slope& s) const {
  return !s.is_inf() && compare(lo, s) < 0 && compare(s, hi) < 0;
}

std::string Interval::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

FundamentalIntervals fundamental_intervals(const Slope& r) {
  require_hyperbolic(r);
  const auto cf = continued_fraction(r);
  const std::size_t n = cf.length();
  std::vector<i64> head(cf.a.begin(), cf.a.end() - 1);
  std::vector<i64> tail = head;
  tail.push_back(cf.a.back() - 1);
  Slope r1 = evaluate_cf(head), r2 = evaluate_cf(tail);
  if (n % 2 == 0) std::swap(r1, r2);
  FundamentalIntervals out{{Slope(0, 1), r1}, {r2, Slope(1, 1)}, r1, r2};
  if (!(r1 < r && r < r2)) throw InternalError("fundamental intervals do not separate " + r.str());
  return out;
}

i64 Matrix2::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

Slope Matrix2::apply(const Slope& s) const {
  return Slope(checked_add(checked_mul(a, s.num()), checked_mul(b, s.den())),
               checked_add(checked_mul(c, s.num()), checked_mul(d, s.den())));
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)), checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
          checked_add(checked_mul(c, o.a), checked_mul(d, o.c)), checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

Matrix2 Matrix2::inverse() const {
  const i64 D = det();
  if (D != 1 && D != -1) throw InternalError("matrix is not unimodular");
  return {d * D, -b * D, -c * D, a * D};
}

bool Matrix2::same_projective(const Matrix2& o) const {
  return (a == o.a && b == o.b && c == o.c && d == o.d) || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
}

std::string Letter::str() const {
  return std::string(factor == Factor::Inf ? "I" : "R") + std::to_string(n);
}

ReflectionGroup::ReflectionGroup(const Slope& r) : r_(r), iv_(fundamental_intervals(r)) {
  const i64 q = r.num(), p = r.den();
  const Slope& r2 = iv_.r2;
  const i64 D = q * r2.den() - r2.num() * p;
  g_ = {q, D * r2.num(), p, D * r2.den()};
  ginv_ = g_.inverse();
  if (g_.det() != 1 || !(g_.apply(Slope(1, 1)) == iv_.r1)) throw InternalError("normalizing matrix of Gamma_r is inconsistent");
}

Matrix2 ReflectionGroup::letter_matrix(const Letter& l) const {
  const Matrix2 refl{-1, checked_mul(2, l.n), 0, 1};
  if (l.factor == Letter::Factor::Inf) return refl;
  return g_ * refl * ginv_;
}

ReflectionWord ReflectionGroup::extend(const Letter& l, const ReflectionWord& w) const {
  ReflectionWord out;
  out.matrix = letter_matrix(l) * w.matrix;
  out.letters.reserve(w.letters.size() + 1);
  out.letters.push_back(l);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

std::array<Letter, 4> ReflectionGroup::generators() {
  using F = Letter::Factor;
  return {Letter{F::Inf, 0}, Letter{F::Inf, 1}, Letter{F::R, 0}, Letter{F::R, 1}};
}

namespace {

i64 floor_div(i64 n, i64 d) {
  i64 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

// Letters (in application order) of the element of the infinite dihedral
// group <z -> -z, z -> 2 - z> carrying the finite slope t into [0,1].
std::vector<i64> unit_normalizer(const Slope& t) {
  if (compare(t, Slope(0, 1)) >= 0 && compare(t, Slope(1, 1)) <= 0) return {};
  const i64 k = floor_div(t.num(), t.den());
  if (k % 2 == 0) return {k / 2, 0};  // z -> k - z, then w -> -w
  return {(k + 1) / 2};
}

// The word matrix can overflow long before the slopes do, so callers that only
// need s0 skip it.
Reduction reduce(const Slope& s, const ReflectionGroup& G, bool track_word) {
  using F = Letter::Factor;
  const auto& iv = G.intervals();
  Slope cur = s;
  std::vector<Letter> applied;
  Matrix2 m;
  i64 last_den = -1;

  auto apply_letter = [&](const Letter& l) {
    const Matrix2 lm = G.letter_matrix(l);
    cur = lm.apply(cur);
    if (track_word) {
      m = lm * m;
      applied.push_back(l);
    }
  };

  for (int step = 0;; ++step) {
    if (step > 10000) throw InternalError("reduce_slope did not terminate for " + s.str());
    if (cur.is_inf() || cur == G.r()) break;
    for (const i64 n : unit_normalizer(cur)) apply_letter({F::Inf, n});
    if (cur == G.r() || iv.I1.contains(cur) || iv.I2.contains(cur)) break;
    // cur lies in the gap (r1, r2) and is not r
    if (last_den >= 0 && cur.den() >= last_den) throw InternalError("reduce_slope: denominator failed to decrease");
    last_den = cur.den();
    const Slope t = G.g().inverse().apply(cur);
    for (const i64 n : unit_normalizer(t)) apply_letter({F::R, n});
  }
  Reduction out;
  out.s0 = cur;
  out.word.matrix = m;
  out.word.letters.assign(applied.rbegin(), applied.rend());
  return out;
}

}  // namespace

Reduction reduce_slope(const Slope& s, const Slope& r) { return reduce(s, ReflectionGroup(r), true); }

Reduction reduce_slope(const Slope& s, const ReflectionGroup& G) { return reduce(s, G, true); }

bool is_nullhomotopic(const Slope& s, const Slope& r) {
  const auto red = reduce(s, ReflectionGroup(r), false);
  return red.s0.is_inf() || red.s0 == r;
}

}  // namespace tb
