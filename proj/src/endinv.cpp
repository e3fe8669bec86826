#include "twobridge/endinv.hpp"

#include <algorithm>

namespace tb {

double GapSystem::covered_length() const {
  double total = 0;
  for (const auto& g : gaps) {
    const double lo = std::max(0.0, g.lo.value()), hi = std::min(1.0, g.hi.value());
    if (hi > lo) total += hi - lo;
  }
  return total;
}

const Gap* GapSystem::find(const Slope& s) const {
  if (s.is_inf()) return nullptr;
  auto it = std::upper_bound(gaps.begin(), gaps.end(), s, [](const Slope& v, const Gap& g) { return v < g.lo; });
  if (it == gaps.begin()) return nullptr;
  --it;
  return (it->lo < s && s < it->hi) ? &*it : nullptr;
}

namespace {

void add_image(GapSystem& gs, const ReflectionWord& w, const Interval& base, int source) {
  Slope a = w.apply(base.lo), b = w.apply(base.hi);
  if (a.is_inf() || b.is_inf()) throw InternalError("gap endpoint mapped to infinity");
  if (b < a) std::swap(a, b);
  // the image of an interior point decides which arc is the image
  const Slope mid(checked_add(base.lo.num(), base.hi.num()), checked_add(base.lo.den(), base.hi.den()));
  const Slope m = w.apply(mid);
  if (m.is_inf() || !(a < m && m < b)) throw InternalError("gap image contains infinity");
  gs.gaps.push_back({a, b, w, source});
}

}  // namespace

GapSystem gap_intervals(const Slope& r, int depth) {
  if (depth < 0 || depth > 12) throw DomainError("gap depth must lie in [0, 12]");
  const ReflectionGroup G(r);
  const auto gens = ReflectionGroup::generators();
  GapSystem gs;
  gs.r = r;
  gs.depth = depth;
  // breadth-first over reduced words; the last letter prepended must differ
  struct Item {
    ReflectionWord w;
    int first;
  };
  std::vector<Item> layer{{ReflectionWord{}, -1}};
  for (int len = 0; len <= depth; ++len) {
    std::vector<Item> next;
    for (const auto& it : layer) {
      add_image(gs, it.w, G.intervals().I1, 1);
      add_image(gs, it.w, G.intervals().I2, 2);
      for (const Slope& c : {Slope::inf(), r}) {
        const Slope img = it.w.apply(c);
        if (!img.is_inf()) gs.cusp_points.push_back(img);
      }
      if (len == depth) continue;
      for (int k = 0; k < 4; ++k)
        if (k != it.first) next.push_back({G.extend(gens[std::size_t(k)], it.w), k});
    }
    layer = std::move(next);
  }
  std::sort(gs.gaps.begin(), gs.gaps.end(), [](const Gap& x, const Gap& y) { return x.lo < y.lo; });
  std::sort(gs.cusp_points.begin(), gs.cusp_points.end());
  gs.cusp_points.erase(std::unique(gs.cusp_points.begin(), gs.cusp_points.end()), gs.cusp_points.end());
  for (std::size_t i = 1; i < gs.gaps.size(); ++i)
    if (compare(gs.gaps[i].lo, gs.gaps[i - 1].hi) < 0) throw InternalError("gap intervals overlap");
  return gs;
}

bool is_end_invariant(const Slope& s, const Slope& r) {
  require_hyperbolic(r);
  return is_nullhomotopic(s, r);
}

Tri meets_limit_set(const Slope& lo, const Slope& hi, const GapSystem& gs) {
  if (!(lo < hi)) throw DomainError("empty interval");
  for (const auto& p : gs.cusp_points)
    if (lo < p && p < hi) return Tri::Yes;
  // closed tiles lie in the domain of discontinuity; follow a contiguous run
  Slope cur = lo;
  for (const auto& g : gs.gaps) {
    if (compare(g.lo, cur) <= 0 && cur < g.hi) cur = g.hi;
    if (compare(hi, cur) <= 0) return Tri::No;
  }
  return Tri::Unknown;
}

std::string to_string(EndCase c) {
  switch (c) {
    case EndCase::Generic: return "generic";
    case EndCase::TwoFifths: return "exceptional(1)";
    case EndCase::NOverTwoNPlusOne: return "exceptional(2)";
    case EndCase::TwoOverTwoNPlusOne: return "exceptional(3)";
  }
  return "?";
}

EndInvariantReport bowditch_L(const Slope& r, int depth) {
  require_hyperbolic(r);
  EndInvariantReport rep;
  rep.r = r;
  rep.mirrored = Slope(1, 2) < r;
  rep.normalized = rep.mirrored ? Slope(r.den() - r.num(), r.den()) : r;
  const i64 q = rep.normalized.num(), p = rep.normalized.den();
  std::vector<Slope> extra;
  if (q == 2 && p == 5) {
    rep.kase = EndCase::TwoFifths;
    extra = {Slope(1, 5), Slope(3, 5)};
  } else if (p == 2 * q + 1 && q >= 3) {
    rep.kase = EndCase::NOverTwoNPlusOne;
    extra = {Slope(q + 1, p)};
  } else if (q == 2 && p % 2 == 1 && (p - 1) / 2 >= 3) {
    rep.kase = EndCase::TwoOverTwoNPlusOne;
    extra = {Slope(1, p)};
  }
  for (const auto& s : extra) rep.extra_orbits.push_back(rep.mirrored ? Slope(s.den() - s.num(), s.den()) : s);
  std::sort(rep.extra_orbits.begin(), rep.extra_orbits.end());
  rep.gap_system = gap_intervals(r, depth);
  return rep;
}

}  // namespace tb
