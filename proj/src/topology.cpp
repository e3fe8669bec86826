#include "twobridge/topology.hpp"

#include <algorithm>

namespace tb {

namespace {

int mate(const std::array<std::array<int, 2>, 2>& caps, int j) {
  for (const auto& c : caps) {
    if (c[0] == j) return c[1];
    if (c[1] == j) return c[0];
  }
  throw InternalError("plat cap lookup failed");
}

int through(int j, int i) { return j == i ? i + 1 : (j == i + 1 ? i : j); }

}  // namespace

PlatDiagram build_plat(const Slope& r, Orientation o) {
  PlatDiagram d;
  d.r = r;
  d.cf = continued_fraction(r);
  d.orientation = o;
  const std::size_t n = d.cf.length();
  for (std::size_t k = 1; k <= n; ++k)
    for (i64 t = 0; t < d.cf.a[k - 1]; ++t) {
      d.level_block.push_back(int(k));
      d.level_position.push_back(k % 2 == 1 ? 2 : 1);
    }
  const int N = int(d.level_block.size());
  const std::array<std::array<int, 2>, 2> top{{{1, 2}, {3, 4}}};
  const std::array<std::array<int, 2>, 2> bottom =
      n % 2 == 1 ? std::array<std::array<int, 2>, 2>{{{1, 2}, {3, 4}}} : std::array<std::array<int, 2>, 2>{{{1, 4}, {2, 3}}};
  d.nodes.assign(std::size_t(N + 1), {});
  auto node = [&](int s, int j) -> StrandState& { return d.nodes[std::size_t(s)][std::size_t(j - 1)]; };

  for (int start = 1; start <= 4; ++start) {
    if (node(0, start).component >= 0) continue;
    const int comp = d.components++;
    int s = 0, j = start, dir = 1;
    while (node(s, j).component < 0) {
      node(s, j) = {comp, dir};
      if (dir == 1) {
        if (s == N) {
          j = mate(bottom, j);
          dir = -1;
          continue;
        }
        j = through(j, d.level_position[std::size_t(s)]);
        ++s;
      } else {
        if (s == 0) {
          j = mate(top, j);
          dir = 1;
          continue;
        }
        j = through(j, d.level_position[std::size_t(s - 1)]);
        --s;
      }
    }
  }
  if (d.components != num_components(r)) throw InternalError("plat component count disagrees with denominator parity");
  if (o == Orientation::Reversed)
    for (auto& lvl : d.nodes)
      for (auto& st : lvl)
        if (st.component == d.components - 1) st.direction = -st.direction;

  for (int t = 0; t < N; ++t) {
    const int k = d.level_block[std::size_t(t)], i = d.level_position[std::size_t(t)];
    const StrandState a = node(t, i), b = node(t, i + 1);
    // a runs from position i to i+1 going down, b from i+1 to i.
    const int va[2] = {a.direction, -a.direction};
    const int vb[2] = {-b.direction, -b.direction};
    const bool a_over = k % 2 == 0;
    const int* ov = a_over ? va : vb;
    const int* un = a_over ? vb : va;
    const int cross = ov[0] * un[1] - ov[1] * un[0];
    d.crossings.push_back({k, t, i, cross > 0 ? 1 : -1, a.component != b.component});
  }
  return d;
}

std::vector<int> delta_vector(const PlatDiagram& d) {
  std::vector<int> delta;
  for (std::size_t k = 1; k <= d.cf.length(); ++k) {
    const auto it = std::find(d.level_block.begin(), d.level_block.end(), int(k));
    const std::size_t t = std::size_t(it - d.level_block.begin());
    const int i = d.level_position[t];
    const auto& a = d.nodes[t][std::size_t(i - 1)];
    const auto& b = d.nodes[t][std::size_t(i)];
    // Parallel in the sense of the twist region: the two strands run
    // through it in opposite vertical directions.
    delta.push_back(a.direction == b.direction ? 1 : 0);
  }
  return delta;
}

int linking_number_formula(const PlatDiagram& d) {
  const auto delta = delta_vector(d);
  int s = 0;
  for (std::size_t k = 0; k < delta.size(); ++k) s += delta[k] * (k % 2 == 0 ? 1 : -1) * int(d.cf.a[k]);
  return d.cf.length() % 2 == 1 ? 2 * s : 2 * (1 + s);
}

int linking_number_diagram(const PlatDiagram& d) {
  // The longitude is the blackboard pushoff corrected by one full twist per
  // crossing (sign (-1)^(k-1)) and, for n even, two more at the bottom bridge.
  int lk = 0;
  for (const auto& c : d.crossings) lk += c.sign + (c.block % 2 == 1 ? 1 : -1);
  if (d.cf.length() % 2 == 0) lk += 2;
  return lk;
}

int linking_number_components(const PlatDiagram& d) {
  int s = 0;
  for (const auto& c : d.crossings)
    if (c.mixed) s += c.sign;
  if (s % 2 != 0) throw InternalError("odd number of signed mixed crossings");
  return s / 2;
}

LongitudeClass longitude_class(const Slope& r, Orientation o) {
  const PlatDiagram d = build_plat(r, o);
  LongitudeClass lc;
  lc.components = d.components;
  lc.delta = delta_vector(d);
  lc.lk_ell_K = linking_number_formula(d);
  lc.lk_ell_K_diagram = linking_number_diagram(d);
  lc.lk_components = linking_number_components(d);
  if (lc.components == 1) {
    lc.coefficients.push_back({1, lc.lk_ell_K});
  } else {
    const int twice = lc.lk_ell_K - 2 * lc.lk_components;
    if (twice % 2 != 0) throw InternalError("longitude coefficient is not an integer");
    lc.coefficients.assign(2, {1, twice / 2});
  }
  const auto& a = d.cf.a;
  lc.remark_hypothesis = a.size() % 2 == 1 && std::all_of(a.begin(), a.end(), [](i64 x) { return x % 2 == 0; });
  lc.remark_conclusion = lc.lk_ell_K == 2;
  return lc;
}

}  // namespace tb
