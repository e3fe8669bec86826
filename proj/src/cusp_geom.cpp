#include "twobridge/cusp_geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tb {

namespace {

long floor_div3(long j) { return j >= 0 ? j / 3 : -((-j + 2) / 3); }
std::size_t mod3(long j) { return std::size_t(j - 3 * floor_div3(j)); }

double signed_area(cd a, cd b, cd c) { return (std::conj(b - a) * (c - a)).imag() / 2.0; }

int index_of(const std::array<Slope, 3>& s, const Slope& v) {
  for (int k = 0; k < 3; ++k)
    if (s[std::size_t(k)] == v) return k;
  return -1;
}

}  // namespace

cd ZigzagLine::point(long j) const { return c[mod3(j)] + double(floor_div3(j)); }
const Slope& ZigzagLine::slope(long j) const { return slopes[mod3(j)]; }

CuspLayout layout_cusp(const Slope& r, const MarkoffEvaluation& ev) {
  require_hyperbolic(r);
  const FareyChain ch = farey_chain(r);
  const std::size_t c = ch.size();
  CuspLayout out;
  out.r = r;
  auto phi = [&](const Slope& s) {
    const cd v = ev.phi(s);
    if (std::abs(v) < 1e-12) throw NotGeometric("vanishing trace at chain vertex " + s.str());
    return v;
  };

  ZigzagLine line;
  line.triangle_index = 2;
  line.slopes = ch.triangles[1].v;
  {
    const auto& s = line.slopes;
    line.c[0] = 0.0;
    line.c[1] = line.c[0] + phi(s[2]) / (phi(s[0]) * phi(s[1]));
    line.c[2] = line.c[1] + phi(s[0]) / (phi(s[1]) * phi(s[2]));
  }
  out.lines.push_back(line);
  double amin = std::numeric_limits<double>::infinity(), amax = -amin;

  for (std::size_t i = 1; i + 2 < c; ++i) {
    const ZigzagLine& cur = out.lines.back();
    const Slope gone = ch.dropped(i);
    const Slope fresh = ch.added(i);
    const int d = index_of(cur.slopes, gone);
    if (d < 0) throw InternalError("dropped vertex missing from zigzag line");
    const long t = (d + 1) % 3;
    ZigzagLine nx;
    nx.triangle_index = i + 2;
    nx.slopes = {cur.slope(t), fresh, cur.slope(t + 1)};
    nx.c[0] = cur.point(t);
    nx.c[1] = nx.c[0] + phi(nx.slopes[2]) / (phi(nx.slopes[0]) * phi(fresh));
    nx.c[2] = cur.point(t + 1);
    const cd expect = phi(nx.slopes[0]) / (phi(fresh) * phi(nx.slopes[2]));
    out.max_gluing_error = std::max(out.max_gluing_error, std::abs((nx.c[2] - nx.c[1]) - expect));
    const double a1 = signed_area(cur.point(t), nx.c[1], cur.point(t + 1));
    const double a2 = signed_area(cur.point(t + 1), cur.point(t + 3), cur.point(t + 2));
    amin = std::min({amin, a1, a2});
    amax = std::max({amax, a1, a2});
    out.lines.push_back(nx);
  }
  if (out.max_gluing_error > 1e-8) throw NotGeometric("zigzag gluing mismatch " + std::to_string(out.max_gluing_error));
  out.min_area = amin;
  out.max_area = amax;

  out.fold_first = Slope(1, 2);
  out.fold_last = ch.dropped(c - 2);
  const ZigzagLine& first = out.lines.front();
  const ZigzagLine& last = out.lines.back();
  out.L_minus = first.point(index_of(first.slopes, out.fold_first) - 1).imag();
  out.L_plus = last.point(index_of(last.slopes, out.fold_last) - 1).imag();

  // Longitude: walk the E1 edges left to right inside their head lines.
  const EdgeSets es = boundary_edge_sets(r);
  cd cur = first.point(index_of(first.slopes, Slope(0, 1)));
  out.longitude_path.push_back(cur);
  out.longitude_slopes.push_back(Slope(0, 1));
  for (const auto& e : es.E1) {
    const ZigzagLine* head = nullptr;
    for (const auto& ln : out.lines)
      if (index_of(ln.slopes, e.s0) >= 0 && index_of(ln.slopes, e.s1) >= 0 && index_of(ln.slopes, e.s2) >= 0) head = &ln;
    if (!head) throw InternalError("no zigzag line for head triangle of " + e.s1.str() + "," + e.s2.str());
    long best = 0;
    double dist = std::numeric_limits<double>::infinity();
    const long base = index_of(head->slopes, e.s1);
    const long shift = long(std::floor(cur.real())) * 3;
    for (long j = base + shift - 9; j <= base + shift + 9; j += 3) {
      const double dj = std::abs(head->point(j) - cur);
      if (dj < dist) dist = dj, best = j;
    }
    if (dist > 1e-8) throw NotGeometric("longitude path does not close up along the zigzag lines");
    const long next = head->slope(best + 1) == e.s2 ? best + 1 : best - 1;
    cur = head->point(next);
    out.longitude_path.push_back(cur);
    out.longitude_slopes.push_back(e.s2);
  }
  out.lambda_half = out.longitude_path.back() - out.longitude_path.front();
  return out;
}

bool layout_coherently_oriented(const CuspLayout& layout, double tol) {
  return (layout.min_area > tol && layout.max_area > tol) || (layout.min_area < -tol && layout.max_area < -tol);
}

FoldReport fold_report(const CuspLayout& layout) {
  FoldReport rep;
  const ZigzagLine& first = layout.lines.front();
  const ZigzagLine& last = layout.lines.back();
  const long j1 = index_of(first.slopes, layout.fold_first);
  const long j2 = index_of(last.slopes, layout.fold_last);
  rep.fold_first = layout.fold_first;
  rep.fold_last = layout.fold_last;
  rep.fold_error_first = std::abs(first.point(j1 - 1) - first.point(j1 + 1));
  rep.fold_error_last = std::abs(last.point(j2 - 1) - last.point(j2 + 1));
  rep.L_minus = layout.L_minus;
  rep.L_plus = layout.L_plus;
  const double lo = std::min(layout.L_minus, layout.L_plus), hi = std::max(layout.L_minus, layout.L_plus);
  for (const auto& ln : layout.lines)
    for (const auto& p : ln.c) rep.strip_excess = std::max({rep.strip_excess, lo - p.imag(), p.imag() - hi});
  rep.oriented = layout_coherently_oriented(layout);
  return rep;
}

FoldReport check_simply_folded(const CuspLayout& layout, const Slope& r) {
  if (!(layout.r == r)) throw DomainError("layout belongs to a different slope");
  FoldReport rep = fold_report(layout);
  if (!rep.ok()) throw NotGeometric("layout not geometric");
  return rep;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string pt(cd z) { return num(z.real()) + "," + num(-z.imag()); }

}  // namespace

std::string render_svg(const CuspLayout& layout, const SvgOptions& opt) {
  const long jmax = 3L * std::max(1, opt.periods);
  double xmin = 0, xmax = 1, ymin = std::min(layout.L_minus, layout.L_plus), ymax = std::max(layout.L_minus, layout.L_plus);
  for (const auto& ln : layout.lines)
    for (long j = 0; j <= jmax; ++j) {
      const cd p = ln.point(j);
      xmin = std::min(xmin, p.real()), xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag()), ymax = std::max(ymax, p.imag());
    }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 1e-3;
  xmin -= pad, xmax += pad, ymin -= pad, ymax += pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\"" << opt.height
     << "\" viewBox=\"" << num(xmin) << " " << num(-ymax) << " " << num(xmax - xmin) << " " << num(ymax - ymin)
     << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  os << "<title>cusp zigzag lines for r = " << layout.r.str() << "</title>\n";
  os << "<g fill=\"none\" vector-effect=\"non-scaling-stroke\">\n";
  for (const double y : {layout.L_minus, layout.L_plus})
    os << "<line class=\"horizontal\" x1=\"" << num(xmin) << "\" y1=\"" << num(-y) << "\" x2=\"" << num(xmax) << "\" y2=\""
       << num(-y) << "\" stroke=\"#888888\" stroke-dasharray=\"0.02,0.02\" stroke-width=\"0.004\"/>\n";
  for (const auto& ln : layout.lines) {
    os << "<polyline class=\"zigzag\" data-triangle=\"" << ln.triangle_index << "\" stroke=\"#1f4e9e\" stroke-width=\"0.006\" points=\"";
    for (long j = 0; j <= jmax; ++j) os << (j ? " " : "") << pt(ln.point(j));
    os << "\"/>\n";
  }
  if (opt.longitude && layout.longitude_path.size() > 1) {
    os << "<polyline class=\"longitude\" stroke=\"#c0392b\" stroke-width=\"0.012\" points=\"";
    for (std::size_t k = 0; k < layout.longitude_path.size(); ++k) os << (k ? " " : "") << pt(layout.longitude_path[k]);
    os << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#c0392b\">\n";
  const std::pair<const ZigzagLine*, Slope> folds[] = {{&layout.lines.front(), layout.fold_first},
                                                       {&layout.lines.back(), layout.fold_last}};
  for (const auto& [ln, s] : folds)
    for (long j = 0; j <= jmax; ++j)
      if (ln->slope(j) == s)
        os << "<circle class=\"fold\" cx=\"" << num(ln->point(j).real()) << "\" cy=\"" << num(-ln->point(j).imag())
           << "\" r=\"0.012\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tb
