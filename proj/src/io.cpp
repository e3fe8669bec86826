#include "twobridge/io.hpp"

#include <cstdio>
#include <sstream>

namespace tb {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const Slope& s) { return s.str(); }
Slope slope_from_json(const json& j) { return Slope::parse(j.get<std::string>()); }
json to_json(cd z) { return json::array({z.real(), z.imag()}); }
cd complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json to_json(const ContinuedFraction& cf) { return cf.a; }

json to_json(const FareyChain& ch) {
  json tris = json::array();
  for (const auto& t : ch.triangles) tris.push_back({t.v[0].str(), t.v[1].str(), t.v[2].str()});
  json blocks = json::array();
  for (const auto& b : ch.blocks) {
    json others = json::array();
    for (const auto& s : b.others) others.push_back(s.str());
    blocks.push_back({{"pivot", b.pivot.str()}, {"others", others}});
  }
  return {{"r", ch.r.str()}, {"cf", ch.cf.a}, {"hyperbolic", ch.hyperbolic}, {"triangles", tris}, {"blocks", blocks}};
}

json to_json(const TracePolynomial& p) {
  json out = json::array();
  for (const auto& c : p.c) out.push_back({c.re.str(), c.im.str()});
  return out;
}

namespace {

json census_json(const std::vector<CensusEntry>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back({{"s", e.s.str()}, {"phi", to_json(e.phi)}});
  return out;
}

std::vector<CensusEntry> census_from_json(const json& j) {
  std::vector<CensusEntry> out;
  for (const auto& e : j) out.push_back({slope_from_json(e.at("s")), complex_from_json(e.at("phi"))});
  return out;
}

}  // namespace

json to_json(const IdentityReport& rep) {
  return {{"r", rep.r.str()},
          {"x", to_json(rep.x)},
          {"components", rep.components},
          {"finite_sum_E1", to_json(rep.finite_sum_E1)},
          {"finite_sum_E2", to_json(rep.finite_sum_E2)},
          {"finite_sum_all", to_json(rep.finite_sum_all)},
          {"series_S1", to_json(rep.series_S1)},
          {"series_S2", to_json(rep.series_S2)},
          {"tail_bound_1", rep.tail_bound_1},
          {"tail_bound_2", rep.tail_bound_2},
          {"identity_residual", rep.identity_residual()},
          {"finite_residual", rep.finite_residual()},
          {"lambda_orbifold", to_json(rep.lambda_orbifold)},
          {"lambda_link", to_json(rep.lambda_link)},
          {"lambda_link_I1", to_json(rep.lambda_link_I1)},
          {"lambda_link_I2", to_json(rep.lambda_link_I2)},
          {"depth_used", rep.depth_used},
          {"nodes", rep.nodes},
          {"partial", rep.partial},
          {"slopes_small_trace", census_json(rep.slopes_small_trace)},
          {"accidental_parabolics", census_json(rep.accidental_parabolics)}};
}

IdentityReport identity_from_json(const json& j) {
  IdentityReport rep;
  rep.r = slope_from_json(j.at("r"));
  rep.x = complex_from_json(j.at("x"));
  rep.components = j.at("components").get<int>();
  rep.finite_sum_E1 = complex_from_json(j.at("finite_sum_E1"));
  rep.finite_sum_E2 = complex_from_json(j.at("finite_sum_E2"));
  rep.finite_sum_all = complex_from_json(j.at("finite_sum_all"));
  rep.series_S1 = complex_from_json(j.at("series_S1"));
  rep.series_S2 = complex_from_json(j.at("series_S2"));
  rep.tail_bound_1 = j.at("tail_bound_1").get<double>();
  rep.tail_bound_2 = j.at("tail_bound_2").get<double>();
  rep.lambda_orbifold = complex_from_json(j.at("lambda_orbifold"));
  rep.lambda_link = complex_from_json(j.at("lambda_link"));
  rep.lambda_link_I1 = complex_from_json(j.at("lambda_link_I1"));
  rep.lambda_link_I2 = complex_from_json(j.at("lambda_link_I2"));
  rep.depth_used = j.at("depth_used").get<int>();
  rep.nodes = j.at("nodes").get<std::size_t>();
  rep.partial = j.at("partial").get<bool>();
  rep.slopes_small_trace = census_from_json(j.at("slopes_small_trace"));
  rep.accidental_parabolics = census_from_json(j.at("accidental_parabolics"));
  return rep;
}

json to_json(const CuspLayout& layout) {
  json lines = json::array();
  for (const auto& ln : layout.lines) {
    json pts = json::array();
    for (int j = 0; j < 3; ++j)
      pts.push_back({{"j", j}, {"slope", ln.slopes[std::size_t(j)].str()}, {"c", to_json(ln.c[std::size_t(j)])}});
    lines.push_back({{"triangle", ln.triangle_index}, {"points", pts}});
  }
  json path = json::array();
  for (std::size_t k = 0; k < layout.longitude_path.size(); ++k)
    path.push_back({{"slope", layout.longitude_slopes[k].str()}, {"c", to_json(layout.longitude_path[k])}});
  return {{"r", layout.r.str()},
          {"lines", lines},
          {"L_minus", layout.L_minus},
          {"L_plus", layout.L_plus},
          {"longitude_path", path},
          {"lambda_half", to_json(layout.lambda_half)},
          {"max_gluing_error", layout.max_gluing_error}};
}

json to_json(const FoldReport& rep) {
  return {{"fold_first", rep.fold_first.str()},
          {"fold_error_first", rep.fold_error_first},
          {"fold_last", rep.fold_last.str()},
          {"fold_error_last", rep.fold_error_last},
          {"L_minus", rep.L_minus},
          {"L_plus", rep.L_plus},
          {"strip_excess", rep.strip_excess},
          {"oriented", rep.oriented},
          {"ok", rep.ok()}};
}

json to_json(const RootSelection& sel) {
  json cands = json::array();
  for (const auto& c : sel.candidates)
    cands.push_back({{"x", {format_double(double(c.x.real())), format_double(double(c.x.imag()))}},
                     {"multiplicity", c.multiplicity},
                     {"chain_nonvanishing", c.chain_nonvanishing},
                     {"finite_identity", c.finite_identity},
                     {"oriented", c.oriented},
                     {"screened", c.screened},
                     {"no_real_short", c.no_real_short},
                     {"census_stable", c.census_stable},
                     {"lambda_orbifold", to_json(c.lambda_orbifold)},
                     {"accepted", c.accepted}});
  return {{"r", sel.r.str()}, {"polynomial", to_json(sel.poly)}, {"chosen", sel.chosen}, {"candidates", cands}};
}

json to_json(const GapSystem& gs) {
  json gaps = json::array();
  for (const auto& g : gs.gaps) {
    std::string word;
    for (const auto& l : g.word.letters) word += (word.empty() ? "" : " ") + l.str();
    gaps.push_back({{"lo", g.lo.str()}, {"hi", g.hi.str()}, {"source", g.source}, {"word", word}});
  }
  return {{"r", gs.r.str()}, {"depth", gs.depth}, {"covered_length", gs.covered_length()}, {"gaps", gaps}};
}

json to_json(const EndInvariantReport& rep) {
  json extra = json::array();
  for (const auto& s : rep.extra_orbits) extra.push_back(s.str());
  return {{"r", rep.r.str()},
          {"normalized", rep.normalized.str()},
          {"mirrored", rep.mirrored},
          {"case", to_string(rep.kase)},
          {"extra_orbits", extra},
          {"gap_system", to_json(rep.gap_system)}};
}

std::string census_csv(const IdentityReport& rep) {
  std::ostringstream os;
  os << "slope,phi_re,phi_im,l_re,l_im,h_re,h_im\n";
  for (const auto& e : rep.slopes_small_trace) {
    os << e.s.str() << "," << format_double(e.phi.real()) << "," << format_double(e.phi.imag());
    try {
      const auto l = translation_length(e.phi);
      const cd hv = l.parabolic ? cd(0.5) : h(e.phi);
      os << "," << format_double(l.value.real()) << "," << format_double(l.value.imag()) << "," << format_double(hv.real())
         << "," << format_double(hv.imag());
    } catch (const DomainError&) {
      os << ",,,,";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tb
