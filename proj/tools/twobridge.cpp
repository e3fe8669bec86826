// Command-line front end: identity, cusp, longitude, endinv, batch.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "twobridge/io.hpp"

using namespace tb;

namespace {

struct Config {
  std::string r;
  double eps = 1e-8;
  int depth = -1;
  std::string orientation = "default";
  std::string format = "json";
  std::string out;
  std::string precision = "double";
  int pmin = 3, pmax = 20;
};

Precision precision_of(const Config& c) { return c.precision == "extended" ? Precision::Extended : Precision::Double; }
Orientation orientation_of(const Config& c) { return c.orientation == "reversed" ? Orientation::Reversed : Orientation::Default; }

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

CuspShapeOptions shape_options(const Config& c) {
  CuspShapeOptions o;
  o.eps = c.eps;
  o.max_depth = c.depth > 0 ? c.depth : 400;
  o.precision = precision_of(c);
  return o;
}

int cmd_identity(const Config& c) {
  const Slope r = Slope::parse(c.r);
  const IdentityReport rep = cusp_shape(r, shape_options(c));
  const bool finite_ok = rep.finite_residual() <= 1e-8 && rep.total_residual() <= 1e-8;
  const bool series_ok = rep.identity_residual() <= rep.tail_bound_1 + rep.tail_bound_2 + 1e-6;
  const bool agree1 = std::abs(rep.series_S1 - rep.finite_sum_E1) <= rep.tail_bound_1 + 1e-8;
  const bool agree2 = std::abs(rep.series_S2 - rep.finite_sum_E2) <= rep.tail_bound_2 + 1e-8;
  if (c.format == "csv") {
    emit(c, census_csv(rep));
  } else {
    json j = to_json(rep);
    j["assertions"] = {{"finite_identity", finite_ok}, {"series_identity", series_ok}, {"series_matches_E1", agree1},
                       {"series_matches_E2", agree2}, {"complete", !rep.partial}};
    emit(c, j.dump(2) + "\n");
  }
  return finite_ok && series_ok && agree1 && agree2 && !rep.partial ? 0 : 1;
}

int cmd_cusp(const Config& c) {
  const Slope r = Slope::parse(c.r);
  const MarkoffEvaluation ev = geometric_evaluation(r, precision_of(c));
  const CuspLayout layout = layout_cusp(r, ev);
  const FoldReport folds = fold_report(layout);
  const std::string svg = render_svg(layout);
  json j = to_json(layout);
  j["folds"] = to_json(folds);
  if (c.format == "svg") {
    emit(c, svg);
  } else if (!c.out.empty()) {
    std::ofstream(c.out, std::ios::binary) << svg;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return folds.ok() ? 0 : 4;
}

json longitude_json(const Slope& r, Orientation o) {
  const LongitudeClass lc = longitude_class(r, o);
  json coeffs = json::array();
  for (const auto& ab : lc.coefficients) coeffs.push_back({{"a", ab[0]}, {"b", ab[1]}});
  return {{"orientation", o == Orientation::Default ? "default" : "reversed"},
          {"delta", lc.delta},
          {"lk_formula", lc.lk_ell_K},
          {"lk_diagram", lc.lk_ell_K_diagram},
          {"lk_components", lc.lk_components},
          {"class", coeffs},
          {"remark_hypothesis", lc.remark_hypothesis},
          {"remark_conclusion", lc.remark_conclusion}};
}

int cmd_longitude(const Config& c) {
  const Slope r = Slope::parse(c.r);
  require_hyperbolic(r);
  const auto cf = continued_fraction(r);
  json j = {{"r", r.str()}, {"n", cf.length()}, {"a", cf.a}, {"components", num_components(r)}};
  const json chosen = longitude_json(r, orientation_of(c));
  for (auto it = chosen.begin(); it != chosen.end(); ++it) j[it.key()] = it.value();
  if (num_components(r) == 2) {
    j["orientations"] = {longitude_json(r, Orientation::Default), longitude_json(r, Orientation::Reversed)};
  }
  emit(c, j.dump(2) + "\n");
  return j["lk_formula"] == j["lk_diagram"] ? 0 : 1;
}

int cmd_endinv(const Config& c) {
  const Slope r = Slope::parse(c.r);
  const int depth = c.depth >= 0 ? c.depth : 6;
  if (depth > 12) throw DomainError("endinv depth is capped at 12");
  const auto rep = bowditch_L(r, depth);
  emit(c, to_json(rep).dump(2) + "\n");
  return 0;
}

int cmd_batch(const Config& c) {
  std::ostringstream os;
  json rows = json::array();
  os << kBatchCsvHeader << "\n";
  int failures = 0;
  for (int p = std::max(c.pmin, 2); p <= c.pmax; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const Slope r(q, p);
      if (!is_hyperbolic(r)) continue;
      const IdentityReport rep = cusp_shape(r, shape_options(c));
      const LongitudeClass lc = longitude_class(r, orientation_of(c));
      if (rep.identity_residual() > 1e-6) ++failures;
      os << "1," << r.str() << "," << rep.components << "," << format_double(rep.lambda_link.real()) << ","
         << format_double(rep.lambda_link.imag()) << "," << format_double(rep.lambda_orbifold.real()) << ","
         << format_double(rep.lambda_orbifold.imag()) << "," << lc.lk_ell_K << "," << lc.coefficients[0][1] << ","
         << format_double(rep.identity_residual()) << "," << format_double(rep.finite_residual()) << ","
         << format_double(rep.tail_bound_1) << "," << format_double(rep.tail_bound_2) << "\n";
      rows.push_back({{"r", r.str()},
                      {"components", rep.components},
                      {"lambda_link", to_json(rep.lambda_link)},
                      {"lambda_orbifold", to_json(rep.lambda_orbifold)},
                      {"lk", lc.lk_ell_K},
                      {"longitude_b", lc.coefficients[0][1]},
                      {"identity_residual", rep.identity_residual()}});
    }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : os.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markoff maps, McShane-type identities and cusp shapes of hyperbolic 2-bridge links"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool series) {
    sub->add_option("--out,-o", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    if (series) {
      sub->add_option("--eps", cfg.eps, "target tail bound")->check(CLI::PositiveNumber);
      sub->add_option("--depth", cfg.depth, "maximum traversal depth")->check(CLI::Range(1, 4000));
      sub->add_option("--precision", cfg.precision, "root finding precision")->check(CLI::IsMember({"double", "extended"}));
    }
    sub->add_option("--orientation", cfg.orientation, "link orientation")->check(CLI::IsMember({"default", "reversed"}));
  };

  auto* identity = app.add_subcommand("identity", "verify the identity and report cusp moduli");
  identity->add_option("r", cfg.r, "slope q/p")->required();
  common(identity, true);

  auto* cusp = app.add_subcommand("cusp", "lay out the cusp zigzag lines");
  cusp->add_option("r", cfg.r, "slope q/p")->required();
  common(cusp, true);

  auto* lon = app.add_subcommand("longitude", "linking numbers and the longitude class");
  lon->add_option("r", cfg.r, "slope q/p")->required();
  common(lon, false);

  auto* endinv = app.add_subcommand("endinv", "end invariants and exceptional cases");
  endinv->add_option("r", cfg.r, "slope q/p")->required();
  endinv->add_option("--depth", cfg.depth, "word length for gap enumeration")->check(CLI::Range(0, 12));
  common(endinv, false);

  auto* batch = app.add_subcommand("batch", "table over all hyperbolic q/p");
  batch->add_option("--pmin", cfg.pmin, "smallest denominator");
  batch->add_option("--pmax", cfg.pmax, "largest denominator")->check(CLI::Range(3, 200));
  common(batch, true);
  cfg.format = "json";

  CLI11_PARSE(app, argc, argv);
  if (batch->parsed() && batch->count("--format") == 0) cfg.format = "csv";

  try {
    if (identity->parsed()) return cmd_identity(cfg);
    if (cusp->parsed()) return cmd_cusp(cfg);
    if (lon->parsed()) return cmd_longitude(cfg);
    if (endinv->parsed()) return cmd_endinv(cfg);
    if (batch->parsed()) return cmd_batch(cfg);
  } catch (const NotHyperbolic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AmbiguousRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NoGeometricRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotGeometric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
