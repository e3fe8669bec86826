#pragma once
#include <json.hpp>
#include <string>

#include "twobridge/cusp_geom.hpp"
#include "twobridge/endinv.hpp"
#include "twobridge/mcshane.hpp"
#include "twobridge/topology.hpp"

namespace tb {

using json = nlohmann::ordered_json;

json to_json(const Slope& s);
Slope slope_from_json(const json& j);
json to_json(cd z);  // [re, im]
cd complex_from_json(const json& j);

json to_json(const ContinuedFraction& cf);
json to_json(const FareyChain& ch);
json to_json(const TracePolynomial& p);
json to_json(const IdentityReport& rep);
IdentityReport identity_from_json(const json& j);
json to_json(const CuspLayout& layout);
json to_json(const FoldReport& rep);
json to_json(const RootSelection& sel);
json to_json(const GapSystem& gs);
json to_json(const EndInvariantReport& rep);

// Census table: slope, phi, complex length and h per row.
std::string census_csv(const IdentityReport& rep);

// Fixed batch CSV layout.
inline constexpr const char* kBatchCsvHeader =
    "version,r,components,lambda_re,lambda_im,lambda_orbifold_re,lambda_orbifold_im,lk,longitude_b,identity_residual,"
    "finite_residual,tail_1,tail_2";

std::string format_double(double v);

}  // namespace tb
