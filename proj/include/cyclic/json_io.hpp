#pragma once

#include <json.hpp>
#include <string>

#include "cyclic/csp.hpp"

namespace cyclic {

using Json = nlohmann::json;

/* JSON schemas.
   Poly:    {"q": int, "p": int, "m": int, "coeffs": [int, ... ascending]}
            (extension fields reconstruct with the canonical modulus)
   Word:    {"n": int, "entries": [int, ...]}
   IntPoly: {"mod_n": int|null, "coeffs": [int|string, ... ascending]}
            (a coefficient too wide for int64 becomes a decimal string)   */

Json json_of(const Poly& p);
Poly poly_from_json(const Json& j);

Json json_of(const Word& w);
Word word_from_json(const Json& j);

Json json_of(const IntPoly& p);
IntPoly intpoly_from_json(const Json& j);

Json json_of(const CspReport& r);
CspReport csp_report_from_json(const Json& j);

Json json_of(const ScanRow& r);
ScanRow scan_row_from_json(const Json& j);

// CSV mirror of ScanRow; fixed column order.
std::string scan_csv_header();
std::string csv_of(const ScanRow& r);

}  // namespace cyclic
