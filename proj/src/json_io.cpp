#include "cyclic/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cyclic {

namespace {

Json json_of_bigint(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or decimal string");
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
}

}  // namespace

Json json_of(const Poly& p) {
  const Field& f = p.field();
  return Json{{"q", f.q()}, {"p", f.p()}, {"m", f.m()}, {"coeffs", p.coeffs()}};
}

Poly poly_from_json(const Json& j) {
  require_object(j, "poly");
  Field f = Field::make(j.at("p").get<int>(), j.at("m").get<int>());
  if (j.contains("q") && j.at("q").get<int>() != f.q())
    throw std::invalid_argument("poly: q does not equal p^m");
  return Poly(f, j.at("coeffs").get<std::vector<int>>());
}

Json json_of(const Word& w) {
  return Json{{"n", static_cast<int>(w.size())}, {"entries", w}};
}

Word word_from_json(const Json& j) {
  require_object(j, "word");
  Word w = j.at("entries").get<Word>();
  if (j.at("n").get<int>() != static_cast<int>(w.size()))
    throw std::invalid_argument("word: n does not match the entry count");
  return w;
}

Json json_of(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(json_of_bigint(c));
  Json mod = p.mod_n() ? Json(*p.mod_n()) : Json(nullptr);
  return Json{{"mod_n", mod}, {"coeffs", coeffs}};
}

IntPoly intpoly_from_json(const Json& j) {
  require_object(j, "intpoly");
  std::vector<BigInt> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
  std::optional<int> mod;
  if (!j.at("mod_n").is_null()) mod = j.at("mod_n").get<int>();
  return IntPoly(std::move(coeffs), mod);
}

Json json_of(const CspReport& r) {
  Json rows = Json::array();
  for (const CspDivisorRow& row : r.rows) {
    Json residue = Json::array();
    for (const BigInt& c : row.residue) residue.push_back(json_of_bigint(c));
    rows.push_back(Json{{"d", row.d},
                        {"fixed_count", row.fixed_count},
                        {"residue", residue}});
  }
  return Json{{"n", r.n},
              {"stat", to_string(r.kind)},
              {"order", r.order},
              {"holds", r.holds},
              {"stat_poly", json_of(r.stat_poly)},
              {"orbit_poly", json_of(r.orbit_poly)},
              {"rows", rows},
              {"failing", r.failing}};
}

CspReport csp_report_from_json(const Json& j) {
  require_object(j, "csp report");
  CspReport r;
  r.n = j.at("n").get<int>();
  r.kind = stat_kind_from(j.at("stat").get<std::string>());
  r.order = j.at("order").get<std::vector<int>>();
  r.holds = j.at("holds").get<bool>();
  r.stat_poly = intpoly_from_json(j.at("stat_poly"));
  r.orbit_poly = intpoly_from_json(j.at("orbit_poly"));
  for (const Json& row : j.at("rows")) {
    CspDivisorRow d{row.at("d").get<long long>(),
                    row.at("fixed_count").get<long long>(),
                    {}};
    for (const Json& c : row.at("residue")) d.residue.push_back(bigint_from_json(c));
    r.rows.push_back(std::move(d));
  }
  r.failing = j.at("failing").get<std::vector<long long>>();
  return r;
}

Json json_of(const ScanRow& r) {
  Json inv = r.inv_csp ? Json(*r.inv_csp) : Json(nullptr);
  return Json{{"gperp", json_of(r.gperp)},
              {"irreducible", r.irreducible},
              {"primitive", r.primitive},
              {"order_x", r.order_x},
              {"cdes", r.cdes},
              {"wt", r.wt},
              {"formula_match", r.formula_match},
              {"maj_csp", r.maj_csp},
              {"inv_csp", inv}};
}

ScanRow scan_row_from_json(const Json& j) {
  require_object(j, "scan row");
  ScanRow r{poly_from_json(j.at("gperp")),
            j.at("irreducible").get<bool>(),
            j.at("primitive").get<bool>(),
            j.at("order_x").get<long long>(),
            j.at("cdes").get<long long>(),
            j.at("wt").get<long long>(),
            j.at("formula_match").get<bool>(),
            j.at("maj_csp").get<bool>(),
            {}};
  if (!j.at("inv_csp").is_null()) r.inv_csp = j.at("inv_csp").get<bool>();
  return r;
}

std::string scan_csv_header() {
  return "gperp,irreducible,primitive,order_x,cdes,wt,formula_match,maj_csp,inv_csp";
}

std::string csv_of(const ScanRow& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << r.gperp.str() << ',' << b(r.irreducible) << ',' << b(r.primitive) << ','
      << r.order_x << ',' << r.cdes << ',' << r.wt << ',' << b(r.formula_match)
      << ',' << b(r.maj_csp) << ',' << (r.inv_csp ? b(*r.inv_csp) : "");
  return out.str();
}

}  // namespace cyclic
