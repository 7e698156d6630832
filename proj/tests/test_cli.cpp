#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic/cli.hpp"
#include "cyclic/json_io.hpp"

using namespace cyclic;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the ternary one-orbit code flunks inv") {
  RunResult r = run({"csp", "check", "--pcheck", "x^2+x+2", "-q", "3", "-n",
                     "8", "--stat", "inv"});
  CHECK(r.code == 0);  // a negative verdict is still a successful run
  CHECK(contains(r.out, "holds: false"));
  CHECK(contains(r.out, "failing: 4,8"));
}

TEST_CASE("lfsr run prints one period per line") {
  RunResult r = run({"lfsr", "run", "--poly", "x^2+x+2", "-q", "3", "--seed",
                     "0,1", "--len", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,2,2,0,2,1,1\n");

  RunResult wrapped = run({"lfsr", "run", "--poly", "x^2+1", "-q", "3",
                           "--seed", "0,1", "--len", "10"});
  CHECK(wrapped.out == "0,1,0,2\n0,1,0,2\n0,1\n");
}

TEST_CASE("the degree-3 scan over F_5 keeps the known non-primitive match") {
  RunResult r = run({"scan", "characterization", "-q", "5", "-k", "3",
                     "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(contains(r.out,
                 "gperp,irreducible,primitive,order_x,cdes,wt,formula_match,"
                 "maj_csp,inv_csp\n"));
  CHECK(contains(r.out, "x^3+x+1,true,false,62,50,100,true,true,\n"));
  CHECK(contains(r.err, "match_iff_primitive: false"));
}

TEST_CASE("poly check reports primitivity and the order of x") {
  RunResult r = run({"poly", "check", "x^2+x+2", "-q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "poly: x^2+x+2\nq: 3\nirreducible: true\nprimitive: true\norder_x: 8\n");

  RunResult coeffs = run({"poly", "check", "-q", "3", "--coeffs", "2,1,1"});
  CHECK(coeffs.out == r.out);

  RunResult reducible = run({"poly", "check", "x^2+1", "-q", "2"});
  CHECK(contains(reducible.out, "irreducible: false"));
  CHECK(contains(reducible.out, "order_x: -"));
}

TEST_CASE("code words stream in enumeration order") {
  RunResult r = run({"code", "words", "--gen", "x+1", "-q", "3", "-n", "2"});
  CHECK(r.out == "0,0\n1,1\n2,2\n");
}

TEST_CASE("exit codes separate verdicts, failures, and usage errors") {
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"poly", "check", "x+1"}).code == 2);       // missing -q
  CHECK(run({"poly", "check", "x^2+", "-q", "3"}).code == 2);
  CHECK(run({"csp", "check", "-q", "3", "-n", "8"}).code == 2);  // no polynomial
  CHECK(run({"code", "info", "--gen", "x+1", "--pcheck", "x+1", "-q", "2",
             "-n", "2"})
            .code == 2);
  CHECK(run({"scan", "characterization", "-q", "6", "-k", "2"}).code == 2);
}

TEST_CASE("the enumeration cap comes from the environment") {
  setenv("CYCLIC_SIEVE_MAX_ENUM", "4", 1);
  RunResult r = run({"code", "words", "--gen", "x+1", "-q", "2", "-n", "5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "cap"));
  setenv("CYCLIC_SIEVE_MAX_ENUM", "počet", 1);
  CHECK(run({"poly", "check", "x+1", "-q", "2"}).code == 2);
  unsetenv("CYCLIC_SIEVE_MAX_ENUM");
  CHECK(run({"code", "words", "--gen", "x+1", "-q", "2", "-n", "5"}).code == 0);
}

TEST_CASE("identical invocations emit identical bytes") {
  std::vector<std::string> args = {"scan", "cyclic-codes", "-q",     "2",
                                   "-n",   "7",            "--stat", "inv",
                                   "--format", "json"};
  RunResult a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  CHECK(a.code == 0);
}

TEST_CASE("polynomial and word JSON round-trips") {
  Field f4 = Field::make(2, 2);
  Poly p = parse_poly(f4, "x^3+3x+2");
  CHECK(poly_from_json(json_of(p)) == p);
  Json pj = json_of(p);
  CHECK(pj["q"] == 4);
  CHECK(pj["p"] == 2);
  CHECK(pj["m"] == 2);

  Word w = {1, 1, 2, 0, 2, 2, 1, 0};
  CHECK(word_from_json(json_of(w)) == w);
  CHECK(json_of(w)["n"] == 8);

  CHECK_THROWS_AS(word_from_json(Json{{"n", 3}, {"entries", Json::array({1})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json{{"q", 5}, {"p", 2}, {"m", 2},
                                      {"coeffs", Json::array({1})}}),
                  std::invalid_argument);
}

TEST_CASE("integer polynomial JSON survives huge coefficients") {
  IntPoly small({BigInt(3), BigInt(0), BigInt(-2)}, 4);
  CHECK(intpoly_from_json(json_of(small)) == small);
  CHECK(json_of(small)["mod_n"] == 4);

  BigInt huge("123456789012345678901234567890");
  IntPoly wide({BigInt(1), huge});
  Json j = json_of(wide);
  CHECK(j["mod_n"].is_null());
  CHECK(j["coeffs"][1] == "123456789012345678901234567890");
  CHECK(intpoly_from_json(j) == wide);
}

TEST_CASE("csp reports and scan rows round-trip through JSON") {
  Field f3 = Field::make(3);
  CyclicCode code =
      CyclicCode::from_parity_check(parse_poly(f3, "x^2+x+2"), 8);
  CspReport rep = check_csp(code, StatKind::inv);
  CspReport back = csp_report_from_json(json_of(rep));
  CHECK(json_of(back).dump() == json_of(rep).dump());
  CHECK(back.holds == rep.holds);
  CHECK(back.stat_poly == rep.stat_poly);
  CHECK(back.failing == rep.failing);

  for (const ScanRow& row : scan_characterization(f3, 2)) {
    ScanRow there = scan_row_from_json(json_of(row));
    CHECK(json_of(there).dump() == json_of(row).dump());
  }
}

TEST_CASE("scan rows print fixed CSV columns") {
  Field f2 = Field::make(2);
  std::vector<ScanRow> rows = scan_characterization(f2, 3);
  REQUIRE(rows.size() == 2);
  CHECK(csv_of(rows[0]) == "x^3+x+1,true,true,7,2,4,true,true,true");
  CHECK(scan_csv_header() ==
        "gperp,irreducible,primitive,order_x,cdes,wt,formula_match,maj_csp,"
        "inv_csp");
}

TEST_CASE("csp check emits a report that parses back") {
  RunResult r = run({"csp", "check", "--pcheck", "x^2+x+2", "-q", "3", "-n",
                     "8", "--stat", "inv", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CspReport rep = csp_report_from_json(j);
  CHECK(rep.n == 8);
  CHECK(rep.kind == StatKind::inv);
  CHECK_FALSE(rep.holds);
  CHECK(rep.failing == std::vector<long long>({4, 8}));
  CHECK(json_of(rep).dump() == j.dump());
}

TEST_CASE("alphabet ordering flag changes the report header") {
  RunResult r = run({"csp", "check", "--pcheck", "x^2+x+2", "-q", "3", "-n",
                     "8", "--stat", "maj", "--order", "0,2,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "order: 0,2,1"));
  CHECK(contains(r.out, "holds: true"));
  CHECK(run({"csp", "check", "--pcheck", "x^2+x+2", "-q", "3", "-n", "8",
             "--order", "0,0,1"})
            .code == 2);
}
