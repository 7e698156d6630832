#include "cyclic/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cyclic/json_io.hpp"
#include "cyclic/lfsr.hpp"
#include "cyclic/verify.hpp"

namespace cyclic {
namespace {

const char* yn(bool v) { return v ? "true" : "false"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
    if (used != item.size())
      throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// -q takes the field order q = p^m; an optional explicit modulus (ascending
// coefficients) overrides the canonical one for extension fields.
Field field_from_q(long long q, const std::string& modulus) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int m = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1)
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  if (modulus.empty()) return Field::make(static_cast<int>(p), m);
  return Field::make(static_cast<int>(p), m, parse_int_list(modulus));
}

// Expression form ("x^2+2x+1") or coefficient form ("1,2,1"), exactly one.
Poly poly_arg(const Field& f, const std::string& expr,
              const std::string& coeffs, const std::string& what) {
  if (!expr.empty() && !coeffs.empty())
    throw std::invalid_argument(what +
                                ": give an expression or coefficients, not both");
  if (!expr.empty()) return parse_poly(f, expr);
  if (!coeffs.empty()) return poly_from_coeffs_text(f, coeffs);
  throw std::invalid_argument(what + ": missing polynomial");
}

AlphabetOrder order_arg(const Field& f, const std::string& order) {
  if (order.empty()) return AlphabetOrder::index_order(f);
  return AlphabetOrder::from_ascending(parse_int_list(order));
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size())
        out << std::string(width[c] - row[c].size(), ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string join_ll(const std::vector<long long>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void print_csp_text(std::ostream& out, const CspReport& rep) {
  out << "n: " << rep.n << '\n';
  out << "stat: " << to_string(rep.kind) << '\n';
  out << "order: " << word_str(rep.order) << '\n';
  out << "holds: " << yn(rep.holds) << '\n';
  out << "stat_poly: " << rep.stat_poly.str() << '\n';
  out << "orbit_poly: " << rep.orbit_poly.str() << '\n';
  out << "failing: " << (rep.failing.empty() ? "none" : join_ll(rep.failing, ','))
      << '\n';
  for (const CspDivisorRow& row : rep.rows) {
    out << "d=" << row.d << ": fixed=" << row.fixed_count << " residue=";
    for (std::size_t i = 0; i < row.residue.size(); ++i) {
      if (i) out << ',';
      out << row.residue[i];
    }
    out << '\n';
  }
}

struct CodeArgs {
  long long q = 0;
  std::string modulus;
  int n = 0;
  std::string gen, gen_coeffs, pcheck, pcheck_coeffs;

  void add_to(CLI::App* cmd, bool with_n = true) {
    cmd->add_option("-q", q, "field order p^m")->required();
    cmd->add_option("--modulus", modulus,
                    "extension field modulus, ascending coefficients");
    if (with_n)
      cmd->add_option("-n", n, "code length")->required();
    cmd->add_option("--gen", gen, "generator polynomial expression");
    cmd->add_option("--gen-coeffs", gen_coeffs,
                    "generator polynomial, ascending coefficients");
    cmd->add_option("--pcheck", pcheck, "parity check polynomial expression");
    cmd->add_option("--pcheck-coeffs", pcheck_coeffs,
                    "parity check polynomial, ascending coefficients");
  }

  CyclicCode build() const {
    Field f = field_from_q(q, modulus);
    bool has_gen = !gen.empty() || !gen_coeffs.empty();
    bool has_pcheck = !pcheck.empty() || !pcheck_coeffs.empty();
    if (has_gen == has_pcheck)
      throw std::invalid_argument("give exactly one of --gen or --pcheck");
    if (has_gen)
      return CyclicCode::from_generator(
          poly_arg(f, gen, gen_coeffs, "--gen"), n);
    return CyclicCode::from_parity_check(
        poly_arg(f, pcheck, pcheck_coeffs, "--pcheck"), n);
  }
};

void run_poly_check(std::ostream& out, const Field& f, const Poly& p,
                    const std::string& format) {
  bool irr = p.degree() >= 1 && is_irreducible(p);
  bool prim = irr && is_primitive(p);
  std::optional<long long> order;
  if (irr && p.coeff(0) != 0) order = order_of_x(p);
  if (format == "json") {
    Json j{{"poly", json_of(p)},
           {"irreducible", irr},
           {"primitive", prim},
           {"order_x", order ? Json(*order) : Json(nullptr)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "poly: " << p.str() << '\n';
  out << "q: " << f.q() << '\n';
  out << "irreducible: " << yn(irr) << '\n';
  out << "primitive: " << yn(prim) << '\n';
  out << "order_x: ";
  if (order) out << *order;
  else out << '-';
  out << '\n';
}

Json code_info_json(const CyclicCode& code) {
  return Json{{"q", code.field().q()},
              {"n", code.length()},
              {"k", code.dim()},
              {"generator", json_of(code.generator())},
              {"parity_check", json_of(code.parity_check())},
              {"size", code.size()},
              {"free_on_nonzero", is_free_on_nonzero(code)}};
}

void run_code_info(std::ostream& out, const CyclicCode& code,
                   const std::string& format) {
  if (format == "json") {
    out << code_info_json(code).dump(2) << '\n';
    return;
  }
  out << "q: " << code.field().q() << '\n';
  out << "n: " << code.length() << '\n';
  out << "k: " << code.dim() << '\n';
  out << "generator: " << code.generator().str() << '\n';
  out << "parity_check: " << code.parity_check().str() << '\n';
  out << "size: " << code.size() << '\n';
  out << "free_on_nonzero: " << yn(is_free_on_nonzero(code)) << '\n';
}

void run_code_words(std::ostream& out, const CyclicCode& code,
                    const std::string& format, std::size_t cap) {
  if (format == "json") {
    Json words = Json::array();
    code.for_each_codeword([&](const Word& w) { words.push_back(json_of(w)); },
                           cap);
    out << words.dump(2) << '\n';
    return;
  }
  code.for_each_codeword([&](const Word& w) { out << word_str(w) << '\n'; },
                         cap);
}

void run_code_orbits(std::ostream& out, const CyclicCode& code,
                     const std::string& format, std::size_t cap) {
  OrbitDecomposition dec = orbit_decomposition(code.codewords(cap));
  if (format == "json") {
    Json orbits = Json::array();
    for (const auto& orbit : dec.orbits) {
      Json words = Json::array();
      for (const Word& w : orbit) words.push_back(json_of(w));
      orbits.push_back(Json{{"size", orbit.size()}, {"words", words}});
    }
    out << orbits.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
    out << "orbit " << i + 1 << ": size " << dec.orbits[i].size() << ':';
    for (const Word& w : dec.orbits[i]) out << ' ' << word_str(w);
    out << '\n';
  }
}

void run_scan_characterization(std::ostream& out, std::ostream& err,
                               const Field& f, int k,
                               const std::string& format, std::size_t cap) {
  long long count = 0, irr = 0, prim = 0, match = 0;
  bool iff = true;
  auto tally = [&](const ScanRow& r) {
    ++count;
    irr += r.irreducible;
    prim += r.primitive;
    match += r.formula_match;
    iff = iff && r.formula_match == r.primitive;
  };
  auto summary = [&](std::ostream& dst) {
    dst << "rows: " << count << '\n'
        << "irreducible: " << irr << '\n'
        << "primitive: " << prim << '\n'
        << "formula_match: " << match << '\n'
        << "match_iff_primitive: " << yn(iff) << '\n';
  };

  if (format == "csv") {  // streamed row-by-row
    out << scan_csv_header() << '\n';
    scan_characterization(
        f, k,
        [&](const ScanRow& r) {
          tally(r);
          out << csv_of(r) << '\n' << std::flush;
        },
        cap);
    summary(err);
    return;
  }
  std::vector<ScanRow> rows = scan_characterization(f, k, cap);
  for (const ScanRow& r : rows) tally(r);
  if (format == "json") {
    Json arr = Json::array();
    for (const ScanRow& r : rows) arr.push_back(json_of(r));
    out << arr.dump(2) << '\n';
    summary(err);
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const ScanRow& r : rows) {
    cells.push_back({r.gperp.str(), yn(r.irreducible), yn(r.primitive),
                     std::to_string(r.order_x), std::to_string(r.cdes),
                     std::to_string(r.wt), yn(r.formula_match), yn(r.maj_csp),
                     r.inv_csp ? yn(*r.inv_csp) : "-"});
  }
  print_table(out,
              {"gperp", "irreducible", "primitive", "order_x", "cdes", "wt",
               "formula_match", "maj_csp", "inv_csp"},
              cells);
  out << '\n';
  summary(out);
}

void run_scan_cyclic_codes(std::ostream& out, std::ostream& err,
                           const Field& f, int n, StatKind kind,
                           const std::string& format, std::size_t cap) {
  long long count = 0, hold = 0;
  auto tally = [&](const CspReport& rep) {
    ++count;
    hold += rep.holds;
  };
  auto summary = [&](std::ostream& dst) {
    dst << "codes: " << count << '\n' << "hold: " << hold << '\n';
  };

  if (format == "csv") {  // streamed row-by-row
    out << "generator,k,stat,holds,failing\n";
    check_all_cyclic_codes(
        f, n, kind,
        [&](const Poly& gen, const CspReport& rep) {
          tally(rep);
          out << gen.str() << ',' << (n - gen.degree()) << ','
              << to_string(rep.kind) << ',' << yn(rep.holds) << ','
              << join_ll(rep.failing, ';') << '\n'
              << std::flush;
        },
        cap);
    summary(err);
    return;
  }
  auto reports = check_all_cyclic_codes(f, n, kind, cap);
  for (const auto& [gen, rep] : reports) tally(rep);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& [gen, rep] : reports)
      arr.push_back(Json{{"generator", json_of(gen)}, {"report", json_of(rep)}});
    out << arr.dump(2) << '\n';
    summary(err);
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& [gen, rep] : reports) {
    cells.push_back({gen.str(), std::to_string(n - gen.degree()),
                     to_string(rep.kind), yn(rep.holds),
                     rep.failing.empty() ? "-" : join_ll(rep.failing, ',')});
  }
  print_table(out, {"generator", "k", "stat", "holds", "failing"}, cells);
  out << '\n';
  summary(out);
}

int run_verify(std::ostream& out, const std::string& section) {
  int group = section == "all" ? 0 : std::stoi(section);
  int failed = 0;
  std::vector<CriterionResult> results = run_acceptance(group);
  for (const CriterionResult& r : results) {
    out << '[' << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name
        << " - " << r.detail << '\n';
    if (!r.pass) ++failed;
  }
  out << "criteria: " << results.size() << " run, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact arithmetic for cyclic codes, word statistics, and "
               "cyclic sieving"};
  app.name("csieve");
  app.require_subcommand(1);
  int exit_code = 0;

  std::size_t cap = kDefaultEnumCap;

  // poly check
  auto* poly_cmd = app.add_subcommand("poly", "polynomial facts");
  auto* poly_check = poly_cmd->add_subcommand("check",
                                              "irreducibility, primitivity, "
                                              "and the order of x");
  struct {
    std::string expr, coeffs, modulus, format = "text";
    long long q = 0;
  } pc;
  poly_check->add_option("poly", pc.expr, "polynomial expression");
  poly_check->add_option("-q", pc.q, "field order p^m")->required();
  poly_check->add_option("--coeffs", pc.coeffs, "ascending coefficients");
  poly_check->add_option("--modulus", pc.modulus,
                         "extension field modulus, ascending coefficients");
  poly_check->add_option("--format", pc.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  poly_check->callback([&] {
    Field f = field_from_q(pc.q, pc.modulus);
    run_poly_check(out, f, poly_arg(f, pc.expr, pc.coeffs, "poly"), pc.format);
  });

  // code info|words|orbits
  auto* code_cmd = app.add_subcommand("code", "cyclic code inspection");
  CodeArgs ci, cw, co;
  std::string ci_format = "text", cw_format = "text", co_format = "text";
  auto* code_info = code_cmd->add_subcommand("info", "dimensions and polynomials");
  ci.add_to(code_info);
  code_info->add_option("--format", ci_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  code_info->callback([&] { run_code_info(out, ci.build(), ci_format); });
  auto* code_words = code_cmd->add_subcommand("words", "list every codeword");
  cw.add_to(code_words);
  code_words->add_option("--format", cw_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  code_words->callback([&] { run_code_words(out, cw.build(), cw_format, cap); });
  auto* code_orbits = code_cmd->add_subcommand("orbits", "rotation orbits");
  co.add_to(code_orbits);
  code_orbits->add_option("--format", co_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  code_orbits->callback(
      [&] { run_code_orbits(out, co.build(), co_format, cap); });

  // csp check
  auto* csp_cmd = app.add_subcommand("csp", "cyclic sieving verdicts");
  auto* csp_check = csp_cmd->add_subcommand("check", "exact sieving check");
  CodeArgs cc;
  std::string cc_stat = "maj", cc_order, cc_format = "text";
  cc.add_to(csp_check);
  csp_check->add_option("--stat", cc_stat, "statistic: maj|inv|cdes|wt");
  csp_check->add_option("--order", cc_order,
                        "alphabet order, ascending element indices");
  csp_check->add_option("--format", cc_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  csp_check->callback([&] {
    CyclicCode code = cc.build();
    CspReport rep = check_csp(code, stat_kind_from(cc_stat),
                              order_arg(code.field(), cc_order), cap);
    if (cc_format == "json") out << json_of(rep).dump(2) << '\n';
    else print_csp_text(out, rep);
  });

  // lfsr run|period|window
  auto* lfsr_cmd = app.add_subcommand("lfsr", "linear feedback shift registers");
  struct {
    std::string poly, coeffs, modulus, seed;
    long long q = 0, len = 0;
  } lf;
  auto add_lfsr_opts = [&](CLI::App* cmd, bool with_seed, bool with_len) {
    cmd->add_option("--poly", lf.poly, "feedback polynomial expression");
    cmd->add_option("--coeffs", lf.coeffs, "ascending coefficients");
    cmd->add_option("-q", lf.q, "field order p^m")->required();
    cmd->add_option("--modulus", lf.modulus,
                    "extension field modulus, ascending coefficients");
    if (with_seed)
      cmd->add_option("--seed", lf.seed, "initial state, comma separated")
          ->required();
    if (with_len)
      cmd->add_option("--len", lf.len, "output length")->required();
  };
  auto lfsr_build = [&]() {
    Field f = field_from_q(lf.q, lf.modulus);
    return Lfsr(poly_arg(f, lf.poly, lf.coeffs, "--poly"));
  };
  auto* lfsr_run = lfsr_cmd->add_subcommand("run", "emit the output stream");
  add_lfsr_opts(lfsr_run, true, true);
  lfsr_run->callback([&] {
    Lfsr reg = lfsr_build();
    LfsrState seed = parse_word(reg.field(), lf.seed);
    if (lf.len <= 0) throw std::invalid_argument("--len must be positive");
    std::vector<int> seq = reg.sequence(seed, lf.len);
    long long per = lf.len;
    try {
      per = reg.period(seed);
    } catch (const std::domain_error&) {
    }
    for (long long i = 0; i < lf.len; i += per) {
      long long hi = std::min(lf.len, i + per);
      out << word_str(Word(seq.begin() + i, seq.begin() + hi)) << '\n';
    }
  });
  auto* lfsr_period = lfsr_cmd->add_subcommand("period", "least return time");
  add_lfsr_opts(lfsr_period, true, false);
  lfsr_period->callback([&] {
    Lfsr reg = lfsr_build();
    out << reg.period(parse_word(reg.field(), lf.seed)) << '\n';
  });
  auto* lfsr_window = lfsr_cmd->add_subcommand(
      "window", "does one period list every nonzero state window once");
  add_lfsr_opts(lfsr_window, false, false);
  lfsr_window->callback(
      [&] { out << yn(lfsr_build().window_property(cap)) << '\n'; });

  // scan characterization | cyclic-codes
  auto* scan_cmd = app.add_subcommand("scan", "exhaustive sweeps");
  struct {
    long long q = 0;
    int k = 0, n = 0;
    std::string modulus, stat = "maj", format = "text";
  } sc;
  auto* scan_char = scan_cmd->add_subcommand(
      "characterization", "all degree-k parity checks over F_q");
  scan_char->add_option("-q", sc.q, "field order p^m")->required();
  scan_char->add_option("-k", sc.k, "parity check degree")->required();
  scan_char->add_option("--modulus", sc.modulus,
                        "extension field modulus, ascending coefficients");
  scan_char->add_option("--format", sc.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  scan_char->callback([&] {
    run_scan_characterization(out, err, field_from_q(sc.q, sc.modulus), sc.k,
                              sc.format, cap);
  });
  auto* scan_codes = scan_cmd->add_subcommand(
      "cyclic-codes", "every cyclic code of length n over F_q");
  scan_codes->add_option("-q", sc.q, "field order p^m")->required();
  scan_codes->add_option("-n", sc.n, "code length")->required();
  scan_codes->add_option("--stat", sc.stat, "statistic: maj|inv|cdes|wt");
  scan_codes->add_option("--modulus", sc.modulus,
                         "extension field modulus, ascending coefficients");
  scan_codes->add_option("--format", sc.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  scan_codes->callback([&] {
    run_scan_cyclic_codes(out, err, field_from_q(sc.q, sc.modulus), sc.n,
                          stat_kind_from(sc.stat), sc.format, cap);
  });

  // verify-paper
  auto* verify_cmd =
      app.add_subcommand("verify-paper", "run the built-in verification suite");
  std::string section = "all";
  verify_cmd->add_option("--section", section, "3|4|all")
      ->check(CLI::IsMember({"3", "4", "all"}));
  verify_cmd->callback([&] { exit_code = run_verify(out, section); });

  try {
    if (const char* env = std::getenv("CYCLIC_SIEVE_MAX_ENUM")) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != std::string(env).size() || v == 0)
        throw std::invalid_argument(
            "CYCLIC_SIEVE_MAX_ENUM must be a positive integer");
      cap = static_cast<std::size_t>(v);
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace cyclic
