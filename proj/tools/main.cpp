// valence: exact arithmetic in truncated local fields, Hensel lifting,
// zero searches for homogeneous forms, a first-order evaluator over finite
// structures, finite ultraproducts, and the local-field transfer
// experiment.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "valence/forms.hpp"
#include "valence/hensel.hpp"
#include "valence/local.hpp"
#include "valence/logic.hpp"
#include "valence/structure_io.hpp"
#include "valence/transfer.hpp"
#include "valence/uprod.hpp"

using json = nlohmann::json;
using namespace valence;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDomain = 4;

long long default_budget() {
  if (const char* env = std::getenv("VALENCE_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return kDefaultEnumBudget;
}

json json_record(const char* command) {
  json j;
  j["version"] = 1;
  j["command"] = command;
  return j;
}

// Builds a univariate polynomial over a local ring from the text grammar.
// In series mode t appears in the coefficients; x (= x1) is the variable.
UniPoly<TruncatedLocal> local_unipoly(const std::string& text, const LocalRing* ring, int prec) {
  ParsedPoly parsed = parse_poly(text, 1);
  if (parsed.n_xvars > 1)
    throw domain_error(errc::invalid_input, "expected a univariate polynomial in x");
  if (parsed.t_used && ring->is_padic())
    throw domain_error(errc::invalid_input, "t is not a p-adic element");
  int tpos = parsed.t_used ? parsed.poly.nvars() - 1 : -1;
  int degree = 0;
  for (const auto& [e, c] : parsed.poly.terms()) degree = std::max(degree, e[0]);
  const FqField* rf = ring->residue_field();

  std::vector<TruncatedLocal> coeffs(degree + 1, TruncatedLocal::exact_zero(ring));
  for (int k = 0; k <= degree; ++k) {
    if (ring->is_padic()) {
      long long c = 0;
      for (const auto& [e, v] : parsed.poly.terms())
        if (e[0] == k) c += v;
      coeffs[k] = TruncatedLocal::from_int(ring, c, prec);
    } else {
      std::vector<FqElem> digits(prec + 1, rf->zero());
      for (const auto& [e, v] : parsed.poly.terms()) {
        if (e[0] != k) continue;
        int texp = tpos >= 0 ? e[tpos] : 0;
        if (texp <= prec) digits[texp] = digits[texp] + rf->from_int(v);
      }
      coeffs[k] = TruncatedLocal::from_digits(ring, 0, std::move(digits), prec);
    }
  }
  return UniPoly<TruncatedLocal>(std::move(coeffs));
}

// Multivariate form over a local ring from the text grammar.
MultiPoly<TruncatedLocal> local_form(const std::string& text, const LocalRing* ring, int prec) {
  ParsedPoly parsed = parse_poly(text);
  if (parsed.t_used && ring->is_padic())
    throw domain_error(errc::invalid_input, "t is not a p-adic element");
  int nvars = std::max(1, parsed.n_xvars);
  const FqField* rf = ring->residue_field();
  MultiPoly<TruncatedLocal> out(nvars);

  // collect coefficients per x-exponent vector
  std::map<std::vector<int>, std::map<int, long long>> buckets;  // xexp -> texp -> int
  for (const auto& [e, c] : parsed.poly.terms()) {
    int texp = parsed.t_used ? e.back() : 0;
    std::vector<int> xe(e.begin(), e.end() - (parsed.t_used ? 1 : 0));
    xe.resize(nvars, 0);
    buckets[xe][texp] += c;
  }
  for (const auto& [xe, by_t] : buckets) {
    if (ring->is_padic()) {
      long long c = 0;
      for (const auto& [te, v] : by_t) {
        if (te != 0) throw domain_error(errc::invalid_input, "t in a p-adic form");
        c += v;
      }
      out.add_term(xe, TruncatedLocal::from_int(ring, c, prec));
    } else {
      std::vector<FqElem> digits(prec + 1, rf->zero());
      for (const auto& [te, v] : by_t)
        if (te <= prec) digits[te] = digits[te] + rf->from_int(v);
      out.add_term(xe, TruncatedLocal::from_digits(ring, 0, std::move(digits), prec));
    }
  }
  return out;
}

std::string witness_text(const PrimitiveZero& w, const LocalRing* ring) {
  auto locals = w.as_locals(ring);
  std::string s = "(";
  for (std::size_t i = 0; i < locals.size(); ++i) {
    if (i) s += ", ";
    s += locals[i].to_string();
  }
  s += ")";
  return s;
}

json witness_json(const PrimitiveZero& w) {
  json coords = json::array();
  for (const auto& c : w.point) {
    json digits = json::array();
    for (const auto& d : c) digits.push_back(d.to_string());
    coords.push_back(digits);
  }
  return json{{"modulus_exponent", w.modulus_exponent}, {"digits", coords}};
}

// ---------------------------------------------------------------------------

int cmd_padic(std::int64_t p, std::int64_t num, std::int64_t den, int prec,
              const std::string& parse_text, bool as_json) {
  const LocalRing* ring = LocalRing::padic(p);
  TruncatedLocal x = parse_text.empty() ? TruncatedLocal::from_rational(ring, num, den, prec)
                                        : parse_local(ring, parse_text);
  if (as_json) {
    json j = json_record("padic");
    j["ring"] = ring->descriptor();
    j["value"] = x.to_string();
    if (!x.is_exact_zero() && !x.is_known_zero()) j["valuation"] = x.valuation().value;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << x.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_series(const std::string& field, const std::string& num, const std::string& den,
               int prec, const std::string& parse_text, bool as_json) {
  const LocalRing* ring = LocalRing::series(FqField::parse(field));
  const FqField* rf = ring->residue_field();
  TruncatedLocal x = TruncatedLocal::exact_zero(ring);
  if (!parse_text.empty()) {
    x = parse_local(ring, parse_text);
  } else {
    auto to_tpoly = [&](const std::string& text) {
      ParsedPoly parsed = parse_poly(text);
      if (parsed.n_xvars > 0)
        throw domain_error(errc::invalid_input, "series arguments are polynomials in t only");
      int deg = 0;
      for (const auto& [e, c] : parsed.poly.terms()) deg = std::max(deg, e.back());
      std::vector<FqElem> coeffs(deg + 1, rf->zero());
      for (const auto& [e, c] : parsed.poly.terms())
        coeffs[parsed.t_used ? e.back() : 0] = coeffs[parsed.t_used ? e.back() : 0] + rf->from_int(c);
      return UniPoly<FqElem>(std::move(coeffs));
    };
    x = TruncatedLocal::from_ratfunc(ring, to_tpoly(num), to_tpoly(den), prec);
  }
  if (as_json) {
    json j = json_record("series");
    j["ring"] = ring->descriptor();
    j["value"] = x.to_string();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << x.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_resultant(const std::string& ftext, const std::string& gtext, const std::string& field,
                  bool as_json) {
  auto to_uni = [&](const std::string& text) {
    ParsedPoly parsed = parse_poly(text, 1);
    if (parsed.n_xvars > 1 || parsed.t_used)
      throw domain_error(errc::invalid_input, "expected a univariate integer polynomial in x");
    int deg = 0;
    for (const auto& [e, c] : parsed.poly.terms()) deg = std::max(deg, e[0]);
    std::vector<long long> coeffs(deg + 1, 0);
    for (const auto& [e, c] : parsed.poly.terms()) coeffs[e[0]] += c;
    return UniPoly<long long>(std::move(coeffs));
  };
  UniPoly<long long> f = to_uni(ftext), g = to_uni(gtext);
  std::string result;
  if (field.empty()) {
    result = std::to_string(resultant(f, g));
  } else {
    const FqField* fq = FqField::parse(field);
    auto reduce = [&](const UniPoly<long long>& p) {
      std::vector<FqElem> c;
      for (auto v : p.coeffs()) c.push_back(fq->from_int(v));
      return UniPoly<FqElem>(std::move(c));
    };
    result = resultant(reduce(f), reduce(g)).to_string();
  }
  if (as_json) {
    json j = json_record("resultant");
    j["resultant"] = result;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << result << "\n";
  }
  return kExitOk;
}

int cmd_hensel(const std::string& ring_text, const std::string& ftext, const std::string& g0text,
               const std::string& h0text, int prec, bool as_json) {
  const LocalRing* ring = LocalRing::parse(ring_text);
  // first pass at the target precision to learn r, then rebuild with the
  // slack the iteration needs
  auto build = [&](int working) {
    return std::tuple{local_unipoly(ftext, ring, working), local_unipoly(g0text, ring, working),
                      local_unipoly(h0text, ring, working)};
  };
  auto [f0, g00, h00] = build(prec);
  HenselReport rep = check_hensel_hypotheses(f0, g00, h00);
  if (!rep.ok()) {
    if (as_json) {
      json j = json_record("hensel");
      j["hypotheses"] = {{"lead_ok", rep.lead_ok},
                         {"res_nonzero", rep.res_nonzero},
                         {"r", rep.r},
                         {"congruence_ok", rep.congruence_ok}};
      j["lifted"] = false;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "hypotheses fail: lead_ok=" << rep.lead_ok
                << " res_nonzero=" << rep.res_nonzero << " r=" << rep.r
                << " congruence_ok=" << rep.congruence_ok << "\n";
    }
    return kExitDomain;
  }
  auto [f, g0, h0] = build(prec + 2 * rep.r);
  LiftCertificate cert = hensel_lift(f, g0, h0, prec);
  auto poly_text = [&](const UniPoly<TruncatedLocal>& p) {
    return p.to_string("x");
  };
  if (as_json) {
    json j = json_record("hensel");
    j["ring"] = ring->descriptor();
    j["hypotheses"] = {{"lead_ok", true}, {"res_nonzero", true}, {"r", cert.r},
                       {"congruence_ok", true}};
    j["lifted"] = true;
    j["g"] = poly_text(cert.g);
    j["h"] = poly_text(cert.h);
    j["achieved_precision"] = cert.achieved_precision;
    j["iterations"] = cert.iterations;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "hypotheses: lead_ok=1 res_nonzero=1 r=" << cert.r << " congruence_ok=1\n"
              << "g = " << poly_text(cert.g) << "\n"
              << "h = " << poly_text(cert.h) << "\n"
              << "achieved precision: f = g*h mod pi^" << cert.achieved_precision + 1 << "\n"
              << "iterations: " << cert.iterations << "\n";
  }
  return kExitOk;
}

int cmd_zero(const std::string& ring_text, const std::string& form_text, int mod_power,
             int lift_depth, bool use_c2, long long budget, bool as_json) {
  const LocalRing* ring = LocalRing::parse(ring_text);
  int m = lift_depth >= 0 ? lift_depth : mod_power - 1;
  if (m < 0) throw domain_error(errc::invalid_input, "need --mod >= 1 or --lift-depth >= 0");
  MultiPoly<TruncatedLocal> f = local_form(form_text, ring, m + 2);

  std::optional<PrimitiveZero> w;
  std::string method;
  if (use_c2) {
    if (ring->is_padic())
      throw domain_error(errc::invalid_input, "--c2 applies to series rings only");
    method = "c2-series-pipeline";
    w = c2_witness_series(f, m, budget);
  } else if (lift_depth >= 0) {
    method = "lift-search";
    w = lift_zero_search(f, m, budget);
  } else {
    method = "enumeration";
    w = primitive_zero_mod(f, m, budget);
  }

  bool verified = w && verify_zero_mod(f, *w);
  if (as_json) {
    json j = json_record("zero");
    j["ring"] = ring->descriptor();
    j["modulus_exponent"] = m;
    j["method"] = method;
    j["found"] = w.has_value();
    if (w) {
      j["witness"] = witness_json(*w);
      j["verified"] = verified;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "method: " << method << ", modulo " << ring->pi_symbol() << "^" << (m + 1)
              << "\n";
    if (w) {
      std::cout << "witness: " << witness_text(*w, ring) << "\n"
                << "verification: evaluates to 0 mod " << ring->pi_symbol() << "^" << (m + 1)
                << (verified ? " [ok]" : " [FAILED]") << "\n";
    } else {
      std::cout << "no primitive zero exists at this modulus\n";
    }
  }
  return kExitOk;
}

int cmd_eval(const std::string& structure_spec, const std::string& formula_text,
             long long budget, bool as_json) {
  logic::FiniteStructure m = logic::structure_from_spec(structure_spec);
  logic::Formula f = logic::parse_formula(formula_text, m.language());
  if (!logic::is_sentence(f))
    throw domain_error(errc::invalid_input, "eval expects a sentence (no free variables)");
  bool truth = logic::satisfies(m, f, {}, budget);
  if (as_json) {
    json j = json_record("eval");
    j["formula"] = logic::print_formula(f);
    j["truth"] = truth;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (truth ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_los(const std::vector<std::string>& specs, const std::string& ultra_text,
            const std::string& formula_text, long long budget, bool as_json) {
  std::vector<logic::FiniteStructure> structures;
  for (const auto& s : specs) structures.push_back(logic::structure_from_spec(s));
  if (structures.empty()) throw domain_error(errc::invalid_input, "no structures given");

  logic::SetFamily ultra;
  if (ultra_text.rfind("principal:", 0) == 0) {
    int j = std::stoi(ultra_text.substr(10));
    ultra = logic::principal_filter(static_cast<int>(structures.size()), j);
  } else {
    throw domain_error(errc::invalid_input,
                       "unsupported ultrafilter spec (use principal:<index>)");
  }
  logic::Formula f = logic::parse_formula(formula_text, structures[0].language());
  auto rep = logic::los_check(structures, ultra, f, budget);
  if (as_json) {
    json j = json_record("los");
    j["product_truth"] = rep.product_truth;
    j["index_truth_set"] = rep.index_truth_set;
    j["set_in_ultrafilter"] = rep.set_in_ultrafilter;
    j["agree"] = rep.agree;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "product |= phi: " << (rep.product_truth ? "true" : "false") << "\n";
    std::cout << "factor truth set: {";
    bool first = true;
    for (std::size_t i = 0; i < structures.size(); ++i)
      if (rep.index_truth_set & (1ull << i)) {
        if (!first) std::cout << ",";
        std::cout << i;
        first = false;
      }
    std::cout << "}\n";
    std::cout << "set in ultrafilter: " << (rep.set_in_ultrafilter ? "yes" : "no") << "\n";
    std::cout << "agreement: " << (rep.agree ? "yes" : "NO") << "\n";
  }
  return kExitOk;
}

int cmd_transfer(const TransferConfig& cfg, bool as_json) {
  auto rows = run_transfer(cfg);
  bool all_agree = true;
  for (const auto& row : rows) {
    if (as_json) {
      json j = json_record("transfer");
      j["p"] = row.p;
      j["degree"] = cfg.degree;
      j["trials"] = cfg.trials;
      j["modulus_exponent"] = cfg.precision;
      j["both"] = row.both;
      j["only_series"] = row.only_series;
      j["only_padic"] = row.only_padic;
      j["neither"] = row.neither;
      j["budget"] = row.budget;
      json dis = json::array();
      for (const auto& d : row.disagreements)
        dis.push_back({{"trial", d.trial},
                       {"form", d.form_text},
                       {"padic_found", d.padic_found},
                       {"series_found", d.series_found},
                       {"budget_hit", d.budget_hit}});
      j["disagreements"] = dis;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "p=" << row.p << "  both=" << row.both << "  only_series=" << row.only_series
                << "  only_padic=" << row.only_padic << "  neither=" << row.neither
                << "  budget=" << row.budget << "\n";
      for (const auto& d : row.disagreements)
        std::cout << "  disagreement trial " << d.trial << ": series="
                  << (d.series_found ? "found" : "absent")
                  << " padic=" << (d.padic_found ? "found" : "absent")
                  << (d.budget_hit ? " (budget)" : "") << "  form: " << d.form_text << "\n";
    }
    all_agree = all_agree && row.only_series == 0 && row.only_padic == 0 && row.budget == 0;
  }
  if (!as_json)
    std::cout << (all_agree ? "all trials agree across the two completions\n"
                            : "disagreements recorded above\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "valence: exact truncated local-field arithmetic, Hensel lifting, homogeneous zero "
      "searches, first-order evaluation over finite structures, finite ultraproducts, and "
      "the two-completion transfer experiment"};
  app.require_subcommand(1);
  long long budget = default_budget();

  // padic
  auto* padic = app.add_subcommand("padic", "expand a rational in Q_p or reprint a digit form");
  std::int64_t pp = 5, pnum = 1, pden = 1;
  int pprec = 4;
  std::string pparse;
  bool pjson = false;
  padic->add_option("--p", pp, "prime p")->required();
  padic->add_option("--num", pnum, "numerator");
  padic->add_option("--den", pden, "denominator");
  padic->add_option("--prec", pprec, "precision m (digits through pi^m)");
  padic->add_option("--parse", pparse, "reprint a p-adic text form like '3 + 1*7 + O(7^2)'");
  padic->add_flag("--json", pjson, "line-delimited JSON output");

  // series
  auto* series = app.add_subcommand("series", "Laurent expansion of a rational function");
  std::string sfield = "F_3", snum = "1", sden = "1", sparse;
  int sprec = 4;
  bool sjson = false;
  series->add_option("--field", sfield, "coefficient field, e.g. F_3 or F_3^2")->required();
  series->add_option("--num", snum, "numerator polynomial in t");
  series->add_option("--den", sden, "denominator polynomial in t");
  series->add_option("--prec", sprec, "precision m (digits through t^m)");
  series->add_option("--parse", sparse, "reprint a series text form like '2*t^-1 + 1 + O(t^2)'");
  series->add_flag("--json", sjson, "line-delimited JSON output");

  // resultant
  auto* res = app.add_subcommand("resultant", "resultant of univariate polynomials");
  std::string rf, rg, rfield;
  bool rjson = false;
  res->add_option("--f", rf, "first polynomial, e.g. 'x^2-1'")->required();
  res->add_option("--g", rg, "second polynomial")->required();
  res->add_option("--field", rfield, "optional coefficient field F_p (default: integers)");
  res->add_flag("--json", rjson, "line-delimited JSON output");

  // hensel
  auto* hen = app.add_subcommand("hensel", "factorization lifting over a local ring");
  std::string hring = "7adic", hf, hg0, hh0;
  int hprec = 4;
  bool hjson = false;
  hen->add_option("--ring", hring, "ring descriptor: 7adic, Q_7, F3[[t]]")->required();
  hen->add_option("--f", hf, "polynomial to factor")->required();
  hen->add_option("--g0", hg0, "first approximate factor")->required();
  hen->add_option("--h0", hh0, "second approximate factor")->required();
  hen->add_option("--prec", hprec, "target precision m: f = g*h mod pi^(m+1)");
  hen->add_flag("--json", hjson, "line-delimited JSON output");

  // zero
  auto* zero = app.add_subcommand("zero", "primitive zero search modulo pi^k");
  std::string zring = "Z3", zform;
  int zmod = 1, zdepth = -1;
  bool zc2 = false, zjson = false;
  zero->add_option("--ring", zring, "ring descriptor: Z3, 3adic, F3[[t]]")->required();
  zero->add_option("--form", zform, "homogeneous form, e.g. 'x1^2+x2^2+x3^2'")->required();
  zero->add_option("--mod", zmod, "search primitive zeros modulo pi^MOD (full enumeration)");
  zero->add_option("--lift-depth", zdepth,
                   "backtracking lift search to modulus exponent DEPTH (mod pi^(DEPTH+1))");
  zero->add_flag("--c2", zc2, "series rings: use the truncate/expand/normalize pipeline");
  zero->add_option("--budget", budget, "evaluation budget");
  zero->add_flag("--json", zjson, "line-delimited JSON output");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a sentence in a finite structure");
  std::string estruct, eformula;
  bool ejson = false;
  eval->add_option("--structure", estruct,
                   "structure file, or builtin 'field:F_5' / 'trivialvf:F_7'")->required();
  eval->add_option("--formula", eformula, "sentence text")->required();
  eval->add_option("--budget", budget, "quantifier budget");
  eval->add_flag("--json", ejson, "line-delimited JSON output");

  // los
  auto* los = app.add_subcommand("los", "ultraproduct truth versus factor truth");
  std::vector<std::string> lstructs;
  std::string lultra = "principal:0", lformula;
  bool ljson = false;
  los->add_option("--structures", lstructs, "structure files or builtins")->required()
      ->expected(-1);
  los->add_option("--ultra", lultra, "ultrafilter: principal:<index>");
  los->add_option("--formula", lformula, "sentence text")->required();
  los->add_flag("--json", ljson, "line-delimited JSON output");

  // transfer
  auto* tr = app.add_subcommand("transfer",
                                "zero-existence agreement between F_p((t)) and Q_p");
  TransferConfig cfg;
  std::string primes_text = "3,5,7";
  bool tjson = false;
  tr->add_option("--degree", cfg.degree, "form degree d (d^2+1 variables)");
  tr->add_option("--primes", primes_text, "comma-separated primes");
  tr->add_option("--trials", cfg.trials, "trials per prime");
  tr->add_option("--prec", cfg.precision, "modulus exponent m (zeros mod pi^(m+1))");
  tr->add_option("--seed", cfg.seed, "RNG seed");
  tr->add_option("--jobs", cfg.jobs, "parallel trials");
  tr->add_option("--budget", cfg.budget, "per-search evaluation budget");
  tr->add_flag("--json", tjson, "line-delimited JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (padic->parsed()) return cmd_padic(pp, pnum, pden, pprec, pparse, pjson);
    if (series->parsed()) return cmd_series(sfield, snum, sden, sprec, sparse, sjson);
    if (res->parsed()) return cmd_resultant(rf, rg, rfield, rjson);
    if (hen->parsed()) return cmd_hensel(hring, hf, hg0, hh0, hprec, hjson);
    if (zero->parsed()) return cmd_zero(zring, zform, zmod, zdepth, zc2, budget, zjson);
    if (eval->parsed()) return cmd_eval(estruct, eformula, budget, ejson);
    if (los->parsed()) return cmd_los(lstructs, lultra, lformula, budget, ljson);
    if (tr->parsed()) {
      std::stringstream ss(primes_text);
      cfg.primes.clear();
      std::string item;
      while (std::getline(ss, item, ',')) cfg.primes.push_back(std::stoll(item));
      return cmd_transfer(cfg, tjson);
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
