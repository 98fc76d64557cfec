#include "valence/transfer.hpp"

#include <future>
#include <random>
#include <sstream>

namespace valence {
namespace {

void monomials_of_degree(int nvars, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (nvars == 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current.push_back(e);
    monomials_of_degree(nvars - 1, degree - e, current, out);
    current.pop_back();
  }
}

struct MirroredForm {
  MultiPoly<TruncatedLocal> padic;
  MultiPoly<TruncatedLocal> series;
  std::string text;
};

// coefficients drawn uniformly from {1..p-1} union {unit * pi}
MirroredForm random_mirrored_form(std::mt19937_64& rng, std::int64_t p, int degree, int nvars,
                                  int prec) {
  const LocalRing* zp = LocalRing::padic(p);
  const LocalRing* fpt = LocalRing::series(FqField::get(p));
  const FqField* fp = FqField::get(p);
  std::vector<std::vector<int>> monos;
  std::vector<int> scratch;
  monomials_of_degree(nvars, degree, scratch, monos);

  MirroredForm out{MultiPoly<TruncatedLocal>(nvars), MultiPoly<TruncatedLocal>(nvars), ""};
  std::ostringstream text;
  std::uniform_int_distribution<std::int64_t> unit(1, p - 1);
  std::uniform_int_distribution<int> shift(0, 1);
  bool first = true;
  for (const auto& e : monos) {
    std::int64_t c = unit(rng);
    int s = shift(rng);
    std::int64_t pc = c;
    for (int k = 0; k < s; ++k) pc *= p;
    out.padic.add_term(e, TruncatedLocal::from_int(zp, pc, prec));
    out.series.add_term(e, TruncatedLocal::from_digits(fpt, s, {fp->from_int(c)}, prec));
    if (!first) text << " + ";
    first = false;
    text << c;
    if (s > 0) text << "*t";
    for (int j = 0; j < nvars; ++j)
      for (int k = 0; k < e[j]; ++k) text << "*x" << (j + 1);
  }
  out.text = text.str();
  return out;
}

TransferTrial run_trial(std::int64_t p, int trial, const TransferConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(p) * 0x9e3779b97f4a7c15ull) ^
                      (static_cast<std::uint64_t>(trial) * 0xc2b2ae3d27d4eb4full));
  int nvars = cfg.degree * cfg.degree + 1;
  MirroredForm form = random_mirrored_form(rng, p, cfg.degree, nvars, cfg.precision + 2);
  TransferTrial t;
  t.trial = trial;
  t.form_text = form.text;
  try {
    t.padic_found = lift_zero_search(form.padic, cfg.precision, cfg.budget).has_value();
    t.series_found = lift_zero_search(form.series, cfg.precision, cfg.budget).has_value();
  } catch (const budget_error&) {
    t.budget_hit = true;
  }
  return t;
}

}  // namespace

std::vector<TransferRow> run_transfer(const TransferConfig& cfg) {
  if (cfg.degree < 1) throw domain_error(errc::invalid_input, "degree must be >= 1");
  if (cfg.trials < 1) throw domain_error(errc::invalid_input, "trials must be >= 1");
  std::vector<TransferRow> rows;
  for (std::int64_t p : cfg.primes) {
    TransferRow row;
    row.p = p;
    std::vector<TransferTrial> trials(cfg.trials);
    if (cfg.jobs > 1) {
      std::vector<std::future<TransferTrial>> futures;
      futures.reserve(cfg.trials);
      for (int i = 0; i < cfg.trials; ++i)
        futures.push_back(
            std::async(std::launch::async, [&, i] { return run_trial(p, i, cfg); }));
      for (int i = 0; i < cfg.trials; ++i) trials[i] = futures[i].get();
    } else {
      for (int i = 0; i < cfg.trials; ++i) trials[i] = run_trial(p, i, cfg);
    }
    for (const auto& t : trials) {
      if (t.budget_hit) {
        ++row.budget;
        row.disagreements.push_back(t);
        continue;
      }
      if (t.padic_found && t.series_found) {
        ++row.both;
      } else if (t.series_found) {
        ++row.only_series;
        row.disagreements.push_back(t);
      } else if (t.padic_found) {
        ++row.only_padic;
        row.disagreements.push_back(t);
      } else {
        ++row.neither;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace valence
