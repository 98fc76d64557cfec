#include "valence/counting.hpp"

namespace valence {
namespace {

// Index-space term list with power tables; evaluation is pure table
// lookups, which keeps full enumeration affordable at the 10^6..10^7
// point budgets the module promises.
struct Compiled {
  const FqField* field;
  int nvars;
  struct Term {
    std::int32_t coeff;
    std::vector<std::pair<int, int>> factors;  // (variable, exponent)
  };
  std::vector<Term> terms;
  std::vector<std::vector<std::int32_t>> pow;  // [element][exponent]

  Compiled(const MultiPoly<FqElem>& f, const FqField* fld) : field(fld), nvars(f.nvars()) {
    int maxdeg = 0;
    for (const auto& [e, c] : f.terms()) {
      Term t;
      if (c.field() != fld)
        throw domain_error(errc::mixed_fields, "polynomial coefficients from another field");
      t.coeff = static_cast<std::int32_t>(c.index());
      for (int i = 0; i < nvars; ++i)
        if (e[i] > 0) {
          t.factors.emplace_back(i, e[i]);
          maxdeg = std::max(maxdeg, e[i]);
        }
      terms.push_back(std::move(t));
    }
    pow.assign(fld->q(), std::vector<std::int32_t>(maxdeg + 1, 1));
    for (std::int64_t a = 0; a < fld->q(); ++a) {
      pow[a][0] = 1;
      for (int e = 1; e <= maxdeg; ++e)
        pow[a][e] = static_cast<std::int32_t>(fld->mul_idx(pow[a][e - 1], a));
    }
  }

  std::int64_t eval(const std::vector<std::int64_t>& x) const {
    std::int64_t acc = 0;
    for (const auto& t : terms) {
      std::int64_t v = t.coeff;
      for (const auto& [var, exp] : t.factors) {
        v = field->mul_idx(v, pow[x[var]][exp]);
        if (v == 0) break;
      }
      acc = field->add_idx(acc, v);
    }
    return acc;
  }
};

long long checked_power(long long q, int n, long long budget) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / q) throw budget_error("q^n exceeds the enumeration budget");
    total *= q;
  }
  return total;
}

bool advance(std::vector<std::int64_t>& x, std::int64_t q) {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (++x[i] < q) return true;
    x[i] = 0;
  }
  return false;
}

}  // namespace

long long count_zeros(const MultiPoly<FqElem>& f, const FqField* field, long long budget) {
  if (f.nvars() < 1) throw domain_error(errc::invalid_input, "need at least one variable");
  checked_power(field->q(), f.nvars(), budget);
  Compiled cp(f, field);
  std::vector<std::int64_t> x(f.nvars(), 0);
  long long count = 0;
  do {
    if (cp.eval(x) == 0) ++count;
  } while (advance(x, field->q()));
  return count;
}

std::optional<std::vector<FqElem>> find_nontrivial_zero(const MultiPoly<FqElem>& f,
                                                        const FqField* field, long long budget) {
  auto d = is_homogeneous(f);
  if (!d || *d < 1)
    throw domain_error(errc::invalid_input, "find_nontrivial_zero needs a homogeneous form");
  checked_power(field->q(), f.nvars(), budget);
  Compiled cp(f, field);
  std::vector<std::int64_t> x(f.nvars(), 0);
  while (advance(x, field->q())) {  // skips the all-zero point
    if (cp.eval(x) == 0) {
      std::vector<FqElem> pt;
      pt.reserve(x.size());
      for (auto i : x) pt.push_back(field->element_at(i));
      return pt;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<FqElem>> common_zero_brute(const std::vector<MultiPoly<FqElem>>& forms,
                                                     const FqField* field, long long budget) {
  if (forms.empty()) throw domain_error(errc::invalid_input, "empty form list");
  int nvars = forms[0].nvars();
  for (const auto& f : forms)
    if (f.nvars() != nvars)
      throw domain_error(errc::arity_mismatch, "forms have mixed variable counts");
  checked_power(field->q(), nvars, budget);
  std::vector<Compiled> cps;
  cps.reserve(forms.size());
  for (const auto& f : forms) cps.emplace_back(f, field);
  std::vector<std::int64_t> x(nvars, 0);
  while (advance(x, field->q())) {
    bool all = true;
    for (const auto& cp : cps)
      if (cp.eval(x) != 0) {
        all = false;
        break;
      }
    if (all) {
      std::vector<FqElem> pt;
      pt.reserve(x.size());
      for (auto i : x) pt.push_back(field->element_at(i));
      return pt;
    }
  }
  return std::nullopt;
}

}  // namespace valence
