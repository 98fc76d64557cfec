#include <algorithm>
#include <cmath>
#include <sstream>

#include "valence/forms.hpp"

namespace valence {
namespace {

// Compiled evaluation of a form over O modulo pi^K. The p-adic engine
// works on integer values mod p^K; the series engine on digit vectors
// over the residue field. Coefficients must be integral and carried to
// precision K-1 at least.
struct CompiledLocal {
  const LocalRing* ring;
  const FqField* rf;
  int nvars;
  int K;
  bool padic;
  long long pmod = 1;  // p^K (p-adic mode)

  struct Term {
    long long pcoeff = 0;                       // p-adic coefficient mod p^K
    std::vector<std::int32_t> scoeff;           // series digit indices, length K
    std::vector<std::pair<int, int>> factors;   // (variable, exponent)
  };
  std::vector<Term> terms;

  CompiledLocal(const MultiPoly<TruncatedLocal>& f, int digits) {
    nvars = f.nvars();
    K = digits;
    ring = nullptr;
    for (const auto& [e, c] : f.terms())
      if (c.ring()) ring = c.ring();
    if (!ring) throw domain_error(errc::invalid_input, "form carries no ring");
    rf = ring->residue_field();
    padic = ring->is_padic();
    if (padic)
      for (int i = 0; i < K; ++i) pmod *= ring->p();

    for (const auto& [e, c] : f.terms()) {
      if (c.is_exact_zero()) continue;
      if (!c.is_known_zero() && c.lowest() < 0)
        throw domain_error(errc::not_integral, "coefficient below O");
      if (c.precision() < K - 1)
        throw precision_error(errc::insufficient_precision,
                              "coefficient precision below the requested modulus");
      Term t;
      if (padic) {
        long long v = 0;
        for (int i = K - 1; i >= 0; --i) v = v * ring->p() + c.digit_at(i).residue_int();
        if (v == 0) continue;
        t.pcoeff = v;
      } else {
        t.scoeff.assign(K, 0);
        bool any = false;
        for (int i = 0; i < K; ++i) {
          t.scoeff[i] = static_cast<std::int32_t>(c.digit_at(i).index());
          any = any || t.scoeff[i] != 0;
        }
        if (!any) continue;
      }
      for (int i = 0; i < nvars; ++i)
        if (e[i] > 0) t.factors.emplace_back(i, e[i]);
      terms.push_back(std::move(t));
    }
  }

  // truncated product of digit vectors (series mode, no carries)
  void smul(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
    for (int k = 0; k < K; ++k) out[k] = 0;
    for (int i = 0; i < K; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < K; ++j) {
        if (b[j] == 0) continue;
        out[i + j] =
            static_cast<std::int32_t>(rf->add_idx(out[i + j], rf->mul_idx(a[i], b[j])));
      }
    }
  }

  // p-adic evaluation from coordinate values mod p^K
  long long eval_padic(const std::vector<long long>& x) const {
    long long acc = 0;
    for (const auto& t : terms) {
      long long v = t.pcoeff;
      for (const auto& [var, exp] : t.factors) {
        long long base = x[var];
        for (int k = 0; k < exp && v != 0; ++k) v = (v * base) % pmod;
      }
      acc = (acc + v) % pmod;
    }
    return acc;
  }

  // series evaluation from a flat digit grid (coordinate-major, K digits)
  void eval_series(const std::vector<std::int32_t>& grid, std::int32_t* acc) const {
    std::vector<std::int32_t> v(K), tmp(K);
    for (int k = 0; k < K; ++k) acc[k] = 0;
    for (const auto& t : terms) {
      std::copy(t.scoeff.begin(), t.scoeff.end(), v.begin());
      for (const auto& [var, exp] : t.factors) {
        const std::int32_t* base = grid.data() + var * K;
        for (int k = 0; k < exp; ++k) {
          smul(v.data(), base, tmp.data());
          std::swap(v, tmp);
        }
      }
      for (int k = 0; k < K; ++k)
        acc[k] = static_cast<std::int32_t>(rf->add_idx(acc[k], v[k]));
    }
  }

  // value of f at the current point is divisible by pi^j (j <= K)
  bool zero_mod(const std::vector<long long>& pvals, const std::vector<std::int32_t>& grid,
                int j, std::vector<std::int32_t>& scratch) const {
    if (padic) {
      long long v = eval_padic(pvals);
      long long m = 1;
      for (int i = 0; i < j; ++i) m *= ring->p();
      return v % m == 0;
    }
    eval_series(grid, scratch.data());
    for (int k = 0; k < j; ++k)
      if (scratch[k] != 0) return false;
    return true;
  }

  // digit of f at pi^j (assumes the point is already a zero mod pi^j)
  std::int64_t digit_at(const std::vector<long long>& pvals,
                        const std::vector<std::int32_t>& grid, int j,
                        std::vector<std::int32_t>& scratch) const {
    if (padic) {
      long long v = eval_padic(pvals);
      long long m = 1;
      for (int i = 0; i < j; ++i) m *= ring->p();
      return (v / m) % ring->p();
    }
    eval_series(grid, scratch.data());
    return scratch[j];
  }

  // residue of the gradient at the residue point (constant along a
  // subtree, since the point is fixed mod pi at the root)
  std::vector<std::int64_t> residue_gradient(const std::vector<std::int64_t>& residues) const {
    std::vector<std::int64_t> grad(nvars, 0);
    for (const auto& t : terms) {
      std::int64_t c0;
      if (padic) {
        c0 = t.pcoeff % ring->p();
      } else {
        c0 = t.scoeff[0];
      }
      if (c0 == 0) continue;
      for (std::size_t fi = 0; fi < t.factors.size(); ++fi) {
        auto [var, exp] = t.factors[fi];
        // d/dx_var of the term, evaluated mod pi
        std::int64_t v = rf->mul_idx(c0, rf->from_int(exp).index());
        if (v == 0) continue;
        for (std::size_t fj = 0; fj < t.factors.size() && v != 0; ++fj) {
          auto [var2, exp2] = t.factors[fj];
          int e = (fj == fi) ? exp2 - 1 : exp2;
          for (int k = 0; k < e && v != 0; ++k) v = rf->mul_idx(v, residues[var2]);
        }
        grad[var] = rf->add_idx(grad[var], v);
      }
    }
    return grad;
  }
};

struct SearchState {
  const CompiledLocal& cp;
  long long budget;
  long long used = 0;
  std::vector<long long> pvals;        // p-adic coordinate values
  std::vector<std::int32_t> grid;      // series digit grid
  std::vector<std::int32_t> scratch;
  std::vector<long long> ppow;         // p^k
  std::vector<std::int64_t> grad;      // residue gradient at the current root

  SearchState(const CompiledLocal& c, long long b) : cp(c), budget(b) {
    pvals.assign(cp.nvars, 0);
    grid.assign(cp.nvars * cp.K, 0);
    scratch.assign(cp.K, 0);
    ppow.assign(cp.K + 1, 1);
    if (cp.padic)
      for (int k = 1; k <= cp.K; ++k) ppow[k] = ppow[k - 1] * cp.ring->p();
  }

  void set_digit(int coord, int level, std::int64_t idx) {
    if (cp.padic) {
      long long old = (pvals[coord] / ppow[level]) % cp.ring->p();
      pvals[coord] += (idx - old) * ppow[level];
    } else {
      grid[coord * cp.K + level] = static_cast<std::int32_t>(idx);
    }
  }

  void spend(long long steps = 1) {
    used += steps;
    if (used > budget) throw budget_error("zero-search evaluation budget exceeded");
  }

  bool zero_mod(int j) {
    spend();
    return cp.zero_mod(pvals, grid, j, scratch);
  }

  void load_gradient() {
    std::vector<std::int64_t> residues(cp.nvars);
    for (int c = 0; c < cp.nvars; ++c)
      residues[c] = cp.padic ? pvals[c] % cp.ring->p() : grid[c * cp.K];
    grad = cp.residue_gradient(residues);
  }

  PrimitiveZero witness(int m) const {
    PrimitiveZero w;
    w.modulus_exponent = m;
    const FqField* rf = cp.rf;
    for (int c = 0; c < cp.nvars; ++c) {
      std::vector<FqElem> digits;
      for (int k = 0; k <= m; ++k) {
        if (cp.padic) {
          digits.push_back(rf->from_int((pvals[c] / ppow[k]) % cp.ring->p()));
        } else {
          digits.push_back(rf->element_at(grid[c * cp.K + k]));
        }
      }
      w.point.push_back(std::move(digits));
    }
    return w;
  }

  // Children of a level-k node x are x + pi^(k+1) y. Since
  // f(x + pi^(k+1) y) = f(x) + pi^(k+1) grad f(x) . y (mod pi^(k+2)),
  // the digit vectors y admitting an extension are exactly the solutions
  // of a residue-linear congruence with the (per-root constant) gradient.
  // A vanishing gradient with a nonzero carry digit means the subtree is
  // barren and can be skipped outright.
  bool dfs(int level, int depth) {
    if (level == depth) return true;
    spend();
    std::int64_t carry = cp.digit_at(pvals, grid, level + 1, scratch);
    bool flat = true;
    for (auto g : grad) flat = flat && g == 0;
    if (flat && carry != 0) return false;

    std::int64_t q = cp.rf->q();
    std::int64_t neg_carry = cp.rf->neg_idx(carry);
    std::vector<std::int64_t> y(cp.nvars, 0);
    for (;;) {
      spend();
      bool child_ok;
      if (flat) {
        child_ok = true;  // every extension keeps f = 0 mod pi^(level+2)
      } else {
        std::int64_t dot = 0;
        for (int c = 0; c < cp.nvars; ++c)
          if (grad[c] != 0 && y[c] != 0) dot = cp.rf->add_idx(dot, cp.rf->mul_idx(grad[c], y[c]));
        child_ok = (dot == neg_carry);
      }
      if (child_ok) {
        for (int c = 0; c < cp.nvars; ++c) set_digit(c, level + 1, y[c]);
        if (dfs(level + 1, depth)) return true;
        for (int c = 0; c < cp.nvars; ++c) set_digit(c, level + 1, 0);
      }
      int i = cp.nvars - 1;
      while (i >= 0 && ++y[i] == q) y[i--] = 0;
      if (i < 0) break;
    }
    return false;
  }
};

void check_form(const MultiPoly<TruncatedLocal>& f) {
  auto d = is_homogeneous(f);
  if (!d || *d < 1)
    throw domain_error(errc::invalid_input, "search requires a homogeneous form of degree >= 1");
}

}  // namespace

std::vector<TruncatedLocal> PrimitiveZero::as_locals(const LocalRing* ring) const {
  std::vector<TruncatedLocal> out;
  out.reserve(point.size());
  for (const auto& digits : point)
    out.push_back(TruncatedLocal::from_digits(ring, 0, digits, modulus_exponent));
  return out;
}

std::string PrimitiveZero::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t c = 0; c < point.size(); ++c) {
    if (c) os << ", ";
    for (std::size_t k = 0; k < point[c].size(); ++k) {
      if (k) os << "|";
      os << point[c][k].to_string();
    }
  }
  os << ")";
  return os.str();
}

std::optional<PrimitiveZero> primitive_zero_mod(const MultiPoly<TruncatedLocal>& f, int m,
                                                long long budget) {
  if (m < 0) throw domain_error(errc::invalid_input, "modulus exponent must be >= 0");
  check_form(f);
  CompiledLocal cp(f, m + 1);
  std::int64_t q = cp.rf->q();
  long long coord_count = 1;
  for (int k = 0; k <= m; ++k) {
    coord_count *= q;
    if (coord_count > budget) throw budget_error("enumeration budget exceeded");
  }
  double total = std::pow(static_cast<double>(coord_count), cp.nvars);
  if (total > static_cast<double>(budget)) throw budget_error("enumeration budget exceeded");

  SearchState st(cp, budget * 2 + 16);
  std::vector<long long> vals(cp.nvars, 0);
  auto apply = [&](int coord) {
    long long v = vals[coord];
    for (int k = 0; k <= m; ++k) {
      st.set_digit(coord, k, v % q);
      v /= q;
    }
  };
  for (;;) {
    // advance odometer (last coordinate fastest); first point is all zero,
    // which is never primitive, so advance before testing
    int i = cp.nvars - 1;
    while (i >= 0 && ++vals[i] == coord_count) vals[i--] = 0;
    if (i < 0) return std::nullopt;
    for (int c = i; c < cp.nvars; ++c) apply(c);

    bool primitive = false;
    for (int c = 0; c < cp.nvars && !primitive; ++c) primitive = (vals[c] % q) != 0;
    if (!primitive) continue;
    if (st.zero_mod(m + 1)) return st.witness(m);
  }
}

std::optional<PrimitiveZero> lift_zero_search(const MultiPoly<TruncatedLocal>& f, int depth,
                                              long long budget) {
  if (depth < 0) throw domain_error(errc::invalid_input, "depth must be >= 0");
  check_form(f);
  CompiledLocal cp(f, depth + 1);
  std::int64_t q = cp.rf->q();
  SearchState st(cp, budget);

  // roots of the tree: primitive residue zeros in lexicographic order;
  // the residue gradient is fixed per root and shared by its subtree
  std::vector<std::int64_t> x(cp.nvars, 0);
  for (;;) {
    int i = cp.nvars - 1;
    while (i >= 0 && ++x[i] == q) x[i--] = 0;
    if (i < 0) return std::nullopt;
    for (int c = 0; c < cp.nvars; ++c) st.set_digit(c, 0, x[c]);
    if (!st.zero_mod(1)) continue;
    st.load_gradient();
    if (st.dfs(0, depth)) return st.witness(depth);
    // clear any digits the failed subtree left behind
    for (int c = 0; c < cp.nvars; ++c)
      for (int k = 1; k <= depth; ++k) st.set_digit(c, k, 0);
  }
}

bool verify_zero_mod(const MultiPoly<TruncatedLocal>& f, const PrimitiveZero& witness) {
  const LocalRing* ring = nullptr;
  for (const auto& [e, c] : f.terms())
    if (c.ring()) ring = c.ring();
  if (!ring) throw domain_error(errc::invalid_input, "form carries no ring");
  auto coords = witness.as_locals(ring);
  TruncatedLocal value = f.evaluate(coords);
  return value.known_valuation_at_least(witness.modulus_exponent + 1);
}

PrimitiveZero c2_witness_series(const MultiPoly<TruncatedLocal>& f, int m, long long budget) {
  check_form(f);
  const LocalRing* ring = nullptr;
  for (const auto& [e, c] : f.terms())
    if (c.ring()) ring = c.ring();
  if (!ring || ring->is_padic())
    throw domain_error(errc::mixed_rings, "c2_witness_series requires a series ring");
  const FqField* field = ring->residue_field();
  int n = f.nvars();
  int d = *is_homogeneous(f);
  if (n <= d * d) throw domain_error(errc::hypothesis_failed, "requires n > d^2");

  // truncate coefficients to polynomials in t of degree <= m
  MultiPoly<UniPoly<FqElem>> ftrunc(n);
  int r = 0;
  for (const auto& [e, c] : f.terms()) {
    if (c.is_exact_zero()) continue;
    if (!c.is_known_zero() && c.lowest() < 0)
      throw domain_error(errc::not_integral, "coefficient below O");
    if (c.precision() < m)
      throw precision_error(errc::insufficient_precision, "coefficients not known mod t^(m+1)");
    std::vector<FqElem> digits;
    for (int k = 0; k <= m; ++k) digits.push_back(c.digit_at(k));
    UniPoly<FqElem> cpoly(std::move(digits));
    if (!cpoly.is_zero_poly()) {
      ftrunc.add_term(e, cpoly);
      r = std::max(r, cpoly.degree());
    }
  }

  // all coefficients vanish mod t^(m+1): every point is a zero; return the
  // primitive point (1, 0, .., 0)
  if (ftrunc.is_zero_poly()) {
    PrimitiveZero w;
    w.modulus_exponent = m;
    w.point.assign(n, std::vector<FqElem>(m + 1, field->zero()));
    w.point[0][0] = field->one();
    return w;
  }

  int smax = minimal_s(n, d, 1, r);
  for (int s = 0; s <= smax; ++s) {
    // enumeration cost q^(n(s+1))
    double cost = std::pow(static_cast<double>(field->q()), n * (s + 1));
    if (cost > static_cast<double>(budget)) {
      if (s == smax) throw budget_error("series witness search exceeds the budget");
      continue;
    }
    auto forms = expand_transcendental(ftrunc, s);
    auto zero = common_zero_brute(forms, field, budget);
    if (!zero) continue;

    // reassemble coordinates as polynomials in t
    std::vector<UniPoly<FqElem>> alpha;
    for (int j = 0; j < n; ++j) {
      std::vector<FqElem> coeffs(zero->begin() + j * (s + 1), zero->begin() + (j + 1) * (s + 1));
      alpha.emplace_back(std::move(coeffs));
    }
    // normalize by the minimal valuation among the nonzero coordinates
    int c = -1;
    for (const auto& a : alpha) {
      if (a.is_zero_poly()) continue;
      int v = 0;
      while (a.coeff(v).is_zero()) ++v;
      if (c < 0 || v < c) c = v;
    }
    PrimitiveZero w;
    w.modulus_exponent = m;
    for (const auto& a : alpha) {
      std::vector<FqElem> digits(m + 1, field->zero());
      for (int k = 0; k <= m; ++k) {
        int idx = k + c;
        if (idx <= a.degree()) digits[k] = a.coeff(idx);
      }
      w.point.push_back(std::move(digits));
    }
    if (!w.is_primitive())
      throw domain_error(errc::invalid_input, "normalization failed to produce a primitive zero");
    if (!verify_zero_mod(f, w))
      throw domain_error(errc::invalid_input, "series witness failed verification");
    return w;
  }
  throw budget_error("no witness found within the expansion levels; budget exhausted");
}

}  // namespace valence
