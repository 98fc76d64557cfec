#include "valence/forms.hpp"

#include <algorithm>

#include "valence/matrix.hpp"

namespace valence {
namespace {

using FPoly = MultiPoly<FqElem>;

// Remaps f into an ambient ring with `total` variables at block `offset`.
FPoly embed(const FPoly& f, int total, int offset) {
  FPoly r(total);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> ee(total, 0);
    for (int i = 0; i < f.nvars(); ++i) ee[offset + i] = e[i];
    r.add_term(ee, c);
  }
  return r;
}

long long poly_terms_budget_check(const FPoly& f, long long budget) {
  if (static_cast<long long>(f.term_count()) > budget)
    throw budget_error("composed form exceeds the term budget");
  return static_cast<long long>(f.term_count());
}

}  // namespace

ExtensionData::ExtensionData(const FqField* base, const FqField* host, int degree,
                             std::vector<std::vector<std::vector<FqElem>>> constants)
    : base_(base), host_(host), degree_(degree), constants_(std::move(constants)) {
  verify();
}

ExtensionData ExtensionData::from_field(const FqField* ext) {
  if (ext->v() < 2)
    throw domain_error(errc::invalid_input, "from_field needs a proper extension");
  const FqField* base = FqField::get(ext->p(), 1);
  int e = ext->v();
  // w_k = class of x^(k-1); c(k,l,.) are the coordinates of x^(k+l-2)
  std::vector<std::vector<std::vector<FqElem>>> c(
      e, std::vector<std::vector<FqElem>>(e, std::vector<FqElem>(e, base->zero())));
  for (int k = 0; k < e; ++k)
    for (int l = 0; l < e; ++l) {
      std::vector<std::int64_t> ck(e, 0), cl(e, 0);
      ck[k] = 1;
      cl[l] = 1;
      FqElem prod = ext->from_coeffs(ck) * ext->from_coeffs(cl);
      auto coords = prod.coeffs();
      for (int j = 0; j < e; ++j) c[k][l][j] = base->from_int(coords[j]);
    }
  return ExtensionData(base, ext, e, std::move(c));
}

ExtensionData ExtensionData::from_constants(
    const FqField* base, std::vector<std::vector<std::vector<FqElem>>> constants) {
  int e = static_cast<int>(constants.size());
  return ExtensionData(base, nullptr, e, std::move(constants));
}

void ExtensionData::verify() const {
  int e = degree_;
  if (e < 1) throw domain_error(errc::degenerate_algebra, "empty basis");
  for (int k = 0; k < e; ++k)
    for (int l = 0; l < e; ++l) {
      if (static_cast<int>(constants_[k][l].size()) != e)
        throw domain_error(errc::degenerate_algebra, "ragged structure constants");
      for (int j = 0; j < e; ++j)
        if (!(constants_[k][l][j] == constants_[l][k][j]))
          throw domain_error(errc::degenerate_algebra, "multiplication is not commutative");
    }
  // w_1 is the unit
  for (int l = 0; l < e; ++l)
    for (int j = 0; j < e; ++j) {
      bool want_one = (l == j);
      if (constants_[0][l][j].is_one() != want_one || (!want_one && !constants_[0][l][j].is_zero()))
        throw domain_error(errc::degenerate_algebra, "w_1 is not the unit");
    }
  // associativity on basis triples
  auto mul_basis = [&](int k, int l) { return constants_[k][l]; };
  auto mul_vec = [&](const std::vector<FqElem>& a, int l) {
    std::vector<FqElem> out(e, base_->zero());
    for (int k = 0; k < e; ++k) {
      if (a[k].is_zero()) continue;
      for (int j = 0; j < e; ++j) out[j] = out[j] + a[k] * constants_[k][l][j];
    }
    return out;
  };
  for (int a = 0; a < e; ++a)
    for (int b = 0; b < e; ++b)
      for (int cidx = 0; cidx < e; ++cidx) {
        std::vector<FqElem> lhs = mul_vec(mul_basis(a, b), cidx);
        // a * (b * c): expand b*c over the basis then multiply by w_a
        std::vector<FqElem> bc = mul_basis(b, cidx);
        std::vector<FqElem> rhs(e, base_->zero());
        for (int k = 0; k < e; ++k) {
          if (bc[k].is_zero()) continue;
          for (int j = 0; j < e; ++j) rhs[j] = rhs[j] + bc[k] * constants_[a][k][j];
        }
        if (lhs != rhs)
          throw domain_error(errc::degenerate_algebra, "multiplication is not associative");
      }
  // no zero divisors: every nonzero multiplication operator is invertible
  std::int64_t qe = 1;
  for (int i = 0; i < e; ++i) {
    qe *= base_->q();
    if (qe > 100'000)
      throw budget_error("extension too large for the zero-divisor check");
  }
  for (std::int64_t idx = 1; idx < qe; ++idx) {
    std::vector<FqElem> a(e, base_->zero());
    std::int64_t t = idx;
    for (int i = 0; i < e; ++i) {
      a[i] = base_->element_at(t % base_->q());
      t /= base_->q();
    }
    Matrix<FqElem> m(e, e, base_->zero());
    for (int j = 0; j < e; ++j)
      for (int l = 0; l < e; ++l) {
        FqElem acc = base_->zero();
        for (int k = 0; k < e; ++k) acc = acc + a[k] * constants_[k][l][j];
        m.at(j, l) = acc;
      }
    if (bareiss_det(m).is_zero())
      throw domain_error(errc::degenerate_algebra, "algebra has zero divisors");
  }
}

MultiPoly<FqElem> norm_form(const ExtensionData& ext, long long verify_budget) {
  int e = ext.degree();
  if (e <= 1) throw domain_error(errc::invalid_input, "norm form needs degree > 1");
  const FqField* base = ext.base();
  // matrix of multiplication by x over the basis, entries linear forms
  Matrix<FPoly> m(e, e, FPoly::zero(e));
  for (int j = 0; j < e; ++j)
    for (int l = 0; l < e; ++l) {
      FPoly entry(e);
      for (int k = 0; k < e; ++k) {
        std::vector<int> exp(e, 0);
        exp[k] = 1;
        entry.add_term(exp, ext.c(k, l, j));
      }
      m.at(j, l) = entry;
    }
  FPoly norm = division_free_det(m);
  auto deg = is_homogeneous(norm);
  if (!deg || *deg != e)
    throw domain_error(errc::degenerate_algebra, "norm form is not homogeneous of degree e");
  // normic property: only the trivial zero (checked when affordable)
  long long points = 1;
  bool small = true;
  for (int i = 0; i < e; ++i) {
    points *= base->q();
    if (points > verify_budget) {
      small = false;
      break;
    }
  }
  if (small && find_nontrivial_zero(norm, base, verify_budget).has_value())
    throw domain_error(errc::degenerate_algebra, "norm form has a nontrivial zero");
  return norm;
}

MultiPoly<FqElem> normic_tower(const MultiPoly<FqElem>& phi, int m, long long term_budget) {
  auto d = is_homogeneous(phi);
  if (!d || *d != phi.nvars())
    throw domain_error(errc::not_normic, "tower base must have degree equal to variable count");
  if (m < 1) throw domain_error(errc::invalid_input, "tower level must be >= 1");
  FPoly tower = phi;
  for (int level = 2; level <= m; ++level) {
    int prev_vars = tower.nvars();
    long long total = static_cast<long long>(prev_vars) * phi.nvars();
    if (total > 1'000'000) throw budget_error("tower variable count exceeds budget");
    int nvars = static_cast<int>(total);
    std::vector<FPoly> subs;
    subs.reserve(prev_vars);
    for (int j = 0; j < prev_vars; ++j) subs.push_back(embed(phi, nvars, j * phi.nvars()));
    tower = compose(tower, subs);
    poly_terms_budget_check(tower, term_budget);
  }
  return tower;
}

LangNagataReduction::LangNagataReduction(std::vector<MultiPoly<FqElem>> forms,
                                         MultiPoly<FqElem> phi, int i, long long term_budget)
    : forms_(std::move(forms)), phi_(std::move(phi)) {
  if (forms_.empty()) throw domain_error(errc::invalid_input, "no forms");
  r_ = static_cast<int>(forms_.size());
  n_ = forms_[0].nvars();
  auto d0 = is_homogeneous(forms_[0]);
  if (!d0) throw domain_error(errc::invalid_input, "forms must be homogeneous");
  d_ = *d0;
  for (const auto& f : forms_) {
    auto d = is_homogeneous(f);
    if (!d || *d != d_ || f.nvars() != n_)
      throw domain_error(errc::invalid_input, "forms must share degree and variable count");
  }
  auto dphi = is_homogeneous(phi_);
  if (!dphi || *dphi != phi_.nvars())
    throw domain_error(errc::not_normic, "phi must be normic-shaped");
  int l = phi_.nvars();
  if (l < r_) throw domain_error(errc::invalid_input, "normic degree below the form count");
  long long need = 1;
  for (int k = 0; k < i; ++k) need *= d_;
  if (n_ <= r_ * need)
    throw domain_error(errc::invalid_input, "hypothesis n > r d^i fails");

  // level recurrence: slots_1 = l, D_1 = d*l, N_m = n*floor(slots_m / r),
  // slots_{m+1} = N_m, D_{m+1} = d * D_m; stop once N_m > D_m^i
  long long slots = l;
  long long degree = static_cast<long long>(d_) * l;
  const FPoly* outer = &phi_;
  for (;;) {
    int groups = static_cast<int>(slots / r_);
    long long nvars = static_cast<long long>(n_) * groups;
    if (nvars > 100'000) throw budget_error("composed variable count exceeds budget");
    std::vector<FPoly> subs;
    subs.reserve(slots);
    for (int g = 0; g < groups; ++g)
      for (int j = 0; j < r_; ++j)
        subs.push_back(embed(forms_[j], static_cast<int>(nvars), g * n_));
    for (long long pad = groups * static_cast<long long>(r_); pad < slots; ++pad)
      subs.push_back(FPoly::zero(static_cast<int>(nvars)));
    FPoly composed = compose(*outer, subs);
    poly_terms_budget_check(composed, term_budget);
    levels_.push_back(std::move(composed));
    groups_.push_back(groups);
    slots_.push_back(static_cast<int>(slots));

    // D grows by d each level; N is the current variable count
    long long dpow = 1;
    bool done = true;
    for (int k = 0; k < i; ++k) {
      dpow *= degree;
      if (dpow >= 1'000'000'000'000LL) break;
    }
    done = nvars > dpow;
    if (done) break;
    slots = nvars;
    degree *= d_;
    outer = &levels_.back();
    if (levels_.size() > 32) throw budget_error("composition level budget exceeded");
  }
}

std::pair<int, int> LangNagataReduction::var_label(int index) const {
  return {index / n_, index % n_};
}

std::vector<FqElem> LangNagataReduction::extract(const std::vector<FqElem>& zero) const {
  const FqField* field = forms_[0].terms().begin()->second.field();
  std::vector<FqElem> current = zero;
  for (int level = static_cast<int>(levels_.size()) - 1; level >= 0; --level) {
    if (static_cast<int>(current.size()) != levels_[level].nvars())
      throw domain_error(errc::arity_mismatch, "zero arity mismatch during extraction");
    int groups = groups_[level];
    // values of the substituted forms: the argument vector of the outer
    // form at this level
    std::vector<FqElem> args;
    args.reserve(slots_[level]);
    bool all_zero = true;
    for (int g = 0; g < groups; ++g) {
      std::vector<FqElem> block(current.begin() + g * n_, current.begin() + (g + 1) * n_);
      for (int j = 0; j < r_; ++j) {
        FqElem v = forms_[j].evaluate(block);
        all_zero = all_zero && v.is_zero();
        args.push_back(v);
      }
    }
    for (int pad = groups * r_; pad < slots_[level]; ++pad) args.push_back(field->zero());
    if (all_zero) {
      for (int g = 0; g < groups; ++g) {
        std::vector<FqElem> block(current.begin() + g * n_, current.begin() + (g + 1) * n_);
        bool nonzero = false;
        for (const auto& c : block) nonzero = nonzero || !c.is_zero();
        if (nonzero) return block;
      }
      throw domain_error(errc::invalid_input, "trivial zero passed to extract");
    }
    // otherwise the argument vector is a nontrivial zero one level down
    current = std::move(args);
  }
  throw domain_error(errc::invalid_input, "extraction reached the normic base with nonzero args");
}

std::vector<MultiPoly<FqElem>> expand_algebraic(const MultiPoly<FqElem>& f,
                                                const ExtensionData& ext) {
  const FqField* host = ext.host();
  if (!host)
    throw domain_error(errc::invalid_input, "expand_algebraic needs host-field extension data");
  const FqField* base = ext.base();
  int e = ext.degree();
  int n = f.nvars();
  int total = e * n;
  if (f.is_zero_poly()) return std::vector<FPoly>(e, FPoly::zero(total));

  // substitute x_j = sum_k x_{j,k} w_k over the host field
  std::vector<FPoly> subs;
  subs.reserve(n);
  for (int j = 0; j < n; ++j) {
    FPoly s(total);
    for (int k = 0; k < e; ++k) {
      std::vector<std::int64_t> wk(e, 0);
      wk[k] = 1;
      std::vector<int> exp(total, 0);
      exp[j * e + k] = 1;
      s.add_term(exp, host->from_coeffs(wk));
    }
    subs.push_back(std::move(s));
  }
  FPoly expanded = compose(f, subs);

  std::vector<FPoly> out(e, FPoly::zero(total));
  for (const auto& [exp, c] : expanded.terms()) {
    auto coords = c.coeffs();
    for (int k = 0; k < e; ++k)
      if (coords[k] != 0) out[k].add_term(exp, base->from_int(coords[k]));
  }
  return out;
}

std::vector<FqElem> algebraic_point(const std::vector<FqElem>& base_point,
                                    const ExtensionData& ext) {
  const FqField* host = ext.host();
  if (!host) throw domain_error(errc::invalid_input, "needs host-field extension data");
  int e = ext.degree();
  if (base_point.size() % e != 0)
    throw domain_error(errc::arity_mismatch, "point length is not a multiple of the degree");
  std::vector<FqElem> out;
  for (std::size_t j = 0; j * e < base_point.size(); ++j) {
    std::vector<std::int64_t> coords(e, 0);
    for (int k = 0; k < e; ++k) coords[k] = base_point[j * e + k].residue_int();
    out.push_back(host->from_coeffs(coords));
  }
  return out;
}

int minimal_s(int n, int d, int i, int r) {
  long long dpow = 1;
  for (int k = 0; k <= i; ++k) dpow *= d;  // d^(i+1)
  if (n <= dpow) throw domain_error(errc::hypothesis_failed, "requires n > d^(i+1)");
  long long di = dpow / d;  // d^i
  long long lhs_coeff = n - dpow;
  long long rhs = (static_cast<long long>(r) + 1) * di - n;
  int s = 0;
  while (lhs_coeff * s <= rhs) ++s;
  return s;
}

std::vector<MultiPoly<FqElem>> expand_transcendental(const MultiPoly<UniPoly<FqElem>>& f, int s) {
  if (s < 0) throw domain_error(errc::invalid_input, "s must be >= 0");
  int n = f.nvars();
  int total = n * (s + 1);
  // coefficient ring F_q[t]; substitute x_j = sum_k X_{j,k} t^k
  using TPoly = MultiPoly<UniPoly<FqElem>>;
  if (f.is_zero_poly()) return {};
  const FqField* field = f.terms().begin()->second.coeffs().empty()
                             ? nullptr
                             : f.terms().begin()->second.coeffs()[0].field();
  for (const auto& [e, c] : f.terms())
    if (!c.is_zero_poly()) {
      field = c.coeffs().back().field();
      break;
    }
  if (!field) throw domain_error(errc::invalid_input, "cannot infer the coefficient field");

  int r = 0, d = 0;
  for (const auto& [e, c] : f.terms()) {
    r = std::max(r, c.degree());
    int sdeg = 0;
    for (int x : e) sdeg += x;
    d = std::max(d, sdeg);
  }

  std::vector<TPoly> subs;
  subs.reserve(n);
  UniPoly<FqElem> one = UniPoly<FqElem>::constant(field->one());
  for (int j = 0; j < n; ++j) {
    TPoly sub(total);
    for (int k = 0; k <= s; ++k) {
      std::vector<int> exp(total, 0);
      exp[j * (s + 1) + k] = 1;
      sub.add_term(exp, UniPoly<FqElem>::monomial(field->one(), k));
    }
    subs.push_back(std::move(sub));
  }
  TPoly expanded = compose(f, subs);

  int count = d * s + r + 1;
  std::vector<FPoly> out(std::max(count, 1), FPoly::zero(total));
  for (const auto& [exp, c] : expanded.terms())
    for (int k = 0; k <= c.degree(); ++k) {
      FqElem ck = c.coeff(k);
      if (!ck.is_zero()) {
        if (k >= static_cast<int>(out.size())) out.resize(k + 1, FPoly::zero(total));
        out[k].add_term(exp, ck);
      }
    }
  return out;
}

}  // namespace valence
