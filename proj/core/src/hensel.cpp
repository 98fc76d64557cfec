#include "valence/hensel.hpp"

#include <algorithm>

namespace valence {
namespace {

const LocalRing* ring_of(const UniPoly<TruncatedLocal>& f) {
  for (const auto& c : f.coeffs())
    if (c.ring()) return c.ring();
  throw domain_error(errc::invalid_input, "polynomial carries no ring");
}

void require_integral(const UniPoly<TruncatedLocal>& f, const char* which) {
  for (const auto& c : f.coeffs())
    if (!c.is_exact_zero() && !c.is_known_zero() && c.lowest() < 0)
      throw domain_error(errc::not_integral, std::string(which) + " has a coefficient below O");
}

int min_precision(const UniPoly<TruncatedLocal>& f) {
  int p = TruncatedLocal::kInfPrec;
  for (const auto& c : f.coeffs()) p = std::min(p, c.precision());
  return p;
}

// Drops coefficients above maxdeg. The lemma's leading-coefficient
// hypothesis guarantees they vanish; truncated arithmetic can only know
// them as zero-at-precision, which the polynomial type will not trim.
UniPoly<TruncatedLocal> chop_degree(const UniPoly<TruncatedLocal>& p, int maxdeg) {
  if (p.degree() <= maxdeg) return p;
  auto c = p.coeffs();
  for (std::size_t i = maxdeg + 1; i < c.size(); ++i)
    if (!c[i].is_known_zero())
      throw domain_error(errc::hypotheses_failed,
                         "difference polynomial exceeds the degree bound");
  c.resize(maxdeg + 1);
  return UniPoly<TruncatedLocal>(std::move(c));
}

// Tri-state congruence of a polynomial to zero mod pi^k: 1 yes, 0 no,
// throws when undecidable at the carried precision.
bool poly_zero_mod(const UniPoly<TruncatedLocal>& f, int k) {
  for (const auto& c : f.coeffs()) {
    if (c.known_valuation_at_least(k)) continue;
    if (!c.is_known_zero()) return false;  // a digit below k is known nonzero
    throw precision_error(errc::insufficient_precision,
                          "congruence undecidable at carried precision");
  }
  return true;
}

}  // namespace

UniPoly<FqElem> residue_poly(const UniPoly<TruncatedLocal>& f) {
  std::vector<FqElem> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.residue());
  return UniPoly<FqElem>(std::move(out));
}

HenselReport check_hensel_hypotheses(const UniPoly<TruncatedLocal>& f,
                                     const UniPoly<TruncatedLocal>& g0,
                                     const UniPoly<TruncatedLocal>& h0) {
  require_integral(f, "f");
  require_integral(g0, "g0");
  require_integral(h0, "h0");
  if (f.is_zero_poly() || g0.is_zero_poly() || h0.is_zero_poly())
    throw domain_error(errc::zero_polynomial, "hypotheses need nonzero polynomials");

  HenselReport rep;
  UniPoly<TruncatedLocal> prod = g0 * h0;
  rep.lead_ok = (f.degree() == prod.degree()) && (f.leading() == prod.leading());

  TruncatedLocal res = resultant_division_free(g0, h0);
  if (res.is_exact_zero()) {
    rep.res_nonzero = false;
    rep.r = 0;
    rep.congruence_ok = false;
    return rep;
  }
  if (res.is_known_zero())
    throw precision_error(errc::insufficient_precision,
                          "Res(g0,h0) is zero at the carried precision; nonzeroness undecidable");
  rep.res_nonzero = true;
  rep.r = static_cast<int>(res.valuation().value);
  rep.congruence_ok = poly_zero_mod(f - prod, 2 * rep.r + 1);
  return rep;
}

LiftCertificate hensel_lift(const UniPoly<TruncatedLocal>& f, const UniPoly<TruncatedLocal>& g0,
                            const UniPoly<TruncatedLocal>& h0, int target_precision) {
  HenselReport rep = check_hensel_hypotheses(f, g0, h0);
  if (!rep.ok())
    throw domain_error(errc::hypotheses_failed,
                       std::string("lifting hypotheses fail (lead_ok=") +
                           (rep.lead_ok ? "1" : "0") + ", res_nonzero=" +
                           (rep.res_nonzero ? "1" : "0") + ", congruence_ok=" +
                           (rep.congruence_ok ? "1" : "0") + ")");
  const int r = rep.r;
  const LocalRing* ring = ring_of(f);
  int input_prec = std::min({min_precision(f), min_precision(g0), min_precision(h0)});
  if (input_prec < target_precision + 2 * r)
    throw precision_error(errc::precision_exhausted,
                          "input precision below target_precision + 2r");

  UniPoly<TruncatedLocal> g = g0, h = h0;
  int iterations = 0;
  for (;;) {
    UniPoly<TruncatedLocal> delta = f - g * h;
    if (poly_zero_mod(delta, target_precision + 1)) break;
    ++iterations;
    int k = iterations;
    if (k > target_precision + 2)
      throw domain_error(errc::hypotheses_failed, "lift failed to converge");

    // invariant: f = g h (mod pi^(2r+k)), so delta / pi^(2r+k) stays in O
    if (!poly_zero_mod(delta, 2 * r + k))
      throw domain_error(errc::hypotheses_failed, "iteration invariant violated");
    std::vector<TruncatedLocal> lc;
    for (const auto& c : delta.coeffs()) lc.push_back(c.shift(2 * r + k));
    UniPoly<TruncatedLocal> l =
        chop_degree(UniPoly<TruncatedLocal>{std::move(lc)}, g.degree() + h.degree() - 1);

    TruncatedLocal res = resultant_division_free(g, h);
    if (res.is_known_zero() || res.is_exact_zero() || res.valuation().value != r)
      throw domain_error(errc::hypotheses_failed,
                         "Res(g_k, h_k) left the valuation class pi^r");
    TruncatedLocal u = res.shift(r);
    auto [phi_b, psi_b] = bezout_solve(g, h, l.scale(u.inv()));
    // g*phi_b + h*psi_b = pi^r * l; psi_b corrects g, phi_b corrects h
    TruncatedLocal step = TruncatedLocal::power_of_pi(ring, r + k, TruncatedLocal::kInfPrec / 2);
    g = g + psi_b.scale(step);
    h = h + phi_b.scale(step);
  }

  // the certificate records the provable precision, established by exact
  // multiplication at the working precision
  UniPoly<TruncatedLocal> delta = f - g * h;
  long long achieved = input_prec;
  for (const auto& c : delta.coeffs()) {
    long long bound;
    if (c.is_exact_zero()) {
      bound = TruncatedLocal::kInfPrec;
    } else if (c.is_known_zero()) {
      bound = c.precision();
    } else {
      bound = c.valuation().value - 1;
    }
    achieved = std::min(achieved, bound);
  }
  if (achieved < target_precision)
    throw precision_error(errc::precision_exhausted, "achieved precision below target");

  LiftCertificate cert;
  cert.g = g;
  cert.h = h;
  cert.achieved_precision = static_cast<int>(std::min<long long>(achieved, input_prec));
  cert.r = r;
  cert.iterations = iterations;
  if (!poly_zero_mod(cert.g - g0, r + 1) || !poly_zero_mod(cert.h - h0, r + 1))
    throw domain_error(errc::hypotheses_failed, "certificate congruence to g0,h0 violated");
  return cert;
}

TruncatedLocal hensel_lift_root(const UniPoly<TruncatedLocal>& f, const FqElem& a0,
                                int target_precision) {
  const LocalRing* ring = ring_of(f);
  const FqField* rf = ring->residue_field();
  if (a0.field() != rf) throw domain_error(errc::mixed_rings, "root from a different residue field");
  require_integral(f, "f");

  UniPoly<FqElem> fbar = residue_poly(f);
  if (fbar.degree() < 1) throw domain_error(errc::degree_zero, "f is constant mod pi");
  if (!fbar.eval(a0).is_zero())
    throw domain_error(errc::not_residue_root, "a0 is not a root of f mod pi");
  if (fbar.derivative().eval(a0).is_zero())
    throw domain_error(errc::not_simple_root, "a0 is a multiple root of f mod pi");

  // synthetic division: fbar = (x - a0) * qbar
  int d = fbar.degree();
  std::vector<FqElem> q(d, rf->zero());
  FqElem carry = fbar.coeff(d);
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = fbar.coeff(i) + carry * a0;
  }

  int prec = min_precision(f);
  auto lift_digit = [&](const FqElem& e) {
    return e.is_zero() ? TruncatedLocal::known_zero(ring, prec)
                       : TruncatedLocal::from_digits(ring, 0, {e}, prec);
  };
  UniPoly<TruncatedLocal> g0{
      std::vector<TruncatedLocal>{-lift_digit(a0), TruncatedLocal::from_int(ring, 1, prec)}};
  std::vector<TruncatedLocal> h0c;
  for (int i = 0; i < d; ++i) h0c.push_back(lift_digit(q[i]));
  h0c.back() = f.leading();  // exact leading coefficient so hypothesis 1 holds
  UniPoly<TruncatedLocal> h0{std::move(h0c)};

  LiftCertificate cert = hensel_lift(f, g0, h0, target_precision);
  // g = x - y up to a unit; g0 is monic linear, and the lift preserves the
  // leading coefficient, so the root is -constant term
  return -cert.g.coeff(0);
}

}  // namespace valence
