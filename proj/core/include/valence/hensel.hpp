#ifndef VALENCE_HENSEL_HPP
#define VALENCE_HENSEL_HPP

#include "valence/local.hpp"
#include "valence/poly.hpp"

namespace valence {

/// Outcome of checking the three factorization-lifting hypotheses for
/// f, g0, h0 over the valuation ring:
///   1. f and g0*h0 have the same leading coefficient,
///   2. Res(g0, h0) != 0, with r the valuation exponent of the resultant,
///   3. f = g0*h0 (mod pi^(2r+1)).
struct HenselReport {
  bool lead_ok = false;
  bool res_nonzero = false;
  int r = 0;
  bool congruence_ok = false;
  bool ok() const { return lead_ok && res_nonzero && congruence_ok; }
};

/// Certificate of a successful lift: f = g*h (mod pi^(achieved_precision+1)),
/// g = g0 and h = h0 (mod pi^(r+1)), and g, h carry the leading
/// coefficients of g0, h0.
struct LiftCertificate {
  UniPoly<TruncatedLocal> g;
  UniPoly<TruncatedLocal> h;
  int achieved_precision = 0;
  int r = 0;
  int iterations = 0;
};

/// Checks the lifting hypotheses. Inputs must have coefficients in O;
/// throws InsufficientPrecision when a check is undecidable at the carried
/// precision.
HenselReport check_hensel_hypotheses(const UniPoly<TruncatedLocal>& f,
                                     const UniPoly<TruncatedLocal>& g0,
                                     const UniPoly<TruncatedLocal>& h0);

/// The lifting iteration: from f = g0*h0 (mod pi^(2r+1)) produces
/// g_k, h_k with f = g_k*h_k (mod pi^(target_precision+1)), one digit of
/// precision per iteration. The unit u with Res(g,h) = pi^r * u is
/// recomputed every iteration and its valuation re-asserted. Input
/// precision must be at least target_precision + 2r.
LiftCertificate hensel_lift(const UniPoly<TruncatedLocal>& f, const UniPoly<TruncatedLocal>& g0,
                            const UniPoly<TruncatedLocal>& h0, int target_precision);

/// Root lifting for a simple residue root a0 of f: returns x with
/// f(x) = 0 (mod pi^(target_precision+1)) and residue(x) = a0.
/// Implemented as hensel_lift with g0 = x - lift(a0) and h0 the lifted
/// cofactor carrying f's exact leading coefficient.
TruncatedLocal hensel_lift_root(const UniPoly<TruncatedLocal>& f, const FqElem& a0,
                                int target_precision);

/// Residue image of a polynomial over O.
UniPoly<FqElem> residue_poly(const UniPoly<TruncatedLocal>& f);

}  // namespace valence

#endif
