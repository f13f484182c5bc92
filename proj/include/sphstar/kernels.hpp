#pragma once

#include <string>

#include "sphstar/poly.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

enum class KernelMethod { Series, Closed, Haar };
std::string to_string(KernelMethod m);

struct KernelEval {
  cplx value;
  KernelMethod method;
  int truncation_or_resolution;  // series terms, Haar resolution, 0 for closed form
  double hbar;
};

// Number of series terms used when none is given.
int default_truncation(CaseId c);

// Q(z, w) = sum_{k < L} c_k(hbar) * form(z, w)^k, with form = (z.w)^2 for m=2,
// (z12.w12)(z34.w34) for m=4 and varrho(z, w) for m=8.
KernelEval q_series(CaseId c, const CVec& z, const CVec& w, double hbar, int L);
KernelEval q_closed(CaseId c, const CVec& z, const CVec& w, double hbar);
KernelEval q_haar(CaseId c, const CVec& z, const CVec& w, double hbar, int resolution);

// rho(z).rho(w) via the case shortcut
cplx pairing(CaseId c, const CVec& z, const CVec& w);
// leading hbar -> 0 term of Q(z, w)
cplx overlap_asymptotic(CaseId c, const CVec& z, const CVec& w, double hbar);

// The quadratic form whose powers build the series, and the coefficient ratio
// c_k / c_{k-1}.
cplx kernel_form(CaseId c, const CVec& z, const CVec& w);
double kernel_coeff_ratio(CaseId c, int k, double hbar);

// Q_L(u, w) as a polynomial in u (holomorphic slot), w fixed.
Poly kernel_poly_first(CaseId c, const CVec& w, double hbar, int L);
// Q_L(u, v) as a polynomial in (u, conj v): variables 0..m-1 are u, m..2m-1 are conj v.
Poly kernel_poly_two(CaseId c, double hbar, int L);

// Relative size of the diagonal series tail beyond term L - shift, measured
// against the sum of the first L terms. Used to pick truncations.
double series_tail_estimate(CaseId c, double form_diag, double hbar, int L, int shift = 0);
// Smallest L with series_tail_estimate(..., L, shift) <= tol.
int truncation_for(CaseId c, double form_diag, double hbar, double tol, int shift = 0);

}  // namespace sphstar
