#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sphstar/poly.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

struct BlockMatrix {
  CMat A, B, C, D;
  CMat assemble() const;
  void check() const;
};

// det(A) det(D - C A^{-1} B)
cplx block_det(const BlockMatrix& m);
// Inverse of [[I, B], [B^t, D]] with B^t B = 0.
BlockMatrix block_inverse_special(const BlockMatrix& m);

using RealFn = std::function<cplx(const RVec&)>;

// Integral of exp(i p(x)/hbar) b(x) dx around a nondegenerate critical point.
// Jets are Taylor polynomials in the displacement x - x0. When a jet is absent
// it is synthesized from the callback by central differences.
struct PhaseProblem {
  int dim = 0;
  RVec x0;
  RealFn phase;
  RealFn amplitude;
  std::optional<Poly> phase_jet;
  std::optional<Poly> amplitude_jet;
  double fd_step = 1e-3;
};

// Taylor polynomial of f at x0 up to the given degree from central
// differences with one Richardson step.
Poly taylor_jet_fd(const RealFn& f, const RVec& x0, int degree, double step = 1e-3);

// sum_{jk} G_jk d_j d_k f
Poly apply_quadratic_operator(const CMat& g, const Poly& f);

// e^{ip(x0)/hbar} det(p''/(2 pi i hbar))^{-1/2} sum_{l <= order} hbar^l M_l b(x0)
cplx sp_expand(const PhaseProblem& p, double hbar, int order);
// The individual M_l b(x0) for l = 0..order.
std::vector<cplx> sp_coefficients(const PhaseProblem& p, int order);
// det(p''/(2 pi i hbar))^{-1/2}, branch fixed by continuity from Im p'' > 0
cplx sp_prefactor(const CMat& hessian, double hbar);

struct HessianCase {
  CMat matrix;      // real coordinates (x, y, gauge angles)
  cplx det;         // dense LU
  cplx det_closed;  // closed form in |z| and theta
  CMat inverse;     // via block_inverse_special
  BlockMatrix blocks;
  CVec u0;
  std::vector<CVec> tangents;  // T_angle(g) z
};

// angles: (psi) for (3,4); (theta, alpha, gamma) for (5,8)
HessianCase hessian_case(CaseId c, const CVec& z, const std::vector<double>& angles);

// Displayed form of -(A^{-1}) D.D as a coefficient matrix in the real
// coordinates of hessian_case.
CMat display_operator(CaseId c, const CVec& z, const std::vector<double>& angles);

}  // namespace sphstar
