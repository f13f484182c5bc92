#pragma once

#include <vector>

#include "sphstar/geometry.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

// sum_l coeffs[l] (x.alpha)^l on S^n, with x.alpha = sum_s x_s conj(alpha_s).
struct IsotropicTower {
  CaseId case_id;
  QuadricPoint alpha;
  std::vector<cplx> coeffs;

  static IsotropicTower pure(CaseId c, const QuadricPoint& alpha, int degree, cplx coef = 1.0);
  cplx evaluate(const RVec& x) const;
};

enum class DiagOp { Laplacian, M, MInverse, N };

IsotropicTower apply_diag(DiagOp op, const IsotropicTower& t, double hbar);
IsotropicTower apply_E(int k, const IsotropicTower& t, double hbar);  // k is 1-based
IsotropicTower apply_A(int k, const IsotropicTower& t, double hbar);

// factor multiplying hbar l conj(alpha_k) in A_k (x.alpha)^l
double lowering_factor(int n, int l);

IsotropicTower coherent_tower(CaseId c, const QuadricPoint& alpha, double hbar, int L);

// <(x.beta)^l, (x.alpha)^l> = k_{n,l} (alpha.beta)^l on the normalized sphere
double pairing_constant(CaseId c, int l);
cplx inner_tower(const IsotropicTower& t1, const IsotropicTower& t2);
double tower_norm(const IsotropicTower& t);

}  // namespace sphstar
