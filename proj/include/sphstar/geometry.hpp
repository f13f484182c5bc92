#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "sphstar/poly.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

// Point of the null quadric sum_j alpha_j^2 = 0 in C^{n+1}.
struct QuadricPoint {
  CVec alpha;
  cplx quadric_residual() const;  // sum_j alpha_j^2
};

QuadricPoint rho(CaseId c, const CVec& z);
// rho components as homogeneous quadratic polynomials in m variables.
std::vector<Poly> rho_polys(CaseId c);

bool in_tilde_domain(CaseId c, const CVec& z, double tol = 1e-10);

// varrho(z, w) for m = 8; rho(z).rho(w) = 2 varrho(z, w)
cplx varrho(const CVec& z, const CVec& w);

// Gauge group element. m=2: sign; m=4: theta; m=8: (theta, alpha, gamma).
class GroupElemG {
 public:
  static GroupElemG sign(CaseId c, int s);
  static GroupElemG angle(CaseId c, double theta);
  static GroupElemG su2(CaseId c, double theta, double alpha, double gamma);
  static GroupElemG identity(CaseId c);

  CaseId case_id() const { return case_; }
  const std::array<double, 3>& params() const { return p_; }
  CMat matrix() const;  // T(g)

 private:
  GroupElemG(CaseId c, std::array<double, 3> p) : case_(c), p_(p) {}
  CaseId case_;
  std::array<double, 3> p_;
};

// 2x2 matrix [[cos t e^{ia}, sin t e^{ic}], [-sin t e^{-ic}, cos t e^{-ia}]]
Eigen::Matrix2cd su2_matrix(double theta, double alpha, double gamma);
// T = L^t V L with V = kron(I4, g); L the fixed 8x8 signed permutation
CMat gauge8_matrix(const Eigen::Matrix2cd& g);
const RMat& gauge8_L();

CVec act_G(const GroupElemG& g, const CVec& z);

// Symmetry group element: m=2 one SU(2); m=4 pair (V, W); m=8 one SU(4).
class GroupElemF {
 public:
  static GroupElemF su2(const CMat& u);
  static GroupElemF su2_pair(const CMat& v, const CMat& w);
  static GroupElemF su4(const CMat& u);
  static GroupElemF identity(CaseId c);
  static GroupElemF random(CaseId c, std::mt19937_64& rng);

  CaseId case_id() const { return case_; }
  const CMat& first() const { return a_; }
  const CMat& second() const { return b_; }
  CMat matrix() const;  // L(g)

 private:
  GroupElemF(CaseId c, CMat a, CMat b) : case_(c), a_(std::move(a)), b_(std::move(b)) {}
  CaseId case_;
  CMat a_;
  CMat b_;
};

CVec act_F(const GroupElemF& g, const CVec& z);

// R in SO(n+1) with R rho(z) = rho(L(g) z).
RMat rotation_from_F(const GroupElemF& g, double tol = 1e-10);

// Haar-measure quadrature on the gauge group; weights sum to one.
std::vector<std::pair<GroupElemG, double>> haar_nodes(CaseId c, int resolution);

// Haar-random SU(k)
CMat random_special_unitary(int k, std::mt19937_64& rng);
// random point of tilde C^m, scaled to |z| = radius
CVec random_tilde_point(CaseId c, double radius, std::mt19937_64& rng);
// random vector in C^k with |z| uniform in [0.1, max_radius]
CVec random_cvec(int k, double max_radius, std::mt19937_64& rng);

}  // namespace sphstar
