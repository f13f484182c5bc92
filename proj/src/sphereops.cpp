#include "sphstar/sphereops.hpp"

#include <cmath>
#include <stdexcept>

namespace sphstar {

namespace {

double half_shift(int n, int l) { return l + 0.5 * (n - 1); }

// log of the coefficient of (alpha.beta)^l in the kernel series at hbar = 1
double log_series_coefficient(CaseId c, int l) {
  const double lf = std::lgamma(l + 1.0), l2 = l * std::log(2.0);
  if (c.m() == 2) return l2 - std::lgamma(2.0 * l + 1.0);
  if (c.m() == 4) return -2.0 * lf - l2;
  return -lf - std::lgamma(l + 2.0) - l2;
}

double coherent_coefficient(int n, int l, double hbar) {
  return std::sqrt(2.0 * l + n - 1.0) / (std::tgamma(l + 1.0) * std::sqrt(n - 1.0)) * std::pow(hbar, -l);
}

void check_index(const IsotropicTower& t, int k) {
  if (k < 1 || k > t.case_id.dim()) throw std::invalid_argument("tower operator: index out of range");
}

}  // namespace

IsotropicTower IsotropicTower::pure(CaseId c, const QuadricPoint& alpha, int degree, cplx coef) {
  IsotropicTower t{c, alpha, std::vector<cplx>(degree + 1, 0.0)};
  t.coeffs[degree] = coef;
  return t;
}

cplx IsotropicTower::evaluate(const RVec& x) const {
  if (x.size() != case_id.dim()) throw std::invalid_argument("IsotropicTower::evaluate: size");
  const cplx xa = cdot(x.cast<cplx>(), alpha.alpha);
  cplx sum = 0.0, p = 1.0;
  for (const cplx& c : coeffs) {
    sum += c * p;
    p *= xa;
  }
  return sum;
}

IsotropicTower apply_diag(DiagOp op, const IsotropicTower& t, double hbar) {
  const int n = t.case_id.n();
  IsotropicTower r = t;
  for (std::size_t l = 0; l < r.coeffs.size(); ++l) {
    const double h = half_shift(n, int(l));
    double f = 0.0;
    switch (op) {
      case DiagOp::Laplacian:
        f = h * h;
        break;
      case DiagOp::M:
        f = std::sqrt(2.0 / (n - 1)) * std::sqrt(h);
        break;
      case DiagOp::MInverse:
        f = 1.0 / (std::sqrt(2.0 / (n - 1)) * std::sqrt(h));
        break;
      case DiagOp::N:
        f = hbar * double(l);
        break;
    }
    r.coeffs[l] *= f;
  }
  return r;
}

double lowering_factor(int n, int l) {
  return std::sqrt((2.0 * (l - 1) + n - 1) / (2.0 * l + n - 1));
}

IsotropicTower apply_E(int k, const IsotropicTower& t, double hbar) {
  check_index(t, k);
  const cplx ak = std::conj(t.alpha.alpha[k - 1]);
  IsotropicTower r = t;
  r.coeffs.assign(std::max<std::size_t>(t.coeffs.size(), 1) - 1, 0.0);
  if (r.coeffs.empty()) r.coeffs.push_back(0.0);
  for (std::size_t l = 1; l < t.coeffs.size(); ++l) r.coeffs[l - 1] = hbar * double(l) * ak * t.coeffs[l];
  return r;
}

IsotropicTower apply_A(int k, const IsotropicTower& t, double hbar) {
  IsotropicTower r = apply_E(k, t, hbar);
  const int n = t.case_id.n();
  for (std::size_t l = 1; l < t.coeffs.size(); ++l) r.coeffs[l - 1] *= lowering_factor(n, int(l));
  return r;
}

IsotropicTower coherent_tower(CaseId c, const QuadricPoint& alpha, double hbar, int L) {
  if (L < 1) throw std::invalid_argument("coherent_tower: L must be >= 1");
  if (!(hbar > 0.0)) throw std::invalid_argument("coherent_tower: hbar must be positive");
  IsotropicTower t{c, alpha, {}};
  for (int l = 0; l <= L; ++l) t.coeffs.push_back(coherent_coefficient(c.n(), l, hbar));
  return t;
}

double pairing_constant(CaseId c, int l) {
  const int n = c.n();
  const double log_c2 = std::log((2.0 * l + n - 1.0) / (n - 1.0)) - 2.0 * std::lgamma(l + 1.0);
  return std::exp(log_series_coefficient(c, l) - log_c2);
}

cplx inner_tower(const IsotropicTower& t1, const IsotropicTower& t2) {
  if (!(t1.case_id == t2.case_id)) throw std::invalid_argument("inner_tower: case mismatch");
  const cplx ab = cdot(t2.alpha.alpha, t1.alpha.alpha);
  const std::size_t L = std::min(t1.coeffs.size(), t2.coeffs.size());
  cplx sum = 0.0, p = 1.0;
  for (std::size_t l = 0; l < L; ++l) {
    sum += t1.coeffs[l] * std::conj(t2.coeffs[l]) * pairing_constant(t1.case_id, int(l)) * p;
    p *= ab;
  }
  return sum;
}

double tower_norm(const IsotropicTower& t) { return std::sqrt(std::max(0.0, inner_tower(t, t).real())); }

}  // namespace sphstar
