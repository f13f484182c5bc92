#pragma once

#include <cstdint>
#include <limits>

#include "sphstar/geometry.hpp"
#include "sphstar/poly.hpp"
#include "sphstar/symbols.hpp"

namespace sphstar {

enum class StarMethod { Oracle, MonteCarlo };

struct StarConfig {
  double hbar = 0.1;
  int truncation = 0;  // kernel series terms; 0 picks one from the tail estimate
  int mc_samples = 100000;
  std::uint64_t seed = 1;
  StarMethod method = StarMethod::Oracle;
  double tail_tol = 1e-12;  // largest accepted truncation-tail estimate
};

struct StarResult {
  cplx value;
  double tail_estimate;
  int truncation;
};

struct MonteCarloResult {
  cplx value;
  double std_error;
  long samples;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a! hbar^|a| for each exponent vector; the Bargmann-measure moment of |u^a|^2
double gaussian_moment(const Exponent& a, double hbar);
// Integral of a polynomial in (u, conj u) (variables 0..m-1, m..2m-1)
// against the Gaussian measure with variance hbar per complex coordinate.
cplx gaussian_integrate(const Poly& p, double hbar);
// <h, g> = integral of h(u) conj(g(u)) for holomorphic polynomials h, g
cplx bargmann_inner(const Poly& h, const Poly& g, double hbar);

int auto_truncation(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                    double hbar, double tol);

StarResult star_oracle(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                       const StarConfig& cfg);
MonteCarloResult star_montecarlo(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                                 const CVec& z, const StarConfig& cfg);
// Independent evaluation via the Haar form of both kernels and exact Gaussian
// smoothing of the polynomial integrand; exact for m=2, quadrature in the
// gauge angles otherwise.
cplx star_heat(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
               double hbar, int resolution);

cplx star_firstorder(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                     double hbar);

double check_F_invariance(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                          const GroupElemF& g, const CVec& z, const StarConfig& cfg);

struct AssociativityResult {
  cplx left;   // (f1 * f2) * f3
  cplx right;  // f1 * (f2 * f3)
  double residual;
};
AssociativityResult check_associativity(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                                        const SymbolPoly& f3, const CVec& z,
                                        const StarConfig& cfg);

}  // namespace sphstar
