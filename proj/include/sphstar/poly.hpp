#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sphstar/types.hpp"

namespace sphstar {

using Exponent = std::vector<std::uint16_t>;

// Sparse multivariate polynomial with complex coefficients, keyed by
// exponent vectors. Iteration order is lexicographic in the exponents.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, cplx c);
  static Poly variable(std::size_t nvars, std::size_t i, cplx c = 1.0);
  static Poly monomial(Exponent e, cplx c);
  // sum_j a_j x_{offset + j}
  static Poly linear(std::size_t nvars, const CVec& a, std::size_t offset = 0);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int degree() const;
  cplx coeff(const Exponent& e) const;

  void add_term(const Exponent& e, cplx c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx c);
  Poly operator+(const Poly& o) const { Poly r(*this); r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r(*this); r -= o; return r; }
  Poly operator*(cplx c) const { Poly r(*this); r *= c; return r; }
  Poly operator*(const Poly& o) const;

  Poly pow(unsigned k) const;
  // product, discarding monomials above max_degree
  Poly mul_truncated(const Poly& o, int max_degree) const;
  Poly truncated(int max_degree) const;
  Poly homogeneous_part(int degree) const;

  Poly derivative(std::size_t var) const;
  // coefficients conjugated (x -> conj(p(conj x)))
  Poly conj_coeffs() const;
  // re-embed into a larger variable set: variable i -> variable map[i]
  Poly remap(std::size_t nvars, const std::vector<std::size_t>& map) const;
  // composition: variable i -> images[i]
  Poly substitute(const std::vector<Poly>& images) const;

  cplx evaluate(std::span<const cplx> x) const;
  cplx evaluate(const CVec& x) const;
  double max_abs_coeff() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, cplx> terms_;
};

}  // namespace sphstar
