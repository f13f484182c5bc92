#pragma once

#include <string>
#include <vector>

#include "sphstar/poly.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

// A*^s A^k: creation exponents s, annihilation exponents k, each of length n+1.
struct NormalWord {
  Exponent s;
  Exponent k;

  static NormalWord identity(CaseId c);
  static NormalWord creation(CaseId c, int l);      // A_l*, l is 1-based
  static NormalWord annihilation(CaseId c, int l);  // A_l
  NormalWord adjoint() const { return {k, s}; }
  bool operator==(const NormalWord&) const = default;
};

// Product of two normal words; throws unless the result is normal-ordered.
NormalWord normal_product(const NormalWord& a, const NormalWord& b);
// "A3", "A3*", "A1*.A2*.A3"; 1-based indices
NormalWord parse_word(CaseId c, const std::string& text);
std::string format_word(const NormalWord& w);

// Linear combination of normal words. Stored as a polynomial in the 2(n+1)
// formal variables (rho_1..rho_{n+1}, conj rho_1..conj rho_{n+1}).
class SymbolPoly {
 public:
  explicit SymbolPoly(CaseId c);
  static SymbolPoly word(CaseId c, const NormalWord& w, cplx coef = 1.0);
  static SymbolPoly constant(CaseId c, cplx v);

  CaseId case_id() const { return case_; }
  const Poly& poly() const { return p_; }
  std::vector<std::pair<NormalWord, cplx>> terms() const;
  std::size_t size() const { return p_.size(); }

  void add(const NormalWord& w, cplx coef);
  SymbolPoly operator+(const SymbolPoly& o) const;
  SymbolPoly operator*(cplx c) const;
  SymbolPoly adjoint() const;
  int max_degree() const;  // max |s| + |k|

 private:
  SymbolPoly(CaseId c, Poly p) : case_(c), p_(std::move(p)) {}
  friend SymbolPoly compose_with_rotation(const SymbolPoly&, const RMat&);
  CaseId case_;
  Poly p_;
};

struct ExtSymbolValue {
  cplx value;
  CVec first_arg;
  CVec second_arg;
};

ExtSymbolValue word_symbol_ext(CaseId c, const NormalWord& word, const CVec& w, const CVec& z);
cplx poly_symbol_ext(CaseId c, const SymbolPoly& p, const CVec& w, const CVec& z);
inline cplx poly_symbol(CaseId c, const SymbolPoly& p, const CVec& z) {
  return poly_symbol_ext(c, p, z, z);
}

// v -> f(v, z), a polynomial in m variables
Poly first_slot_poly(const SymbolPoly& p, const CVec& z);
// u -> conj f(z, u), a polynomial in m variables
Poly conj_second_slot_poly(const SymbolPoly& p, const CVec& z);
// f(u, v) as a polynomial in (u, conj v), 2m variables
Poly two_slot_poly(const SymbolPoly& p);

// f o L(g) expressed through the rotation R with rho(L(g) z) = R rho(z)
SymbolPoly compose_with_rotation(const SymbolPoly& p, const RMat& r);

// Linear vector field v -> sum_j (X v)_j d/dv_j applied to p (m variables).
Poly apply_vector_field(const Poly& p, const CMat& x);
// The constraint fields: one for (3,4), three for (5,8).
std::vector<CMat> constraint_fields(CaseId c);
// Largest coefficient of each constraint field applied to v -> f(v, z).
std::vector<double> check_constraint_ops(CaseId c, const SymbolPoly& p, const CVec& z);

// Haar average over the gauge group of the monomial w^k conj(w)^s, evaluated
// at w; returns the averaged polynomial as a polynomial in (w, conj w).
Poly avg_polynomial(CaseId c, const Exponent& k, const Exponent& s, int resolution);

}  // namespace sphstar
