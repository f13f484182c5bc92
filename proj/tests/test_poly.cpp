#include <doctest.h>

#include "sphstar/poly.hpp"

using namespace sphstar;

namespace {
Poly x(int i) { return Poly::variable(3, i); }
}  // namespace

TEST_CASE("products and powers expand like the binomial theorem") {
  const Poly p = (x(0) + x(1)).pow(4);
  CHECK(p.size() == 5);
  CHECK(p.coeff({2, 2, 0}) == cplx(6.0));
  CHECK(p.coeff({1, 3, 0}) == cplx(4.0));
  CHECK(p.degree() == 4);
}

TEST_CASE("cancellation leaves no zero coefficients") {
  Poly p = x(0) * x(1) - x(1) * x(0);
  CHECK(p.empty());
  p.add_term({0, 0, 0}, 0.0);
  CHECK(p.empty());
}

TEST_CASE("derivative and evaluation agree with hand computation") {
  const Poly p = x(0).pow(3) * x(2) * cplx(2.0, 1.0) + x(1);
  const Poly d = p.derivative(0);
  const CVec at = (CVec(3) << 2.0, 5.0, cplx(0, 1)).finished();
  CHECK(std::abs(d.evaluate(at) - cplx(2.0, 1.0) * 3.0 * 4.0 * cplx(0, 1)) < 1e-14);
  CHECK(std::abs(p.evaluate(at) - (cplx(2.0, 1.0) * 8.0 * cplx(0, 1) + 5.0)) < 1e-14);
}

TEST_CASE("truncated multiplication drops high degrees only") {
  const Poly a = Poly::constant(3, 1.0) + x(0);
  const Poly full = a.pow(3);
  const Poly t = a.pow(2).mul_truncated(a, 2);
  CHECK(t.degree() == 2);
  CHECK((t - full.truncated(2)).empty());
}

TEST_CASE("substitution composes polynomials") {
  // p(x0, x1, x2) = x0 x1 with x0 -> x0 + x2, x1 -> 2 x1
  const Poly p = x(0) * x(1);
  const Poly q = p.substitute({x(0) + x(2), x(1) * 2.0, x(2)});
  CHECK((q - (x(0) * x(1) * 2.0 + x(2) * x(1) * 2.0)).empty());
}

TEST_CASE("remap moves variables into a larger space") {
  const Poly p = x(0) * x(2).pow(2);
  const Poly q = p.remap(5, {4, 0, 1});
  CHECK(q.coeff({0, 2, 0, 0, 1}) == cplx(1.0));
}
