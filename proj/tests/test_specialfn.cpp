#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphstar/specialfn.hpp"

using namespace sphstar;

namespace {
const BesselOrder kOrders[] = {BesselOrder::MinusHalf, BesselOrder::Zero, BesselOrder::One};
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("principal square root") {
  CHECK(std::abs(sqrt_principal(1.0) - 1.0) < 1e-16);
  CHECK(std::abs(sqrt_principal(I) - std::exp(I * std::numbers::pi / 4.0)) < 1e-15);
  CHECK_THROWS_AS(sqrt_principal(-1.0), std::domain_error);
  CHECK_THROWS_AS(sqrt_principal(0.0), std::domain_error);
  const cplx w(-3.0, 1e-9);
  CHECK(std::abs(std::arg(sqrt_principal(w)) - std::arg(w) / 2) < 1e-14);
}

TEST_CASE("series values at small argument") {
  CHECK(bessel_i(BesselOrder::Zero, 0.0) == cplx(1.0));
  CHECK(bessel_i(BesselOrder::One, 0.0) == cplx(0.0));
  CHECK_THROWS(bessel_i(BesselOrder::MinusHalf, 0.0));
  // reference values from 30-digit arithmetic
  CHECK(rel(bessel_i(BesselOrder::MinusHalf, 1.0), 1.23120021459296744650589174245) < 1e-14);
  CHECK(rel(bessel_i(BesselOrder::Zero, 2.0), 2.27958530233606726743720444081) < 1e-14);
  CHECK(rel(bessel_i(BesselOrder::One, 2.0), 1.590636854637329063382254425) < 1e-14);
  const cplx w(3.0, 4.0);
  CHECK(rel(bessel_i(BesselOrder::Zero, w), cplx(-3.39248778827551960971662627084, -1.3239458916287264814904123913)) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder::One, w), cplx(-3.06830958127301135960972173293, -1.53101572850379691379685238302)) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder::MinusHalf, w), cplx(-3.31008455203074034748762787259, -1.36955966415967271331259958672)) < 1e-13);
}

TEST_CASE("large complex arguments through the auto switch") {
  CHECK(rel(bessel_i(BesselOrder::Zero, cplx(15, -10)), cplx(-297160.386390341821803413321699, 84544.9598043964715306647751388)) < 1e-9);
  CHECK(rel(bessel_i(BesselOrder::One, cplx(25, 5)), cplx(1069300081.42952895004357634208, -5503172846.97773108093479330344)) < 1e-9);
}

TEST_CASE("order -1/2 is an elementary function") {
  for (double x = 0.05; x < 40.0; x *= 1.3)
    CHECK(rel(bessel_i(BesselOrder::MinusHalf, x), std::sqrt(2.0 / (std::numbers::pi * x)) * std::cosh(x)) < 1e-12);
}

TEST_CASE("series and asymptotic modes overlap on [10, 30]") {
  for (auto nu : kOrders)
    for (double x = 10.0; x <= 30.0; x += 0.5)
      CHECK(rel(bessel_i(nu, x, BesselMode::Series), bessel_i(nu, x, BesselMode::Asymptotic)) < 1e-8);
}

TEST_CASE("asymptotic mode is restricted to the right half plane") {
  CHECK_THROWS_AS(bessel_i(BesselOrder::Zero, cplx(-20, 1), BesselMode::Asymptotic), std::domain_error);
  CHECK_THROWS_AS(bessel_i(BesselOrder::Zero, cplx(0, 20), BesselMode::Asymptotic), std::domain_error);
}

TEST_CASE("conjugation symmetry") {
  const cplx ws[] = {{0.3, 0.7}, {4.0, -2.5}, {-1.5, 3.0}, {22.0, 9.0}};
  for (auto nu : kOrders)
    for (cplx w : ws)
      CHECK(std::abs(bessel_i(nu, std::conj(w)) - std::conj(bessel_i(nu, w))) <= 1e-13 * std::abs(bessel_i(nu, w)));
}
