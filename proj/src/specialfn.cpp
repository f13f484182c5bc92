#include "sphstar/specialfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphstar {

double order_value(BesselOrder nu) {
  switch (nu) {
    case BesselOrder::MinusHalf:
      return -0.5;
    case BesselOrder::Zero:
      return 0.0;
    default:
      return 1.0;
  }
}

BesselOrder order_for_n(int n) {
  if (n == 2) return BesselOrder::MinusHalf;
  if (n == 3) return BesselOrder::Zero;
  if (n == 5) return BesselOrder::One;
  throw std::invalid_argument("order_for_n: n must be 2, 3 or 5");
}

cplx sqrt_principal(cplx w) {
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw std::domain_error("sqrt_principal: argument on the branch cut (real <= 0)");
  return std::sqrt(w);
}

namespace {

cplx series(double nu, cplx w) {
  if (nu < 0.0 && w == 0.0) throw std::domain_error("bessel_i: order -1/2 at w = 0");
  const cplx q = 0.25 * w * w;
  // l = 0 term is 1/Gamma(nu+1); later terms by ratio q / (l (nu + l))
  cplx term = 1.0 / std::tgamma(nu + 1.0);
  cplx sum = term;
  int small = 0;
  for (int l = 1; l < 200; ++l) {
    term *= q / (l * (nu + l));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  const cplx pre = nu == 0.0 ? cplx(1.0) : std::pow(0.5 * w, nu);
  return pre * sum;
}

cplx asymptotic(double nu, cplx w) {
  if (w == 0.0 || std::abs(std::arg(w)) >= std::numbers::pi / 2)
    throw std::domain_error("bessel_i: asymptotic mode needs |Arg w| < pi/2");
  const double mu = 4.0 * nu * nu;
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double a = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    const cplx next = -term * a / (8.0 * k * w);
    if (next == 0.0 || std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return std::exp(w) / std::sqrt(2.0 * std::numbers::pi * w) * sum;
}

}  // namespace

cplx bessel_i(BesselOrder order, cplx w, BesselMode mode) {
  const double nu = order_value(order);
  switch (mode) {
    case BesselMode::Series:
      return series(nu, w);
    case BesselMode::Asymptotic:
      return asymptotic(nu, w);
    default:
      if (std::abs(w) >= kBesselCrossover && std::abs(std::arg(w)) < std::numbers::pi / 2)
        return asymptotic(nu, w);
      return series(nu, w);
  }
}

}  // namespace sphstar
