#pragma once

#include "sphstar/types.hpp"

namespace sphstar {

// The three orders (n-3)/2 that occur: -1/2, 0, 1.
enum class BesselOrder { MinusHalf, Zero, One };

double order_value(BesselOrder nu);
BesselOrder order_for_n(int n);

enum class BesselMode { Series, Asymptotic, Auto };

// Principal branch, Arg in (-pi, pi). Throws on the closed negative real axis.
cplx sqrt_principal(cplx w);

// Modified Bessel function of the first kind I_nu(w).
cplx bessel_i(BesselOrder nu, cplx w, BesselMode mode = BesselMode::Auto);

inline constexpr double kBesselCrossover = 20.0;

}  // namespace sphstar
