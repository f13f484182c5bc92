#include <doctest.h>

#include <cmath>

#include "sphstar/geometry.hpp"
#include "sphstar/kernels.hpp"
#include "sphstar/quadrature.hpp"
#include "sphstar/starprod.hpp"

using namespace sphstar;

namespace {

CVec vec(std::initializer_list<cplx> v) {
  CVec z(v.size());
  int i = 0;
  for (cplx x : v) z[i++] = x;
  return z;
}

SymbolPoly W(CaseId c, const char* text) { return SymbolPoly::word(c, parse_word(c, text)); }

StarConfig cfg_at(double hbar) {
  StarConfig cfg;
  cfg.hbar = hbar;
  return cfg;
}

double slope(const std::vector<double>& h, const std::vector<double>& r) {
  const double n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(r[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("Gaussian moments match radial quadrature") {
  const QuadRule q = gauss_legendre(200, 0.0, 14.0);
  for (double h : {0.5, 1.0})
    for (int a = 0; a < 5; ++a) {
      double s = 0.0;
      for (int i = 0; i < 200; ++i) {
        const double r = q.nodes[i];
        s += q.weights[i] * std::pow(r, 2 * a) * std::exp(-r * r / h) * 2 * r / h;
      }
      CHECK(std::abs(s - gaussian_moment(Exponent{static_cast<std::uint16_t>(a)}, h)) < 1e-10 * s);
    }
  CHECK(gaussian_moment(Exponent{2, 1}, 0.5) == doctest::Approx(2 * 0.125));
}

TEST_CASE("Gaussian integration of monomials") {
  const double h = 0.3;
  CHECK(std::abs(gaussian_integrate(Poly::monomial({1, 0, 1, 0}, 2.0), h) - 2.0 * h) < 1e-15);
  CHECK(gaussian_integrate(Poly::monomial({1, 0, 0, 1}, 1.0), h) == cplx(0.0));
  CHECK(gaussian_integrate(Poly::monomial({2, 0, 1, 0}, 1.0), h) == cplx(0.0));
  const Poly u = Poly::variable(1, 0);
  CHECK(std::abs(bargmann_inner(u.pow(3), u.pow(3), h) - 6.0 * h * h * h) < 1e-15);
}

TEST_CASE("unit law") {
  for (CaseId c : {CaseId::c22(), CaseId::c34()}) {
    const CVec z = c.m() == 2 ? vec({1, 1}) : vec({1, 0.5, 0.2, 1});
    const SymbolPoly one = SymbolPoly::constant(c, 1.0);
    for (const char* w : {"A3", "A1*", "A1*.A2"}) {
      const SymbolPoly f = W(c, w);
      const cplx direct = poly_symbol(c, f, z);
      CHECK(std::abs(star_oracle(c, one, f, z, cfg_at(0.2)).value - direct) < 1e-12 * (1 + std::abs(direct)));
      CHECK(std::abs(star_oracle(c, f, one, z, cfg_at(0.2)).value - direct) < 1e-12 * (1 + std::abs(direct)));
    }
  }
  const CVec z2 = vec({1, 1});
  CHECK(std::abs(star_oracle(CaseId::c22(), SymbolPoly::constant(CaseId::c22(), 1.0),
                             W(CaseId::c22(), "A3"), z2, cfg_at(0.1))
                     .value -
                 1.0) < 1e-12);
}

TEST_CASE("eigen pairs are exact") {
  const CaseId c = CaseId::c22();
  const CVec z = vec({1, 1});
  for (double h : {0.05, 0.1, 0.5, 1.0})
    CHECK(std::abs(star_oracle(c, W(c, "A3*"), W(c, "A3"), z, cfg_at(h)).value - 1.0) < 1e-12);
  const CaseId c4 = CaseId::c34();
  const CVec z4 = vec({1, 0.3, 0.5, 1});
  for (int l = 1; l <= 4; ++l) {
    const std::string a = "A" + std::to_string(l);
    const double r = std::norm(rho(c4, z4).alpha[l - 1]);
    CHECK(std::abs(star_oracle(c4, W(c4, (a + "*").c_str()), W(c4, a.c_str()), z4, cfg_at(0.1)).value - r) <
          1e-11 * (1 + r));
  }
}

TEST_CASE("non-trivial pair carries the hbar correction") {
  const CaseId c = CaseId::c22();
  const CVec z = vec({1, 1});
  const cplx v = star_oracle(c, W(c, "A3"), W(c, "A3*"), z, cfg_at(0.1)).value;
  CHECK(v.real() >= 1.19);
  CHECK(v.real() <= 1.21);
  CHECK(std::abs(v - 1.21) < 1e-11);
}

TEST_CASE("oracle agrees with the heat-flow evaluation") {
  const CaseId c = CaseId::c34();
  const CVec z = vec({1, 0, 1, 0});
  for (double h : {0.2, 0.1}) {
    const cplx a = star_oracle(c, W(c, "A1"), W(c, "A1*"), z, cfg_at(h)).value;
    const cplx b = star_heat(c, W(c, "A1"), W(c, "A1*"), z, h, 64);
    CHECK(std::abs(a - b) < 1e-9 * std::abs(b));
  }
  const CaseId c2 = CaseId::c22();
  const cplx a = star_oracle(c2, W(c2, "A1.A3"), W(c2, "A2*"), vec({0.8, cplx(0.3, 0.4)}), cfg_at(0.3)).value;
  const cplx b = star_heat(c2, W(c2, "A1.A3"), W(c2, "A2*"), vec({0.8, cplx(0.3, 0.4)}), 0.3, 1);
  CHECK(std::abs(a - b) < 1e-10 * (1 + std::abs(b)));
}

TEST_CASE("truncation control") {
  const CaseId c = CaseId::c22();
  StarConfig cfg = cfg_at(0.1);
  cfg.truncation = 3;
  CHECK_THROWS_AS(star_oracle(c, W(c, "A3"), W(c, "A3*"), vec({1, 1}), cfg), TruncationError);
  cfg.truncation = 40;
  const StarResult r = star_oracle(c, W(c, "A3"), W(c, "A3*"), vec({1, 1}), cfg);
  CHECK(r.truncation == 40);
  CHECK(r.tail_estimate <= 1e-12);
  cfg.truncation = 0;
  CHECK(star_oracle(c, W(c, "A3"), W(c, "A3*"), vec({1, 1}), cfg).truncation > 0);
  cfg.hbar = -1.0;
  CHECK_THROWS_AS(star_oracle(c, W(c, "A3"), W(c, "A3*"), vec({1, 1}), cfg), std::invalid_argument);
}

TEST_CASE("first-order expansion") {
  const CaseId c = CaseId::c22();
  const CVec z = vec({1, 1});
  for (double h : {0.05, 0.2}) {
    CHECK(std::abs(star_firstorder(c, W(c, "A3"), W(c, "A3*"), z, h) - (1.0 + 2 * h)) < 1e-14);
    CHECK(std::abs(star_firstorder(c, W(c, "A3*"), W(c, "A3"), z, h) - 1.0) < 1e-14);
    CHECK(std::abs(star_firstorder(c, W(c, "A1"), SymbolPoly::constant(c, 2.5), z, h) -
                   2.5 * poly_symbol(c, W(c, "A1"), z)) < 1e-14);
  }
  CHECK_THROWS_AS(star_firstorder(CaseId::c34(), W(CaseId::c34(), "A1"), W(CaseId::c34(), "A1*"),
                                  vec({1, 0, 0, 0}), 0.1),
                  std::domain_error);
}

TEST_CASE("semiclassical remainder is second order") {
  struct Pair {
    CaseId c;
    const char* f1;
    const char* f2;
    CVec z;
  };
  const Pair pairs[] = {{CaseId::c22(), "A3", "A3*", vec({1, 1})},
                        {CaseId::c22(), "A1", "A1*", vec({0.7, 0.9})},
                        {CaseId::c34(), "A1", "A1*", vec({1, 0, 1, 0})},
                        {CaseId::c34(), "A3", "A3*", vec({0.8, 0.6, 0.6, 0.8})}};
  const std::vector<double> hs = {0.2, 0.1, 0.05};
  for (const Pair& p : pairs) {
    std::vector<double> rem;
    for (double h : hs) {
      const cplx o = star_oracle(p.c, W(p.c, p.f1), W(p.c, p.f2), p.z, cfg_at(h)).value;
      rem.push_back(std::abs(o - star_firstorder(p.c, W(p.c, p.f1), W(p.c, p.f2), p.z, h)));
    }
    CHECK(slope(hs, rem) >= 1.8);
  }
}

TEST_CASE("gauge invariance of the product") {
  std::mt19937_64 rng(83);
  const CaseId c = CaseId::c34();
  const CVec z = vec({1, 0.4, 0.3, 1});
  const cplx a = star_oracle(c, W(c, "A2.A3"), W(c, "A1*"), z, cfg_at(0.2)).value;
  const CVec gz = act_G(GroupElemG::angle(c, 1.1), z);
  const cplx b = star_oracle(c, W(c, "A2.A3"), W(c, "A1*"), gz, cfg_at(0.2)).value;
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
}

TEST_CASE("symmetry invariance") {
  std::mt19937_64 rng(89);
  const CaseId c2 = CaseId::c22();
  CHECK(check_F_invariance(c2, W(c2, "A3"), W(c2, "A3*"), GroupElemF::identity(c2), vec({1, 1}), cfg_at(0.1)) <
        1e-13);
  StarConfig cfg = cfg_at(0.1);
  cfg.truncation = 40;
  for (int t = 0; t < 3; ++t)
    CHECK(check_F_invariance(c2, W(c2, "A3"), W(c2, "A3*"), GroupElemF::random(c2, rng), vec({1, 1}), cfg) <=
          1e-6);
  const CaseId c4 = CaseId::c34();
  cfg.truncation = 30;
  cfg.hbar = 0.2;
  for (int t = 0; t < 3; ++t)
    CHECK(check_F_invariance(c4, W(c4, "A1"), W(c4, "A2*"), GroupElemF::random(c4, rng),
                             vec({0.7, 0.2, 0.4, 0.9}), cfg) <= 1e-5);
}

TEST_CASE("associativity") {
  const CaseId c = CaseId::c22();
  const CVec z = vec({1, 1});
  const auto r = check_associativity(c, W(c, "A3"), W(c, "A3*"), W(c, "A3"), z, cfg_at(0.5));
  CHECK(r.residual <= 1e-6);
  const auto u = check_associativity(c, W(c, "A1"), SymbolPoly::constant(c, 1.0), W(c, "A2*"), z, cfg_at(0.5));
  CHECK(u.residual <= 1e-12);
  const auto again = check_associativity(c, W(c, "A3"), W(c, "A3*"), W(c, "A3"), z, cfg_at(0.5));
  CHECK(again.residual == r.residual);
}

TEST_CASE("largest case smoke test") {
  const CaseId c = CaseId::c58();
  CVec z = CVec::Zero(8);
  z[0] = 0.6;
  z[5] = 0.6;
  StarConfig cfg = cfg_at(1.0);
  cfg.truncation = 6;
  cfg.tail_tol = 1.0;
  const SymbolPoly one = SymbolPoly::constant(c, 1.0);
  const cplx d = poly_symbol(c, W(c, "A2"), z);
  CHECK(std::abs(star_oracle(c, one, W(c, "A2"), z, cfg).value - d) < 1e-12);
  const double r = std::norm(rho(c, z).alpha[1]);
  CHECK(std::abs(star_oracle(c, W(c, "A2*"), W(c, "A2"), z, cfg).value - r) < 1e-12);
}

TEST_CASE("Monte Carlo agrees with the oracle at moderate hbar") {
  const CaseId c = CaseId::c22();
  const CVec z = vec({0.5, 0.3});
  StarConfig cfg = cfg_at(1.0);
  cfg.mc_samples = 100000;
  cfg.seed = 7;
  const MonteCarloResult one =
      star_montecarlo(c, SymbolPoly::constant(c, 1.0), SymbolPoly::constant(c, 1.0), z, cfg);
  CHECK(std::abs(one.value - 1.0) <= 3 * one.std_error);
  const SymbolPoly f1 = W(c, "A3"), f2 = W(c, "A3*");
  const MonteCarloResult mc = star_montecarlo(c, f1, f2, z, cfg);
  const cplx o = star_oracle(c, f1, f2, z, cfg).value;
  CHECK(std::abs(mc.value - o) <= 3 * mc.std_error);
  CHECK(mc.samples == 100000);
  const MonteCarloResult mc2 = star_montecarlo(c, f1, f2, z, cfg);
  CHECK(mc2.value == mc.value);
  cfg.mc_samples = 25000;
  const MonteCarloResult small = star_montecarlo(c, f1, f2, z, cfg);
  const double ratio = mc.std_error / small.std_error;
  CHECK(ratio == doctest::Approx(0.5).epsilon(0.15));
}
