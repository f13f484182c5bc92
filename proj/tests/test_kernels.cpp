#include <doctest.h>

#include <cmath>

#include "sphstar/geometry.hpp"
#include "sphstar/kernels.hpp"

using namespace sphstar;

namespace {

const CaseId kCases[] = {CaseId::c22(), CaseId::c34(), CaseId::c58()};

// mpmath references
constexpr double kCosh1 = 1.5430806348152437;
constexpr double kI0_2 = 2.2795853023360673;
constexpr double kI1_2 = 1.5906368546373291;

CVec vec(std::initializer_list<cplx> v) {
  CVec z(v.size());
  int i = 0;
  for (cplx x : v) z[i++] = x;
  return z;
}

CVec unit8(int a, int b) {
  CVec z = CVec::Zero(8);
  z[a - 1] = 1.0;
  z[b - 1] = 1.0;
  return z;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("series values") {
  CHECK(std::abs(q_series(CaseId::c22(), vec({1, 0}), vec({1, 0}), 1.0, 40).value - kCosh1) < 1e-14);
  CHECK(q_series(CaseId::c22(), vec({1, 0}), vec({0, 1}), 1.0, 40).value == cplx(1.0));
  CHECK(std::abs(q_series(CaseId::c34(), vec({1, 0, 1, 0}), vec({1, 0, 1, 0}), 1.0, 30).value - kI0_2) <
        1e-14);
  CHECK(std::abs(q_series(CaseId::c58(), unit8(1, 5), unit8(1, 5), 1.0, 25).value - kI1_2) < 1e-14);
  const KernelEval e = q_series(CaseId::c34(), vec({1, 0, 1, 0}), vec({1, 0, 1, 0}), 0.5, 12);
  CHECK(e.truncation_or_resolution == 12);
  CHECK(e.method == KernelMethod::Series);
  CHECK_THROWS(q_series(CaseId::c22(), vec({1, 0}), vec({1, 0}), 0.0, 10));
  CHECK_THROWS(q_series(CaseId::c22(), vec({1, 0}), vec({1, 0}), 1.0, 0));
}

TEST_CASE("closed form values") {
  CHECK(std::abs(q_closed(CaseId::c22(), vec({1, 0}), vec({1, 0}), 1.0).value - kCosh1) < 1e-14);
  CHECK(std::abs(q_closed(CaseId::c58(), unit8(1, 5), unit8(1, 5), 1.0).value - kI1_2) < 1e-14);
  CHECK(std::abs(q_closed(CaseId::c34(), vec({1, 0, 1, 0}), vec({1, 0, 1, 0}), 1.0).value - kI0_2) < 1e-14);
  CHECK(q_closed(CaseId::c22(), vec({1, 0}), vec({0, 1}), 1.0).value == cplx(1.0));
  CHECK(q_closed(CaseId::c22(), vec({1, 0}), vec({1, 0}), 1.0).truncation_or_resolution == 0);
}

TEST_CASE("closed form rejects the branch cut") {
  // (z.w)^2 = -1 gives alpha.beta = -1/2
  CHECK_THROWS_AS(q_closed(CaseId::c22(), vec({1, 0}), vec({cplx(0, 1), 0}), 1.0), std::domain_error);
}

TEST_CASE("Haar averages") {
  CHECK(std::abs(q_haar(CaseId::c22(), vec({1, 0}), vec({1, 0}), 1.0, 1).value - kCosh1) < 1e-15);
  CHECK(std::abs(q_haar(CaseId::c34(), vec({1, 0, 1, 0}), vec({1, 0, 1, 0}), 1.0, 64).value - kI0_2) <
        1e-10);
  CHECK(std::abs(q_haar(CaseId::c58(), unit8(1, 5), unit8(1, 5), 1.0, 32).value - kI1_2) < 1e-6);
}

TEST_CASE("pairing") {
  CHECK(pairing(CaseId::c22(), vec({1, 0}), vec({1, 0})) == cplx(0.5));
  CHECK(pairing(CaseId::c34(), vec({1, 0, 1, 0}), vec({1, 0, 1, 0})) == cplx(2.0));
  CHECK(pairing(CaseId::c58(), unit8(1, 5), unit8(1, 5)) == cplx(2.0));
  std::mt19937_64 rng(31);
  for (auto c : kCases)
    for (int t = 0; t < 20; ++t) {
      const CVec z = random_cvec(c.m(), 1.5, rng), w = random_cvec(c.m(), 1.5, rng);
      const cplx direct = rho(c, w).alpha.dot(rho(c, z).alpha);
      CHECK(std::abs(pairing(c, z, w) - direct) < 1e-12);
    }
}

TEST_CASE("three routes agree") {
  std::mt19937_64 rng(37);
  for (auto c : kCases)
    for (double h : {0.5, 1.0})
      for (int t = 0; t < 6; ++t) {
        const CVec z = random_cvec(c.m(), 1.5, rng), w = random_cvec(c.m(), 1.5, rng);
        cplx closed;
        try {
          closed = q_closed(c, z, w, h).value;
        } catch (const std::domain_error&) {
          continue;
        }
        const cplx series = q_series(c, z, w, h, default_truncation(c)).value;
        const cplx haar = q_haar(c, z, w, h, c.m() == 8 ? 24 : 64).value;
        CHECK(rel(series, closed) <= 1e-9);
        CHECK(rel(haar, closed) <= 1e-6);
      }
}

TEST_CASE("kernel symmetries") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (auto c : kCases)
    for (int t = 0; t < 10; ++t) {
      const CVec z = random_cvec(c.m(), 1.5, rng), w = random_cvec(c.m(), 1.5, rng);
      const cplx a = q_series(c, z, w, 0.7, default_truncation(c)).value;
      const cplx b = q_series(c, w, z, 0.7, default_truncation(c)).value;
      CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
      const GroupElemG g = c.m() == 2   ? GroupElemG::sign(c, -1)
                           : c.m() == 4 ? GroupElemG::angle(c, ang(rng))
                                        : GroupElemG::su2(c, 0.4, ang(rng), ang(rng));
      const cplx gw = q_series(c, z, act_G(g, w), 0.7, default_truncation(c)).value;
      CHECK(std::abs(gw - a) <= 1e-12 * std::max(1.0, std::abs(a)));
      const cplx d = q_series(c, z, z, 0.7, default_truncation(c)).value;
      CHECK(d.real() > 0.0);
      CHECK(std::abs(d.imag()) <= 1e-12 * d.real());
    }
}

TEST_CASE("series polynomials reproduce the series") {
  std::mt19937_64 rng(43);
  for (auto c : kCases) {
    const CVec z = random_cvec(c.m(), 1.2, rng), w = random_cvec(c.m(), 1.2, rng);
    const int L = 8;
    const cplx ref = q_series(c, z, w, 0.6, L).value;
    CHECK(std::abs(kernel_poly_first(c, w, 0.6, L).evaluate(z) - ref) < 1e-12 * std::abs(ref));
    CVec uv(2 * c.m());
    uv << z, w.conjugate();
    CHECK(std::abs(kernel_poly_two(c, 0.6, L).evaluate(uv) - ref) < 1e-12 * std::abs(ref));
  }
}

TEST_CASE("overlap asymptotics") {
  const cplx a = overlap_asymptotic(CaseId::c22(), vec({1, 0}), vec({1, 0}), 0.1);
  CHECK(std::abs(a - 0.5 * std::exp(10.0)) < 1e-9 * 0.5 * std::exp(10.0));
  CHECK(rel(a, cplx(std::cosh(10.0))) < 1e-8);

  const double h = 0.05;
  const CVec z = vec({1, 0, 1, 0});
  const double e34 = rel(overlap_asymptotic(CaseId::c34(), z, z, h), q_closed(CaseId::c34(), z, z, h).value);
  CHECK(e34 <= 1.1 * h / 16.0);
  CHECK(e34 >= 0.9 * h / 16.0);

  const CVec zc[] = {vec({1, 0}), z, unit8(1, 5)};
  for (int i = 0; i < 3; ++i) {
    const CaseId c = kCases[i];
    double prev = INFINITY;
    for (double hb : {0.2, 0.1, 0.05}) {
      const double e = rel(overlap_asymptotic(c, zc[i], zc[i], hb), q_closed(c, zc[i], zc[i], hb).value);
      CHECK(e < prev);
      prev = e;
    }
  }
  CHECK_THROWS(overlap_asymptotic(CaseId::c22(), vec({1, 0}), vec({0, 1}), 0.1));
}

TEST_CASE("truncation selection") {
  const int L = truncation_for(CaseId::c22(), 0.25 * 16, 0.1, 1e-14);
  CHECK(series_tail_estimate(CaseId::c22(), 4.0, 0.1, L, 0) <= 1e-14);
  CHECK(series_tail_estimate(CaseId::c22(), 4.0, 0.1, L - 1, 0) > 1e-14);
  CHECK(truncation_for(CaseId::c58(), 1.0, 1.0, 1e-14, 3) >= truncation_for(CaseId::c58(), 1.0, 1.0, 1e-14, 0));
}
