#include "sphstar/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphstar/geometry.hpp"
#include "sphstar/specialfn.hpp"

namespace sphstar {

namespace {

void check_args(CaseId c, const CVec& z, const CVec& w, double hbar) {
  if (z.size() != c.m() || w.size() != c.m())
    throw std::invalid_argument("kernel: vector length does not match case");
  if (!(hbar > 0.0)) throw std::invalid_argument("kernel: hbar must be positive");
}

// The series form in 2m variables (u, conj v).
Poly form_poly_two(CaseId c) {
  const std::size_t m = c.m(), nv = 2 * m;
  auto uv = [&](int i, int j, double s) {  // s * u_i conj(v_j), 1-based
    Exponent e(nv, 0);
    e[i - 1] = 1;
    e[m + j - 1] = 1;
    return Poly::monomial(e, s);
  };
  if (c.m() == 2) {
    const Poly d = uv(1, 1, 1) + uv(2, 2, 1);
    return d * d;
  }
  if (c.m() == 4) return (uv(1, 1, 1) + uv(2, 2, 1)) * (uv(3, 3, 1) + uv(4, 4, 1));
  Poly a(nv), b(nv);
  for (int k = 1; k <= 4; ++k) a += uv(k, k, 1);
  for (int k = 5; k <= 8; ++k) b += uv(k, k, 1);
  const Poly p = uv(7, 1, 1) + uv(8, 2, -1) + uv(5, 3, 1) + uv(6, 4, -1);
  const Poly q = uv(2, 8, 1) + uv(3, 5, -1) + uv(4, 6, 1) + uv(1, 7, -1);
  return a * b + p * q;
}

Poly series_from_form(CaseId c, const Poly& form, double hbar, int L) {
  if (L < 1) throw std::invalid_argument("kernel series: L must be >= 1");
  Poly term = Poly::constant(form.nvars(), 1.0);
  Poly sum = term;
  for (int k = 1; k < L; ++k) {
    term = term * form;
    term *= kernel_coeff_ratio(c, k, hbar);
    sum += term;
  }
  return sum;
}

}  // namespace

std::string to_string(KernelMethod m) {
  switch (m) {
    case KernelMethod::Series:
      return "series";
    case KernelMethod::Closed:
      return "closed";
    default:
      return "haar";
  }
}

int default_truncation(CaseId c) {
  if (c.m() == 2) return 40;
  if (c.m() == 4) return 30;
  return 25;
}

cplx kernel_form(CaseId c, const CVec& z, const CVec& w) {
  if (c.m() == 2) {
    const cplx d = cdot(z, w);
    return d * d;
  }
  if (c.m() == 4) return cdot(z.head(2), w.head(2)) * cdot(z.tail(2), w.tail(2));
  return varrho(z, w);
}

double kernel_coeff_ratio(CaseId c, int k, double hbar) {
  const double h2 = hbar * hbar;
  if (c.m() == 2) return 1.0 / ((2.0 * k) * (2.0 * k - 1.0) * h2);
  if (c.m() == 4) return 1.0 / (double(k) * k * h2);
  return 1.0 / (double(k) * (k + 1.0) * h2);
}

KernelEval q_series(CaseId c, const CVec& z, const CVec& w, double hbar, int L) {
  check_args(c, z, w, hbar);
  if (L < 1) throw std::invalid_argument("q_series: L must be >= 1");
  const cplx f = kernel_form(c, z, w);
  cplx term = 1.0, sum = 1.0;
  for (int k = 1; k < L; ++k) {
    term *= f * kernel_coeff_ratio(c, k, hbar);
    sum += term;
  }
  return {sum, KernelMethod::Series, L, hbar};
}

KernelEval q_closed(CaseId c, const CVec& z, const CVec& w, double hbar) {
  check_args(c, z, w, hbar);
  const cplx ab = pairing(c, z, w);
  if (ab == 0.0) return {1.0, KernelMethod::Closed, 0, hbar};
  const BesselOrder order = order_for_n(c.n());
  const double nu = order_value(order);
  const cplx s = sqrt_principal(2.0 * ab) / hbar;
  const cplx v = std::tgamma(nu + 1.0) * std::pow(0.5 * s, -nu) * bessel_i(order, s);
  return {v, KernelMethod::Closed, 0, hbar};
}

KernelEval q_haar(CaseId c, const CVec& z, const CVec& w, double hbar, int resolution) {
  check_args(c, z, w, hbar);
  cplx sum = 0.0;
  for (const auto& [g, wt] : haar_nodes(c, resolution)) sum += wt * std::exp(cdot(z, act_G(g, w)) / hbar);
  return {sum, KernelMethod::Haar, resolution, hbar};
}

cplx pairing(CaseId c, const CVec& z, const CVec& w) {
  if (c.m() == 2) {
    const cplx d = cdot(z, w);
    return 0.5 * d * d;
  }
  return 2.0 * kernel_form(c, z, w);
}

cplx overlap_asymptotic(CaseId c, const CVec& z, const CVec& w, double hbar) {
  check_args(c, z, w, hbar);
  const cplx ab = pairing(c, z, w);
  if (ab == 0.0) throw std::domain_error("overlap_asymptotic: rho(z).rho(w) = 0");
  const cplx s = sqrt_principal(2.0 * ab) / hbar;
  const double n = c.n();
  return std::tgamma((n - 1.0) / 2.0) * std::pow(s, -(n - 2.0) / 2.0) *
         std::pow(2.0, (n - 4.0) / 2.0) / std::sqrt(std::numbers::pi) * std::exp(s);
}

Poly kernel_poly_two(CaseId c, double hbar, int L) {
  return series_from_form(c, form_poly_two(c), hbar, L);
}

Poly kernel_poly_first(CaseId c, const CVec& w, double hbar, int L) {
  if (w.size() != c.m()) throw std::invalid_argument("kernel_poly_first: length");
  const std::size_t m = c.m();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < m; ++i) images.push_back(Poly::variable(m, i));
  for (std::size_t j = 0; j < m; ++j) images.push_back(Poly::constant(m, std::conj(w[j])));
  return series_from_form(c, form_poly_two(c).substitute(images), hbar, L);
}

double series_tail_estimate(CaseId c, double form_diag, double hbar, int L, int shift) {
  if (L < 1) throw std::invalid_argument("series_tail_estimate: L must be >= 1");
  const int cut = std::max(0, L - shift);
  double t = 1.0, head = 0.0, tail = 0.0;
  for (int k = 0;; ++k) {
    if (k > 0) t *= form_diag * kernel_coeff_ratio(c, k, hbar);
    if (k < L) head += t;
    if (k >= cut) tail += t;
    if (k >= L && (t == 0.0 || t <= 1e-18 * tail)) break;
    if (k > 100000) break;
  }
  return tail / head;
}

int truncation_for(CaseId c, double form_diag, double hbar, double tol, int shift) {
  for (int L = 1; L < 5000; ++L)
    if (series_tail_estimate(c, form_diag, hbar, L, shift) <= tol) return L;
  throw std::runtime_error("truncation_for: no truncation below 5000 reaches the tolerance");
}

}  // namespace sphstar
