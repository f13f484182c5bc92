#include "sphstar/stationary.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sphstar/geometry.hpp"

namespace sphstar {

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

double binomial(int n, int k) { return std::round(factorial(n) / (factorial(k) * factorial(n - k))); }

bool invertible(const CMat& m) {
  Eigen::FullPivLU<CMat> lu(m);
  lu.setThreshold(1e-13);
  return lu.isInvertible();
}

// all exponent vectors of length d with total degree <= deg
void multi_indices(int d, int deg, std::vector<Exponent>& out) {
  Exponent e(d, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, deg);
}

// Mixed central difference d^alpha f(x0), O(h^2)
cplx central_difference(const RealFn& f, const RVec& x0, const Exponent& a, double h) {
  const int d = int(a.size());
  std::vector<int> idx(d, 0);
  cplx sum = 0.0;
  int order = 0;
  for (auto v : a) order += v;
  while (true) {
    RVec x = x0;
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      x[j] += (0.5 * a[j] - idx[j]) * h;
      w *= ((idx[j] % 2) ? -1.0 : 1.0) * binomial(a[j], idx[j]);
    }
    sum += w * f(x);
    int j = 0;
    while (j < d && ++idx[j] > a[j]) idx[j++] = 0;
    if (j == d) break;
  }
  return sum / std::pow(h, order);
}

// Complex symmetric Hessian from the quadratic part of a jet.
CMat hessian_of_jet(const Poly& jet, int d) {
  CMat h = CMat::Zero(d, d);
  const Poly quad = jet.homogeneous_part(2);
  for (const auto& [e, c] : quad.terms()) {
    std::vector<int> idx;
    for (int j = 0; j < d; ++j)
      for (int t = 0; t < e[j]; ++t) idx.push_back(j);
    if (idx[0] == idx[1]) {
      h(idx[0], idx[0]) = 2.0 * c;
    } else {
      h(idx[0], idx[1]) = c;
      h(idx[1], idx[0]) = c;
    }
  }
  return h;
}

// d^{a+b+c} g(theta, alpha, gamma) / d theta^a d alpha^b d gamma^c
Eigen::Matrix2cd su2_derivative(double t, double al, double ga, int a, int b, int c) {
  const double hp = std::numbers::pi / 2;
  const double ca = std::cos(t + a * hp), sa = std::sin(t + a * hp);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  if (c == 0) {
    m(0, 0) = ca * std::pow(I, b) * std::exp(I * al);
    m(1, 1) = ca * std::pow(-I, b) * std::exp(-I * al);
  }
  if (b == 0) {
    m(0, 1) = sa * std::pow(I, c) * std::exp(I * ga);
    m(1, 0) = -sa * std::pow(-I, c) * std::exp(-I * ga);
  }
  return m;
}

// (x, y, angles) <- (u, ubar, angles)
CMat real_change_of_basis(int m, int s) {
  CMat j = CMat::Zero(2 * m + s, 2 * m + s);
  for (int k = 0; k < m; ++k) {
    j(k, k) = 1.0;
    j(m + k, k) = 1.0;
    j(k, m + k) = I;
    j(m + k, m + k) = -I;
  }
  for (int k = 0; k < s; ++k) j(2 * m + k, 2 * m + k) = 1.0;
  return j;
}

struct GaugeJet {
  CVec u0;
  std::vector<CVec> t1;               // T_a z
  std::vector<std::vector<CVec>> t2;  // T_ab z
};

GaugeJet gauge_jet(CaseId c, const CVec& z, const std::vector<double>& ang) {
  GaugeJet j;
  if (c.m() == 4) {
    if (ang.size() != 1) throw std::invalid_argument("hessian_case: (3,4) takes one angle");
    const CMat t = GroupElemG::angle(c, ang[0]).matrix();
    CMat m = CMat::Zero(4, 4);
    m.diagonal() << -1, -1, 1, 1;
    j.u0 = t * z;
    j.t1 = {I * m * j.u0};
    j.t2 = {{-j.u0}};
    return j;
  }
  if (c.m() != 8) throw std::invalid_argument("hessian_case: only (3,4) and (5,8)");
  if (ang.size() != 3) throw std::invalid_argument("hessian_case: (5,8) takes three angles");
  const double th = ang[0], al = ang[1], ga = ang[2];
  if (th <= 1e-12 || th >= std::numbers::pi / 2 - 1e-12)
    throw std::domain_error("hessian_case: theta must lie strictly inside (0, pi/2)");
  auto tz = [&](int a, int b, int cc) { return CVec(gauge8_matrix(su2_derivative(th, al, ga, a, b, cc)) * z); };
  j.u0 = tz(0, 0, 0);
  const std::array<std::array<int, 3>, 3> unit{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int p = 0; p < 3; ++p) j.t1.push_back(tz(unit[p][0], unit[p][1], unit[p][2]));
  j.t2.assign(3, {});
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      j.t2[p].push_back(tz(unit[p][0] + unit[q][0], unit[p][1] + unit[q][1], unit[p][2] + unit[q][2]));
  return j;
}

CMat sym_outer(const CVec& a, const CVec& b) {
  return 0.5 * (a * b.transpose() + b * a.transpose());
}

}  // namespace

CMat BlockMatrix::assemble() const {
  check();
  const auto l = A.rows(), s = D.rows();
  CMat m(l + s, l + s);
  m << A, B, C, D;
  return m;
}

void BlockMatrix::check() const {
  if (A.rows() != A.cols() || D.rows() != D.cols() || B.rows() != A.rows() ||
      B.cols() != D.cols() || C.rows() != D.rows() || C.cols() != A.cols())
    throw std::invalid_argument("BlockMatrix: blocks are not conformable");
}

cplx block_det(const BlockMatrix& m) {
  m.check();
  Eigen::PartialPivLU<CMat> lu(m.A);
  if (!invertible(m.A)) throw std::domain_error("block_det: A is singular");
  const CMat schur = m.D - m.C * lu.solve(m.B);
  return lu.determinant() * schur.determinant();
}

BlockMatrix block_inverse_special(const BlockMatrix& m) {
  m.check();
  const auto l = m.A.rows();
  const double scale = 1.0 + m.B.squaredNorm();
  if ((m.A - CMat::Identity(l, l)).norm() > 1e-12)
    throw std::invalid_argument("block_inverse_special: A must be the identity");
  if ((m.C - m.B.transpose()).norm() > 1e-12 * scale)
    throw std::invalid_argument("block_inverse_special: C must equal B^t");
  if ((m.B.transpose() * m.B).norm() > 1e-12 * scale)
    throw std::invalid_argument("block_inverse_special: B^t B is not zero");
  if (!invertible(m.D)) throw std::domain_error("block_inverse_special: D is singular");
  const CMat dinv = m.D.inverse();
  const CMat bd = m.B * dinv;
  return {CMat::Identity(l, l) + bd * m.B.transpose(), -bd, -dinv * m.B.transpose(), dinv};
}

Poly taylor_jet_fd(const RealFn& f, const RVec& x0, int degree, double step) {
  const int d = int(x0.size());
  std::vector<Exponent> idx;
  multi_indices(d, degree, idx);
  Poly jet(d);
  for (const auto& a : idx) {
    int order = 0;
    double afact = 1.0;
    for (auto v : a) {
      order += v;
      afact *= factorial(v);
    }
    cplx v;
    if (order == 0) {
      v = f(x0);
    } else {
      // wider steps for higher derivatives keep rounding error in check
      const double h = step * std::pow(2.0, std::max(0, order - 2));
      const cplx d1 = central_difference(f, x0, a, h);
      const cplx d2 = central_difference(f, x0, a, 0.5 * h);
      v = (4.0 * d2 - d1) / 3.0;
    }
    jet.add_term(a, v / afact);
  }
  return jet;
}

Poly apply_quadratic_operator(const CMat& g, const Poly& f) {
  const std::size_t d = f.nvars();
  if (std::size_t(g.rows()) != d || std::size_t(g.cols()) != d)
    throw std::invalid_argument("apply_quadratic_operator: size");
  Poly out(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Poly fj = f.derivative(j);
    if (fj.empty()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (g(j, k) != 0.0) out += fj.derivative(k) * g(j, k);
  }
  return out;
}

cplx sp_prefactor(const CMat& h, double hbar) {
  Eigen::ComplexEigenSolver<CMat> es(-I * h);
  cplx r = 1.0;
  for (Eigen::Index j = 0; j < h.rows(); ++j) r *= std::sqrt(es.eigenvalues()[j] / (2.0 * std::numbers::pi * hbar));
  return 1.0 / r;
}

namespace {

struct PreparedPhase {
  cplx p0;
  CMat hessian;
  Poly p3;
  Poly amp;
};

PreparedPhase prepare(const PhaseProblem& p, int order) {
  if (p.dim < 1 || p.x0.size() != p.dim) throw std::invalid_argument("sp_expand: bad dimension");
  if (order < 0) throw std::invalid_argument("sp_expand: order must be >= 0");
  const int d = p.dim;
  Poly pj(d), bj(d);
  if (p.phase_jet) {
    pj = p.phase_jet->truncated(2 * order + 2);
  } else {
    if (!p.phase) throw std::invalid_argument("sp_expand: no phase given");
    pj = taylor_jet_fd(p.phase, p.x0, 2 * order + 2, p.fd_step);
  }
  if (p.amplitude_jet) {
    bj = p.amplitude_jet->truncated(2 * order);
  } else {
    if (!p.amplitude) throw std::invalid_argument("sp_expand: no amplitude given");
    bj = taylor_jet_fd(p.amplitude, p.x0, 2 * order, p.fd_step);
  }
  if (pj.nvars() != std::size_t(d) || bj.nvars() != std::size_t(d))
    throw std::invalid_argument("sp_expand: jet dimension mismatch");

  PreparedPhase out;
  out.p0 = pj.coeff(Exponent(d, 0));
  out.hessian = hessian_of_jet(pj, d);
  const double hn = out.hessian.norm();
  const double grad = pj.homogeneous_part(1).max_abs_coeff();
  if (grad > 1e-6 * (1.0 + hn)) throw std::domain_error("sp_expand: x0 is not a critical point");
  if (std::abs(out.p0.imag()) > 1e-10 * (1.0 + std::abs(out.p0)))
    throw std::domain_error("sp_expand: Im p(x0) must vanish");
  const RMat im = out.hessian.imag();
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (im + im.transpose()));
  if (es.eigenvalues().minCoeff() < -1e-8 * (1.0 + hn))
    throw std::domain_error("sp_expand: negative-imaginary phase detected near x0");
  if (p.phase) {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int t = 0; t < 16; ++t) {
      RVec dx(d);
      for (int j = 0; j < d; ++j) dx[j] = nd(rng);
      dx *= 1e-2 / dx.norm();
      if (p.phase(p.x0 + dx).imag() < out.p0.imag() - 1e-12)
        throw std::domain_error("sp_expand: negative-imaginary phase detected near x0");
    }
  }
  if (!invertible(out.hessian)) throw std::domain_error("sp_expand: singular Hessian");
  out.p3 = pj;
  for (int k = 0; k <= 2; ++k) out.p3 -= pj.homogeneous_part(k);
  out.amp = bj;
  return out;
}

}  // namespace

std::vector<cplx> sp_coefficients(const PhaseProblem& p, int order) {
  const PreparedPhase pp = prepare(p, order);
  const int d = p.dim;
  const CMat g = -pp.hessian.inverse();
  std::vector<cplx> out;
  for (int l = 0; l <= order; ++l) {
    cplx m = 0.0;
    Poly p3pow = Poly::constant(d, 1.0);
    for (int s = l; s <= 3 * l; ++s) {
      if (s > l) p3pow = p3pow.mul_truncated(pp.p3, 2 * s);
      Poly f = pp.amp.mul_truncated(p3pow, 2 * s);
      for (int r = 0; r < s && !f.empty(); ++r) f = apply_quadratic_operator(g, f);
      m += std::pow(2.0, -s) / (factorial(s) * factorial(s - l)) * f.coeff(Exponent(d, 0));
    }
    out.push_back(std::pow(-I, l) * m);
  }
  return out;
}

cplx sp_expand(const PhaseProblem& p, double hbar, int order) {
  if (!(hbar > 0.0)) throw std::invalid_argument("sp_expand: hbar must be positive");
  const PreparedPhase pp = prepare(p, order);
  const auto ms = sp_coefficients(p, order);
  cplx sum = 0.0;
  for (int l = 0; l <= order; ++l) sum += std::pow(hbar, l) * ms[l];
  return std::exp(I * pp.p0 / hbar) * sp_prefactor(pp.hessian, hbar) * sum;
}

HessianCase hessian_case(CaseId c, const CVec& z, const std::vector<double>& angles) {
  if (z.size() != c.m()) throw std::invalid_argument("hessian_case: z has wrong length");
  if (z.norm() == 0.0) throw std::domain_error("hessian_case: z must be nonzero");
  if (!in_tilde_domain(c, z)) throw std::domain_error("hessian_case: z is outside tilde C^m");
  const GaugeJet gj = gauge_jet(c, z, angles);
  const int m = c.m(), s = int(gj.t1.size()), n = 2 * m + s;
  // complex Hessian in (u, ubar, angles)
  CMat hc = CMat::Zero(n, n);
  hc.block(0, m, m, m) = I * CMat::Identity(m, m);
  hc.block(m, 0, m, m) = I * CMat::Identity(m, m);
  for (int a = 0; a < s; ++a) {
    hc.block(m, 2 * m + a, m, 1) = -I * gj.t1[a];
    hc.block(2 * m + a, m, 1, m) = (-I * gj.t1[a]).transpose();
    for (int b = 0; b < s; ++b) hc(2 * m + a, 2 * m + b) = -I * cdot(gj.t2[a][b], gj.u0);
  }
  const CMat j = real_change_of_basis(m, s);
  HessianCase out;
  out.matrix = j.transpose() * hc * j;
  out.det = Eigen::PartialPivLU<CMat>(out.matrix).determinant();
  const double z2 = z.squaredNorm();
  if (c.m() == 4) {
    out.det_closed = std::pow(2.0 * I, 8) * I * z2;
  } else {
    const double ct = std::cos(angles[0]), st = std::sin(angles[0]);
    out.det_closed = std::pow(2.0 * I, 16) * std::pow(I, 3) * z2 * z2 * z2 * ct * ct * st * st;
  }
  out.blocks = {out.matrix.topLeftCorner(2 * m, 2 * m), out.matrix.topRightCorner(2 * m, s),
                out.matrix.bottomLeftCorner(s, 2 * m), out.matrix.bottomRightCorner(s, s)};
  const cplx k = 2.0 * I;
  const BlockMatrix normalized{out.blocks.A / k, out.blocks.B / k, out.blocks.C / k, out.blocks.D / k};
  out.inverse = block_inverse_special(normalized).assemble() / k;
  out.u0 = gj.u0;
  out.tangents = gj.t1;
  return out;
}

CMat display_operator(CaseId c, const CVec& z, const std::vector<double>& angles) {
  const GaugeJet gj = gauge_jet(c, z, angles);
  const int m = c.m(), s = int(gj.t1.size()), n = 2 * m + s;
  std::vector<CVec> du(m, CVec::Zero(n)), dub(m, CVec::Zero(n));
  for (int j = 0; j < m; ++j) {
    du[j][j] = 0.5;
    du[j][m + j] = -0.5 * I;
    dub[j][j] = 0.5;
    dub[j][m + j] = 0.5 * I;
  }
  auto along = [&](const CVec& v) {  // v^t d_u
    CVec w = CVec::Zero(n);
    for (int j = 0; j < m; ++j) w += v[j] * du[j];
    return w;
  };
  auto unit = [&](int a) {
    CVec e = CVec::Zero(n);
    e[2 * m + a] = 1.0;
    return e;
  };
  CMat g = CMat::Zero(n, n);
  for (int j = 0; j < m; ++j) g += 2.0 * I * sym_outer(du[j], dub[j]);
  const double z2 = z.squaredNorm();
  if (c.m() == 4) {
    CMat mm = CMat::Zero(4, 4);
    mm.diagonal() << -1, -1, 1, 1;
    const CVec w = along(mm * gj.u0) - I * unit(0);
    g -= (I / z2) * w * w.transpose();
  } else {
    const double c2 = std::pow(std::cos(angles[0]), 2), s2 = std::pow(std::sin(angles[0]), 2);
    const CVec wt = along(gj.t1[0]) + unit(0);
    const CVec wa = along(gj.t1[1]) + unit(1);
    const CVec wg = along(gj.t1[2]) + unit(2);
    g += (I / z2) * (wa * wa.transpose() / c2 + wg * wg.transpose() / s2 + wt * wt.transpose());
  }
  return g;
}

}  // namespace sphstar
