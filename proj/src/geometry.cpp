#include "sphstar/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sphstar/quadrature.hpp"

namespace sphstar {

namespace {

using Term = std::tuple<int, int, cplx>;  // coef * z_i z_j, 1-based

std::vector<std::vector<Term>> rho_table(CaseId c) {
  const cplx i = I;
  switch (c.m()) {
    case 2:
      return {{{1, 1, -0.5}, {2, 2, 0.5}},
              {{1, 1, 0.5 * i}, {2, 2, 0.5 * i}},
              {{1, 2, 1.0}}};
    case 4:
      return {{{1, 3, 1.0}, {2, 4, 1.0}},
              {{1, 3, i}, {2, 4, -i}},
              {{1, 4, i}, {2, 3, i}},
              {{1, 4, 1.0}, {2, 3, -1.0}}};
    default:
      return {{{1, 6, -i}, {3, 8, i}, {2, 5, i}, {4, 7, -i}},
              {{1, 6, 1.0}, {3, 8, 1.0}, {2, 5, 1.0}, {4, 7, 1.0}},
              {{2, 6, 1.0}, {3, 7, 1.0}, {1, 5, -1.0}, {4, 8, -1.0}},
              {{1, 5, -i}, {4, 8, i}, {2, 6, -i}, {3, 7, i}},
              {{1, 8, -i}, {2, 7, -i}, {3, 6, -i}, {4, 5, -i}},
              {{1, 8, 1.0}, {2, 7, 1.0}, {3, 6, -1.0}, {4, 5, -1.0}}};
  }
}

void check_len(const CVec& z, int m, const char* what) {
  if (z.size() != m) {
    std::ostringstream os;
    os << what << ": expected length " << m << ", got " << z.size();
    throw std::invalid_argument(os.str());
  }
}

// Bilinear forms behind rho: rho_l(z) = x^t K_l y, with (x, y) = (z, z) for
// m=2, (z12, z34) for m=4, (z1..4, z5..8) for m=8.
std::vector<CMat> bilinear_basis(CaseId c) {
  const int h = c.m() == 2 ? 2 : c.m() / 2;
  const int off = c.m() == 2 ? 0 : h;
  std::vector<CMat> out;
  for (const auto& comp : rho_table(c)) {
    CMat k = CMat::Zero(h, h);
    for (const auto& [a, b, coef] : comp) {
      if (c.m() == 2 && a != b) {
        k(a - 1, b - 1) += 0.5 * coef;
        k(b - 1, a - 1) += 0.5 * coef;
      } else {
        k(a - 1, b - 1 - off) += coef;
      }
    }
    out.push_back(k);
  }
  return out;
}

Eigen::Matrix4d e_matrix() {
  Eigen::Matrix4d e;
  e << 0, 0, -1, 0,
       0, 0, 0, 1,
       -1, 0, 0, 0,
       0, 1, 0, 0;
  return e;
}

void check_special_unitary(const CMat& u, int k, const char* what) {
  if (u.rows() != k || u.cols() != k)
    throw std::invalid_argument(std::string(what) + ": wrong matrix size");
  const double err = (u * u.adjoint() - CMat::Identity(k, k)).norm();
  if (err > 1e-10) throw std::invalid_argument(std::string(what) + ": matrix not unitary");
  if (std::abs(u.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(what) + ": determinant is not 1");
}

}  // namespace

CaseId CaseId::from(int n, int m) {
  if ((n == 2 && m == 2) || (n == 3 && m == 4) || (n == 5 && m == 8)) return CaseId(n, m);
  std::ostringstream os;
  os << "invalid case (" << n << "," << m << "); expected (2,2), (3,4) or (5,8)";
  throw std::invalid_argument(os.str());
}

CaseId CaseId::parse(const std::string& text) {
  int n = 0, m = 0;
  char sep = 0;
  std::istringstream is(text);
  if (!(is >> n >> sep >> m) || sep != ',' || !(is >> std::ws).eof())
    throw std::invalid_argument("cannot parse case '" + text + "'");
  return from(n, m);
}

std::string CaseId::name() const {
  return std::to_string(n_) + "," + std::to_string(m_);
}

cplx QuadricPoint::quadric_residual() const { return (alpha.array() * alpha.array()).sum(); }

QuadricPoint rho(CaseId c, const CVec& z) {
  check_len(z, c.m(), "rho");
  const auto table = rho_table(c);
  CVec a(c.dim());
  for (int l = 0; l < c.dim(); ++l) {
    cplx s = 0.0;
    for (const auto& [i, j, coef] : table[l]) s += coef * z[i - 1] * z[j - 1];
    a[l] = s;
  }
  return {a};
}

std::vector<Poly> rho_polys(CaseId c) {
  std::vector<Poly> out;
  for (const auto& comp : rho_table(c)) {
    Poly p(c.m());
    for (const auto& [i, j, coef] : comp) {
      Exponent e(c.m(), 0);
      ++e[i - 1];
      ++e[j - 1];
      p.add_term(e, coef);
    }
    out.push_back(p);
  }
  return out;
}

bool in_tilde_domain(CaseId c, const CVec& z, double tol) {
  check_len(z, c.m(), "in_tilde_domain");
  const double scale = 1.0 + z.squaredNorm();
  if (c.m() == 2) return true;
  const int h = c.m() / 2;
  const double d = z.head(h).squaredNorm() - z.tail(h).squaredNorm();
  if (std::abs(d) > tol * scale) return false;
  if (c.m() == 4) return true;
  const cplx k = z[6] * std::conj(z[0]) + z[4] * std::conj(z[2]) - z[7] * std::conj(z[1]) -
                 z[5] * std::conj(z[3]);
  return std::abs(k) <= tol * scale;
}

cplx varrho(const CVec& u, const CVec& v) {
  check_len(u, 8, "varrho");
  check_len(v, 8, "varrho");
  auto cj = [&](int k) { return std::conj(v[k - 1]); };
  auto x = [&](int k) { return u[k - 1]; };
  cplx a = 0.0, b = 0.0;
  for (int k = 1; k <= 4; ++k) a += x(k) * cj(k);
  for (int k = 5; k <= 8; ++k) b += x(k) * cj(k);
  const cplx p = x(7) * cj(1) - x(8) * cj(2) + x(5) * cj(3) - x(6) * cj(4);
  const cplx q = x(2) * cj(8) - x(3) * cj(5) + x(4) * cj(6) - x(1) * cj(7);
  return a * b + p * q;
}

GroupElemG GroupElemG::sign(CaseId c, int s) {
  if (c.m() != 2) throw std::invalid_argument("GroupElemG::sign: only for m=2");
  if (s != 1 && s != -1) throw std::invalid_argument("GroupElemG::sign: sign must be +-1");
  return GroupElemG(c, {double(s), 0.0, 0.0});
}

GroupElemG GroupElemG::angle(CaseId c, double theta) {
  if (c.m() != 4) throw std::invalid_argument("GroupElemG::angle: only for m=4");
  return GroupElemG(c, {theta, 0.0, 0.0});
}

GroupElemG GroupElemG::su2(CaseId c, double theta, double alpha, double gamma) {
  if (c.m() != 8) throw std::invalid_argument("GroupElemG::su2: only for m=8");
  constexpr double pi = std::numbers::pi;
  if (theta < -1e-14 || theta > pi / 2 + 1e-14 || std::abs(alpha) > pi + 1e-14 ||
      std::abs(gamma) > pi + 1e-14)
    throw std::invalid_argument("GroupElemG::su2: parameters out of range");
  return GroupElemG(c, {theta, alpha, gamma});
}

GroupElemG GroupElemG::identity(CaseId c) {
  if (c.m() == 2) return sign(c, 1);
  if (c.m() == 4) return angle(c, 0.0);
  return su2(c, 0.0, 0.0, 0.0);
}

Eigen::Matrix2cd su2_matrix(double t, double a, double g) {
  Eigen::Matrix2cd m;
  m << std::cos(t) * std::exp(I * a), std::sin(t) * std::exp(I * g),
      -std::sin(t) * std::exp(-I * g), std::cos(t) * std::exp(-I * a);
  return m;
}

const RMat& gauge8_L() {
  static const RMat l = [] {
    RMat m = RMat::Zero(8, 8);
    m(0, 0) = 1;
    m(1, 6) = 1;
    m(2, 2) = 1;
    m(3, 4) = 1;
    m(4, 3) = -1;
    m(5, 5) = 1;
    m(6, 1) = -1;
    m(7, 7) = 1;
    return m;
  }();
  return l;
}

CMat gauge8_matrix(const Eigen::Matrix2cd& g) {
  CMat v = CMat::Zero(8, 8);
  for (int b = 0; b < 4; ++b) v.block(2 * b, 2 * b, 2, 2) = g;
  const CMat l = gauge8_L().cast<cplx>();
  return l.transpose() * v * l;
}

CMat GroupElemG::matrix() const {
  switch (case_.m()) {
    case 2:
      return CMat::Identity(2, 2) * p_[0];
    case 4: {
      const cplx e = std::exp(-I * p_[0]);
      CVec d(4);
      d << e, e, std::conj(e), std::conj(e);
      return d.asDiagonal();
    }
    default:
      return gauge8_matrix(su2_matrix(p_[0], p_[1], p_[2]));
  }
}

CVec act_G(const GroupElemG& g, const CVec& z) {
  check_len(z, g.case_id().m(), "act_G");
  return g.matrix() * z;
}

GroupElemF GroupElemF::su2(const CMat& u) {
  check_special_unitary(u, 2, "GroupElemF::su2");
  return GroupElemF(CaseId::c22(), u, CMat());
}

GroupElemF GroupElemF::su2_pair(const CMat& v, const CMat& w) {
  check_special_unitary(v, 2, "GroupElemF::su2_pair");
  check_special_unitary(w, 2, "GroupElemF::su2_pair");
  return GroupElemF(CaseId::c34(), v, w);
}

GroupElemF GroupElemF::su4(const CMat& u) {
  check_special_unitary(u, 4, "GroupElemF::su4");
  return GroupElemF(CaseId::c58(), u, CMat());
}

GroupElemF GroupElemF::identity(CaseId c) {
  if (c.m() == 2) return su2(CMat::Identity(2, 2));
  if (c.m() == 4) return su2_pair(CMat::Identity(2, 2), CMat::Identity(2, 2));
  return su4(CMat::Identity(4, 4));
}

GroupElemF GroupElemF::random(CaseId c, std::mt19937_64& rng) {
  if (c.m() == 2) return su2(random_special_unitary(2, rng));
  if (c.m() == 4) {
    CMat v = random_special_unitary(2, rng);
    return su2_pair(v, random_special_unitary(2, rng));
  }
  return su4(random_special_unitary(4, rng));
}

CMat GroupElemF::matrix() const {
  switch (case_.m()) {
    case 2:
      return a_;
    case 4: {
      CMat l = CMat::Zero(4, 4);
      l.topLeftCorner(2, 2) = a_;
      l.bottomRightCorner(2, 2) = b_;
      return l;
    }
    default: {
      const CMat e = e_matrix().cast<cplx>();
      CMat l = CMat::Zero(8, 8);
      l.topLeftCorner(4, 4) = a_;
      l.bottomRightCorner(4, 4) = e * a_ * e;
      return l;
    }
  }
}

CVec act_F(const GroupElemF& g, const CVec& z) {
  check_len(z, g.case_id().m(), "act_F");
  return g.matrix() * z;
}

RMat rotation_from_F(const GroupElemF& g, double tol) {
  const CaseId c = g.case_id();
  const auto basis = bilinear_basis(c);
  const int d = c.dim();
  CMat left, right;
  if (c.m() == 2) {
    left = g.first();
    right = g.first();
  } else if (c.m() == 4) {
    left = g.first();
    right = g.second();
  } else {
    const CMat e = e_matrix().cast<cplx>();
    left = g.first();
    right = e * g.first() * e;
  }
  auto inner = [](const CMat& a, const CMat& b) { return (a * b.adjoint()).trace().real(); };
  RMat gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram(a, b) = inner(basis[a], basis[b]);
  Eigen::LDLT<RMat> solver(gram);
  RMat r(d, d);
  double residual = 0.0;
  for (int l = 0; l < d; ++l) {
    const CMat target = left.transpose() * basis[l] * right;
    RVec rhs(d);
    for (int k = 0; k < d; ++k) rhs[k] = inner(target, basis[k]);
    const RVec coef = solver.solve(rhs);
    r.row(l) = coef.transpose();
    CMat rebuilt = CMat::Zero(target.rows(), target.cols());
    for (int k = 0; k < d; ++k) rebuilt += coef[k] * basis[k];
    residual = std::max(residual, (rebuilt - target).norm());
  }
  if (residual > tol)
    throw std::runtime_error("rotation_from_F: expansion residual " + std::to_string(residual));
  return r;
}

std::vector<std::pair<GroupElemG, double>> haar_nodes(CaseId c, int resolution) {
  if (resolution < 1) throw std::invalid_argument("haar_nodes: resolution < 1");
  constexpr double pi = std::numbers::pi;
  std::vector<std::pair<GroupElemG, double>> out;
  if (c.m() == 2) {
    out.emplace_back(GroupElemG::sign(c, 1), 0.5);
    out.emplace_back(GroupElemG::sign(c, -1), 0.5);
  } else if (c.m() == 4) {
    for (int j = 0; j < resolution; ++j)
      out.emplace_back(GroupElemG::angle(c, 2.0 * pi * j / resolution), 1.0 / resolution);
  } else {
    // Haar density is proportional to sin(t)cos(t); u = sin^2 t makes it flat
    const QuadRule q = gauss_legendre(resolution, 0.0, 1.0);
    const double wa = 1.0 / resolution;
    for (int i = 0; i < resolution; ++i) {
      const double theta = std::asin(std::sqrt(q.nodes[i]));
      for (int a = 0; a < resolution; ++a)
        for (int b = 0; b < resolution; ++b)
          out.emplace_back(GroupElemG::su2(c, theta, -pi + 2.0 * pi * a / resolution,
                                           -pi + 2.0 * pi * b / resolution),
                           q.weights[i] * wa * wa);
    }
  }
  return out;
}

CMat random_special_unitary(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMat a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = cplx(n(rng), n(rng));
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  const cplx det = q.determinant();
  q *= std::pow(det, -1.0 / k);
  return q;
}

CVec random_cvec(int k, double max_radius, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.1, max_radius);
  CVec z(k);
  for (int i = 0; i < k; ++i) z[i] = cplx(n(rng), n(rng));
  return z * (u(rng) / z.norm());
}

CVec random_tilde_point(CaseId c, double radius, std::mt19937_64& rng) {
  if (c.m() == 2) {
    CVec z = random_cvec(2, 1.0, rng);
    return z * (radius / z.norm());
  }
  CVec z0 = CVec::Zero(c.m());
  if (c.m() == 4) {
    z0[0] = 1.0;
    z0[2] = 1.0;
  } else {
    z0[0] = 1.0;
    z0[5] = 1.0;
  }
  z0 *= radius / z0.norm();
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> t(0.0, std::numbers::pi / 2);
  const CVec z1 = act_F(GroupElemF::random(c, rng), z0);
  const GroupElemG g = c.m() == 4 ? GroupElemG::angle(c, ang(rng))
                                  : GroupElemG::su2(c, t(rng), ang(rng), ang(rng));
  return act_G(g, z1);
}

}  // namespace sphstar
