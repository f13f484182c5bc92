#include "sphstar/starprod.hpp"

#include <cmath>
#include <sstream>

#include "sphstar/kernels.hpp"

namespace sphstar {

namespace {

// table[a] = a! hbar^a
class MomentTable {
 public:
  explicit MomentTable(double hbar) : hbar_(hbar), t_{1.0} {}
  double operator()(const Exponent& a) {
    double w = 1.0;
    for (auto e : a) w *= at(e);
    return w;
  }
  double at(int e) {
    while (int(t_.size()) <= e) t_.push_back(t_.back() * double(t_.size()) * hbar_);
    return t_[e];
  }

 private:
  double hbar_;
  std::vector<double> t_;
};

double form_diag(CaseId c, const CVec& z) { return std::max(0.0, kernel_form(c, z, z).real()); }

int resolve_truncation(CaseId c, int shift, const CVec& z, const StarConfig& cfg, double& tail) {
  if (!(cfg.hbar > 0.0)) throw std::invalid_argument("star: hbar must be positive");
  const double fd = form_diag(c, z);
  int L = cfg.truncation;
  if (L == 0) L = truncation_for(c, fd, cfg.hbar, std::min(cfg.tail_tol, 1e-14), shift);
  if (L < 1) throw std::invalid_argument("star: truncation must be >= 1");
  tail = series_tail_estimate(c, fd, cfg.hbar, L, shift);
  if (tail > cfg.tail_tol) {
    std::ostringstream os;
    os << "star: truncation tail estimate " << tail << " exceeds tolerance " << cfg.tail_tol
       << " at L=" << L;
    throw TruncationError(os.str());
  }
  return L;
}

void check_inputs(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z) {
  if (!(f1.case_id() == c) || !(f2.case_id() == c))
    throw std::invalid_argument("star: symbol case mismatch");
  if (z.size() != c.m()) throw std::invalid_argument("star: z has wrong length");
}

int degree_shift(std::initializer_list<const SymbolPoly*> fs) {
  int s = 2;
  for (const auto* f : fs) s += f->max_degree();
  return s;
}

}  // namespace

double gaussian_moment(const Exponent& a, double hbar) {
  MomentTable t(hbar);
  return t(a);
}

cplx gaussian_integrate(const Poly& p, double hbar) {
  const std::size_t m = p.nvars() / 2;
  if (2 * m != p.nvars()) throw std::invalid_argument("gaussian_integrate: odd variable count");
  MomentTable t(hbar);
  cplx sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    if (!std::equal(e.begin(), e.begin() + m, e.begin() + m)) continue;
    sum += c * t(Exponent(e.begin(), e.begin() + m));
  }
  return sum;
}

cplx bargmann_inner(const Poly& h, const Poly& g, double hbar) {
  if (h.nvars() != g.nvars()) throw std::invalid_argument("bargmann_inner: size");
  MomentTable t(hbar);
  cplx sum = 0.0;
  const auto& gt = g.terms();
  for (const auto& [e, c] : h.terms()) {
    auto it = gt.find(e);
    if (it != gt.end()) sum += c * std::conj(it->second) * t(e);
  }
  return sum;
}

int auto_truncation(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                    double hbar, double tol) {
  return truncation_for(c, form_diag(c, z), hbar, tol, degree_shift({&f1, &f2}));
}

StarResult star_oracle(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                       const StarConfig& cfg) {
  check_inputs(c, f1, f2, z);
  double tail = 0.0;
  const int L = resolve_truncation(c, degree_shift({&f1, &f2}), z, cfg, tail);
  const Poly q = kernel_poly_first(c, z, cfg.hbar, L);
  const Poly h = first_slot_poly(f2, z) * q;
  const Poly g = conj_second_slot_poly(f1, z) * q;
  const cplx qzz = q_series(c, z, z, cfg.hbar, L).value;
  return {bargmann_inner(h, g, cfg.hbar) / qzz, tail, L};
}

MonteCarloResult star_montecarlo(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                                 const CVec& z, const StarConfig& cfg) {
  check_inputs(c, f1, f2, z);
  if (cfg.mc_samples < 1) throw std::invalid_argument("star_montecarlo: mc_samples < 1");
  double tail = 0.0;
  StarConfig loose = cfg;
  loose.tail_tol = std::max(cfg.tail_tol, 1e-12);
  const int L = resolve_truncation(c, degree_shift({&f1, &f2}), z, loose, tail);
  const double hbar = cfg.hbar;
  const cplx qzz = q_series(c, z, z, hbar, L).value;
  const Poly f2u = first_slot_poly(f2, z);
  const Poly f1u = conj_second_slot_poly(f1, z);
  const double sigma = std::sqrt(hbar / 2.0);
  constexpr long kChunk = 4096;
  const long n = cfg.mc_samples;
  cplx mean = 0.0;
  double m2 = 0.0;  // sum of |x - mean|^2 (Welford)
  long count = 0;
  for (long chunk = 0; chunk * kChunk < n; ++chunk) {
    std::seed_seq seq{std::uint64_t(cfg.seed), std::uint64_t(chunk)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> nd(0.0, 1.0);
    const long end = std::min(n, (chunk + 1) * kChunk);
    CVec u(c.m());
    for (long i = chunk * kChunk; i < end; ++i) {
      for (int j = 0; j < c.m(); ++j) u[j] = sigma * cplx(nd(rng), nd(rng));
      const cplx quz = q_series(c, u, z, hbar, L).value;
      const cplx x = std::conj(f1u.evaluate(u)) * f2u.evaluate(u) * quz * std::conj(quz) / qzz;
      ++count;
      const cplx d = x - mean;
      mean += d / double(count);
      m2 += std::real(d * std::conj(x - mean));
    }
  }
  const double var = count > 1 ? m2 / double(count - 1) : 0.0;
  return {mean, std::sqrt(var / double(count)), count};
}

cplx star_heat(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
               double hbar, int resolution) {
  check_inputs(c, f1, f2, z);
  const std::size_t m = c.m();
  std::vector<std::size_t> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = i;
    hi[i] = m + i;
  }
  // beta(u, ubar) = f1(z, u) f2(u, z)
  const Poly beta = first_slot_poly(f2, z).remap(2 * m, lo) *
                    conj_second_slot_poly(f1, z).conj_coeffs().remap(2 * m, hi);
  // exp(hbar Laplacian) beta, with Laplacian = sum_j d/du_j d/dubar_j
  Poly smoothed = beta, lap = beta;
  double fact = 1.0;
  for (int l = 1; !lap.empty(); ++l) {
    Poly next(2 * m);
    for (std::size_t j = 0; j < m; ++j) next += lap.derivative(j).derivative(m + j);
    lap = next;
    fact *= hbar / l;
    smoothed += lap * fact;
  }
  const auto nodes = haar_nodes(c, resolution);
  std::vector<CVec> tz;
  for (const auto& [g, w] : nodes) tz.push_back(act_G(g, z));
  cplx num = 0.0, den = 0.0;
  CVec x(2 * m);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      const double w = nodes[a].second * nodes[b].second;
      const cplx e = w * std::exp(cdot(tz[b], tz[a]) / hbar);
      x << tz[b], tz[a].conjugate();
      num += e * smoothed.evaluate(x);
      den += e;
    }
  return num / den;
}

cplx star_firstorder(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2, const CVec& z,
                     double hbar) {
  check_inputs(c, f1, f2, z);
  if (!in_tilde_domain(c, z)) throw std::domain_error("star_firstorder: z is outside tilde C^m");
  const Poly h = first_slot_poly(f2, z);
  const Poly g = conj_second_slot_poly(f1, z);
  cplx corr = 0.0;
  for (int l = 0; l < c.m(); ++l)
    corr += h.derivative(l).evaluate(z) * std::conj(g.derivative(l).evaluate(z));
  return poly_symbol(c, f1, z) * poly_symbol(c, f2, z) + hbar * corr;
}

double check_F_invariance(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                          const GroupElemF& g, const CVec& z, const StarConfig& cfg) {
  const RMat r = rotation_from_F(g);
  const cplx lhs =
      star_oracle(c, compose_with_rotation(f1, r), compose_with_rotation(f2, r), z, cfg).value;
  const cplx rhs = star_oracle(c, f1, f2, act_F(g, z), cfg).value;
  return std::abs(lhs - rhs);
}

AssociativityResult check_associativity(CaseId c, const SymbolPoly& f1, const SymbolPoly& f2,
                                        const SymbolPoly& f3, const CVec& z,
                                        const StarConfig& cfg) {
  check_inputs(c, f1, f2, z);
  check_inputs(c, f3, f3, z);
  double tail = 0.0;
  const int L = resolve_truncation(c, degree_shift({&f1, &f2, &f3}), z, cfg, tail);
  const std::size_t m = c.m();
  const double hbar = cfg.hbar;
  const Poly qz = kernel_poly_first(c, z, hbar, L);
  const Poly g = conj_second_slot_poly(f1, z) * qz;  // conj f1(z,u) Q(u,z)
  const Poly h = first_slot_poly(f3, z) * qz;        // f3(v,z) Q(v,z)
  // f2(u,v) Q(u,v) in (u, conj v)
  const Poly x = two_slot_poly(f2) * kernel_poly_two(c, hbar, L);
  const cplx qzz = q_series(c, z, z, hbar, L).value;
  MomentTable t(hbar);
  const auto& gt = g.terms();
  const auto& ht = h.terms();

  // left: integrate u first, leaving a polynomial in conj v
  std::map<Exponent, cplx> kappa;
  // right: integrate v first, leaving a polynomial in u
  std::map<Exponent, cplx> jay;
  for (const auto& [e, coef] : x.terms()) {
    const Exponent a(e.begin(), e.begin() + m), b(e.begin() + m, e.end());
    if (auto it = gt.find(a); it != gt.end()) kappa[b] += coef * std::conj(it->second) * t(a);
    if (auto it = ht.find(b); it != ht.end()) jay[a] += coef * it->second * t(b);
  }
  cplx left = 0.0, right = 0.0;
  for (const auto& [b, k] : kappa)
    if (auto it = ht.find(b); it != ht.end()) left += k * it->second * t(b);
  for (const auto& [a, j] : jay)
    if (auto it = gt.find(a); it != gt.end()) right += j * std::conj(it->second) * t(a);
  left /= qzz;
  right /= qzz;
  return {left, right, std::abs(left - right)};
}

}  // namespace sphstar
