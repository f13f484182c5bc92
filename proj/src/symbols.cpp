#include "sphstar/symbols.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sphstar/geometry.hpp"

namespace sphstar {

namespace {

Exponent concat(const Exponent& a, const Exponent& b) {
  Exponent e(a);
  e.insert(e.end(), b.begin(), b.end());
  return e;
}

// rho(z)^e
cplx rho_power(const CVec& rz, const Exponent& e) {
  cplx v = 1.0;
  for (std::size_t j = 0; j < e.size(); ++j)
    for (int t = 0; t < e[j]; ++t) v *= rz[j];
  return v;
}

// product of polynomials with cached integer powers
class PowerCache {
 public:
  explicit PowerCache(std::vector<Poly> base) : base_(std::move(base)), pw_(base_.size()) {
    for (std::size_t i = 0; i < base_.size(); ++i)
      pw_[i].push_back(Poly::constant(base_[i].nvars(), 1.0));
  }
  Poly product(const Exponent& e) {
    Poly r = pw_.empty() ? Poly() : pw_[0][0];
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (pw_[i].size() <= e[i]) pw_[i].push_back(pw_[i].back() * base_[i]);
      if (e[i]) r = r * pw_[i][e[i]];
    }
    return r;
  }

 private:
  std::vector<Poly> base_;
  std::vector<std::vector<Poly>> pw_;
};

}  // namespace

NormalWord NormalWord::identity(CaseId c) { return {Exponent(c.dim(), 0), Exponent(c.dim(), 0)}; }

NormalWord NormalWord::creation(CaseId c, int l) {
  if (l < 1 || l > c.dim()) throw std::invalid_argument("NormalWord: index out of range");
  NormalWord w = identity(c);
  w.s[l - 1] = 1;
  return w;
}

NormalWord NormalWord::annihilation(CaseId c, int l) {
  if (l < 1 || l > c.dim()) throw std::invalid_argument("NormalWord: index out of range");
  NormalWord w = identity(c);
  w.k[l - 1] = 1;
  return w;
}

NormalWord normal_product(const NormalWord& a, const NormalWord& b) {
  if (a.s.size() != b.s.size()) throw std::invalid_argument("normal_product: case mismatch");
  const bool a_has_k = std::accumulate(a.k.begin(), a.k.end(), 0) > 0;
  const bool b_has_s = std::accumulate(b.s.begin(), b.s.end(), 0) > 0;
  if (a_has_k && b_has_s)
    throw std::invalid_argument("product is not normal-ordered; compute it with the star product");
  NormalWord r = a;
  for (std::size_t j = 0; j < r.s.size(); ++j) {
    r.s[j] += b.s[j];
    r.k[j] += b.k[j];
  }
  return r;
}

NormalWord parse_word(CaseId c, const std::string& text) {
  NormalWord w = NormalWord::identity(c);
  if (text.empty() || text == "1") return w;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '.')) {
    if (factor.size() < 2 || factor[0] != 'A')
      throw std::invalid_argument("cannot parse word factor '" + factor + "'");
    const bool star = factor.back() == '*';
    const std::string digits = factor.substr(1, factor.size() - 1 - (star ? 1 : 0));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("cannot parse word factor '" + factor + "'");
    const int l = std::stoi(digits);
    w = normal_product(w, star ? NormalWord::creation(c, l) : NormalWord::annihilation(c, l));
  }
  return w;
}

std::string format_word(const NormalWord& w) {
  std::string out;
  auto emit = [&](const Exponent& e, bool star) {
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int t = 0; t < e[j]; ++t) {
        if (!out.empty()) out += '.';
        out += "A" + std::to_string(j + 1) + (star ? "*" : "");
      }
  };
  emit(w.s, true);
  emit(w.k, false);
  return out.empty() ? "1" : out;
}

SymbolPoly::SymbolPoly(CaseId c) : case_(c), p_(2 * c.dim()) {}

SymbolPoly SymbolPoly::word(CaseId c, const NormalWord& w, cplx coef) {
  SymbolPoly p(c);
  p.add(w, coef);
  return p;
}

SymbolPoly SymbolPoly::constant(CaseId c, cplx v) { return word(c, NormalWord::identity(c), v); }

std::vector<std::pair<NormalWord, cplx>> SymbolPoly::terms() const {
  const std::size_t d = case_.dim();
  std::vector<std::pair<NormalWord, cplx>> out;
  for (const auto& [e, c] : p_.terms())
    out.push_back({{Exponent(e.begin(), e.begin() + d), Exponent(e.begin() + d, e.end())}, c});
  return out;
}

void SymbolPoly::add(const NormalWord& w, cplx coef) {
  if (w.s.size() != std::size_t(case_.dim()) || w.k.size() != std::size_t(case_.dim()))
    throw std::invalid_argument("SymbolPoly::add: word does not match case");
  p_.add_term(concat(w.s, w.k), coef);
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& o) const {
  if (!(case_ == o.case_)) throw std::invalid_argument("SymbolPoly: case mismatch");
  return SymbolPoly(case_, p_ + o.p_);
}

SymbolPoly SymbolPoly::operator*(cplx c) const { return SymbolPoly(case_, p_ * c); }

SymbolPoly SymbolPoly::adjoint() const {
  SymbolPoly r(case_);
  for (const auto& [w, c] : terms()) r.add(w.adjoint(), std::conj(c));
  return r;
}

int SymbolPoly::max_degree() const { return std::max(p_.degree(), 0); }

ExtSymbolValue word_symbol_ext(CaseId c, const NormalWord& word, const CVec& w, const CVec& z) {
  const CVec rw = rho(c, w).alpha;
  const CVec rz = rho(c, z).alpha.conjugate();
  return {rho_power(rw, word.s) * rho_power(rz, word.k), w, z};
}

cplx poly_symbol_ext(CaseId c, const SymbolPoly& p, const CVec& w, const CVec& z) {
  if (!(p.case_id() == c)) throw std::invalid_argument("poly_symbol_ext: case mismatch");
  CVec x(2 * c.dim());
  x << rho(c, w).alpha, rho(c, z).alpha.conjugate();
  return p.poly().evaluate(x);
}

Poly first_slot_poly(const SymbolPoly& p, const CVec& z) {
  const CaseId c = p.case_id();
  const CVec rz = rho(c, z).alpha.conjugate();
  PowerCache cache(rho_polys(c));
  Poly out(c.m());
  for (const auto& [w, coef] : p.terms()) out += cache.product(w.s) * (coef * rho_power(rz, w.k));
  return out;
}

Poly conj_second_slot_poly(const SymbolPoly& p, const CVec& z) {
  return first_slot_poly(p.adjoint(), z);
}

Poly two_slot_poly(const SymbolPoly& p) {
  const CaseId c = p.case_id();
  const std::size_t m = c.m();
  std::vector<std::size_t> lo(m), hi(m);
  std::iota(lo.begin(), lo.end(), 0);
  std::iota(hi.begin(), hi.end(), m);
  std::vector<Poly> images;
  for (const Poly& r : rho_polys(c)) images.push_back(r.remap(2 * m, lo));
  for (const Poly& r : rho_polys(c)) images.push_back(r.conj_coeffs().remap(2 * m, hi));
  return p.poly().substitute(images);
}

SymbolPoly compose_with_rotation(const SymbolPoly& p, const RMat& r) {
  const CaseId c = p.case_id();
  const int d = c.dim();
  if (r.rows() != d || r.cols() != d) throw std::invalid_argument("compose_with_rotation: size");
  std::vector<Poly> images;
  for (int half = 0; half < 2; ++half)
    for (int l = 0; l < d; ++l) {
      CVec row = r.row(l).transpose().cast<cplx>();
      images.push_back(Poly::linear(2 * d, row, half * d));
    }
  return SymbolPoly(c, p.poly().substitute(images));
}

Poly apply_vector_field(const Poly& p, const CMat& x) {
  const std::size_t m = p.nvars();
  if (std::size_t(x.rows()) != m || std::size_t(x.cols()) != m)
    throw std::invalid_argument("apply_vector_field: size");
  Poly out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Poly dj = p.derivative(j);
    if (dj.empty()) continue;
    out += dj * Poly::linear(m, x.row(j).transpose());
  }
  return out;
}

std::vector<CMat> constraint_fields(CaseId c) {
  if (c.m() == 4) {
    CMat l = CMat::Zero(4, 4);
    l.diagonal() << 1, 1, -1, -1;
    return {l};
  }
  if (c.m() != 8) throw std::invalid_argument("constraint_fields: only for (3,4) and (5,8)");
  CMat r1 = CMat::Zero(8, 8);
  r1.diagonal() << 1, 1, 1, 1, -1, -1, -1, -1;
  // row j holds the coefficients of d/dv_{j+1}
  auto field = [](const std::array<std::pair<int, double>, 8>& t) {
    CMat x = CMat::Zero(8, 8);
    for (int j = 0; j < 8; ++j) x(j, t[j].first - 1) = t[j].second;
    return x;
  };
  const CMat r2 = field({{{7, 1}, {8, -1}, {5, 1}, {6, -1}, {3, -1}, {4, 1}, {1, -1}, {2, 1}}});
  const CMat r3 = field({{{7, 1}, {8, -1}, {5, 1}, {6, -1}, {3, 1}, {4, -1}, {1, 1}, {2, -1}}});
  return {r1, r2, r3};
}

std::vector<double> check_constraint_ops(CaseId c, const SymbolPoly& p, const CVec& z) {
  const Poly f = first_slot_poly(p, z);
  std::vector<double> out;
  for (const CMat& x : constraint_fields(c)) out.push_back(apply_vector_field(f, x).max_abs_coeff());
  return out;
}

Poly avg_polynomial(CaseId c, const Exponent& k, const Exponent& s, int resolution) {
  const std::size_t m = c.m();
  if (k.size() != m || s.size() != m) throw std::invalid_argument("avg_polynomial: exponent size");
  const Exponent e = concat(k, s);
  const int deg = std::accumulate(e.begin(), e.end(), 0);
  if (deg > 8) throw std::invalid_argument("avg_polynomial: total degree above 8");
  const Poly mono = Poly::monomial(e, 1.0);
  Poly out(2 * m);
  for (const auto& [g, wt] : haar_nodes(c, resolution)) {
    const CMat t = g.matrix();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(Poly::linear(2 * m, t.row(i).transpose(), 0));
    for (std::size_t i = 0; i < m; ++i)
      images.push_back(Poly::linear(2 * m, t.row(i).conjugate().transpose(), m));
    out += mono.substitute(images) * wt;
  }
  // quadrature rounding leaves tiny residues where the exact average vanishes
  Poly cleaned(2 * m);
  for (const auto& [ex, v] : out.terms())
    if (std::abs(v) > 1e-12) cleaned.add_term(ex, v);
  return cleaned;
}

}  // namespace sphstar
