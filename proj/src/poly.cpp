#include "sphstar/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sphstar {

namespace {

int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("Poly: variable count mismatch");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, cplx c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i, cplx c) {
  if (i >= nvars) throw std::out_of_range("Poly::variable");
  Exponent e(nvars, 0);
  e[i] = 1;
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

Poly Poly::monomial(Exponent e, cplx c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::linear(std::size_t nvars, const CVec& a, std::size_t offset) {
  Poly p(nvars);
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (a[j] != 0.0) p += variable(nvars, offset + j, a[j]);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

cplx Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void Poly::add_term(const Exponent& e, cplx c) {
  if (e.size() != nvars_) throw std::invalid_argument("Poly: exponent size");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(cplx c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  return mul_truncated(o, std::numeric_limits<int>::max());
}

Poly Poly::mul_truncated(const Poly& o, int max_degree) const {
  check_same(nvars_, o.nvars_);
  Poly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    int da = total_degree(ea);
    if (da > max_degree) continue;
    for (const auto& [eb, cb] : o.terms_) {
      if (da + total_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(nvars_, 1.0);
  Poly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("Poly::derivative");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * static_cast<double>(e[var]));
  }
  return r;
}

Poly Poly::conj_coeffs() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, std::conj(c));
  return r;
}

Poly Poly::remap(std::size_t nvars, const std::vector<std::size_t>& map) const {
  if (map.size() != nvars_) throw std::invalid_argument("Poly::remap");
  Poly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f.at(map[i]) += e[i];
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("Poly::substitute");
  if (images.empty()) return *this;
  const std::size_t nv = images.front().nvars();
  // cache powers of each image
  std::vector<std::vector<Poly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(nv, 1.0));
  Poly r(nv);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(nv, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) t = t * powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

cplx Poly::evaluate(std::span<const cplx> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("Poly::evaluate: size");
  std::vector<std::vector<cplx>> pw(nvars_, std::vector<cplx>{1.0});
  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) {
    cplx t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& p = pw[i];
      while (p.size() <= e[i]) p.push_back(p.back() * x[i]);
      t *= p[e[i]];
    }
    sum += t;
  }
  return sum;
}

cplx Poly::evaluate(const CVec& x) const {
  return evaluate(std::span<const cplx>(x.data(), static_cast<std::size_t>(x.size())));
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace sphstar
