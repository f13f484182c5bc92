#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace sphstar {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr cplx I{0.0, 1.0};

// z.w = sum z_j conj(w_j)
inline cplx cdot(const CVec& z, const CVec& w) { return w.dot(z); }
inline double norm2(const CVec& z) { return z.squaredNorm(); }

// One of the three admissible (n, m) pairs.
class CaseId {
 public:
  static CaseId from(int n, int m);
  static CaseId c22() { return CaseId(2, 2); }
  static CaseId c34() { return CaseId(3, 4); }
  static CaseId c58() { return CaseId(5, 8); }
  // "2,2" / "3,4" / "5,8"
  static CaseId parse(const std::string& text);

  int n() const { return n_; }
  int m() const { return m_; }
  int dim() const { return n_ + 1; }
  std::string name() const;

  bool operator==(const CaseId&) const = default;

 private:
  CaseId(int n, int m) : n_(n), m_(m) {}
  int n_;
  int m_;
};

}  // namespace sphstar
