// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sphstar/report.hpp"
#include "sphstar/suites.hpp"

using namespace sphstar;

namespace {

struct Timed {
  std::vector<CheckRecord> rows;
  double seconds = 0.0;
};

Timed run_timed(const std::string& suite, std::vector<CaseId> cases) {
  RunConfig cfg;
  cfg.suites = {suite};
  cfg.cases = std::move(cases);
  const auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.rows = run_suite(suite, cfg);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

using Pick = std::function<bool(const CheckRecord&)>;

Pick ids(std::set<std::string> wanted, std::set<std::string> cases = {}) {
  return [wanted, cases](const CheckRecord& r) {
    return wanted.count(r.check_id) && (cases.empty() || cases.count(r.case_name));
  };
}

int failures = 0;

void criterion(int k, const std::string& title, const std::vector<const Timed*>& sources, const Pick& pick,
               double time_limit = 0.0, double elapsed = 0.0, int min_rows = 1) {
  int n = 0, bad = 0;
  const CheckRecord* first_bad = nullptr;
  for (const Timed* t : sources)
    for (const auto& r : t->rows)
      if (pick(r)) {
        ++n;
        if (!r.pass) {
          ++bad;
          if (!first_bad) first_bad = &r;
        }
      }
  const bool slow = time_limit > 0 && elapsed > time_limit;
  const bool ok = n >= min_rows && bad == 0 && !slow;
  std::printf("%s criterion %2d: %s (%d checks, %d failed", ok ? "PASS" : "FAIL", k, title.c_str(), n, bad);
  if (time_limit > 0) std::printf(", %.1fs of %.0fs", elapsed, time_limit);
  std::printf(")\n");
  if (first_bad)
    std::printf("    first failure: %s %s %s err=%.3e tol=%.3e [%s]\n", first_bad->suite.c_str(),
                first_bad->case_name.c_str(), first_bad->check_id.c_str(), first_bad->abs_err, first_bad->tol,
                first_bad->inputs.c_str());
  if (n < min_rows) std::printf("    expected at least %d checks\n", min_rows);
  std::fflush(stdout);
  failures += !ok;
}

}  // namespace

int main() {
  const CaseId c22 = CaseId::c22(), c34 = CaseId::c34(), c58 = CaseId::c58();

  const Timed k_low = run_timed("kernels", {c22, c34});
  const Timed k_58 = run_timed("kernels", {c58});
  const Timed star = run_timed("star", {c22, c34});
  const Timed star_58 = run_timed("star", {c58});
  const Timed inv = run_timed("invariance", {});
  const Timed stat = run_timed("stationary", {});
  const Timed sph = run_timed("sphere", {});

  const Pick triple = ids({"triple.series", "triple.haar"});
  criterion(1, "kernel series, closed form and group average agree", {&k_low}, triple, 60.0, k_low.seconds, 150);
  criterion(2, "Bessel series, asymptotic and half-order forms", {&k_low}, ids({"bessel.series_vs_asymptotic", "bessel.half"}),
            0, 0, 20);
  criterion(3, "overlap asymptotic error decreases with hbar", {&k_low, &k_58}, ids({"asymptotic.monotone"}), 0, 0,
            30);
  criterion(4, "star product remainder slope >= 1.8", {&star}, ids({"semiclassical.slope"}), 300.0, star.seconds, 2);
  criterion(5, "eigen-exactness of A3* star A3", {&star}, ids({"eigen"}), 0, 0, 20);
  criterion(6, "unit law and associativity", {&star}, ids({"unit.left", "unit.right", "associativity"}), 0, 0, 9);
  criterion(7, "rotations, symmetry and gauge invariance", {&inv},
            ids({"rotation.orthogonal", "rotation.det", "rotation.intertwines", "star.symmetry", "gauge.symbols",
                 "gauge.kernel"}),
            0, 0, 21);
  criterion(8, "Hessian determinants, block inverse and Gaussian stationary phase", {&stat},
            ids({"hessian.det", "hessian.block_det", "hessian.inverse", "sp.gaussian"}), 0, 0, 30);
  criterion(9, "lowering coefficients, coherent towers and sphere quadrature", {&sph},
            ids({"lowering", "coherent.eigen", "quadrature.s2"}), 0, 0, 26);
  const double t10 = k_58.seconds + star_58.seconds;
  criterion(10, "(5,8) kernel agreement and unit law at L=6", {&k_58, &star_58},
            [](const CheckRecord& r) {
              return r.case_name == "5,8" && (r.check_id == "triple.series" || r.check_id == "triple.haar" ||
                                              r.check_id == "unit.smoke");
            },
            600.0, t10, 70);

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
