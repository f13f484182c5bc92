#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sphstar/types.hpp"

namespace sphstar {

struct CheckRecord {
  std::string suite;
  std::string case_name;
  std::string check_id;
  std::string property;  // short tag of the property being checked
  std::string inputs;    // human-readable digest of the inputs
  cplx measured;
  cplx expected;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// |measured - expected| <= tol (absolute) or <= tol |expected| (relative)
CheckRecord make_check(std::string suite, std::string case_name, std::string check_id,
                       std::string property, std::string inputs, cplx measured, cplx expected,
                       double tol, bool relative = false);
// measured >= threshold
CheckRecord make_lower_bound(std::string suite, std::string case_name, std::string check_id,
                             std::string property, std::string inputs, double measured,
                             double threshold);

void write_csv(std::ostream& os, const std::vector<CheckRecord>& rows);
void write_json(std::ostream& os, const std::vector<CheckRecord>& rows);
std::vector<CheckRecord> read_csv(std::istream& is);

std::string format_double(double v);

}  // namespace sphstar
