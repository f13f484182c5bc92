#include "sphstar/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sphstar {

namespace {

const char* kHeader =
    "suite,case,check_id,measured_re,measured_im,expected_re,expected_im,abs_err,tol,pass,"
    "property,inputs";

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CheckRecord make_check(std::string suite, std::string case_name, std::string check_id,
                       std::string property, std::string inputs, cplx measured, cplx expected,
                       double tol, bool relative) {
  CheckRecord r{std::move(suite), std::move(case_name), std::move(check_id), std::move(property),
                std::move(inputs), measured, expected};
  r.abs_err = std::abs(measured - expected);
  r.tol = relative ? tol * std::abs(expected) : tol;
  r.pass = std::isfinite(r.abs_err) && r.abs_err <= r.tol;
  return r;
}

CheckRecord make_lower_bound(std::string suite, std::string case_name, std::string check_id,
                             std::string property, std::string inputs, double measured,
                             double threshold) {
  CheckRecord r{std::move(suite), std::move(case_name), std::move(check_id), std::move(property),
                std::move(inputs), measured, threshold};
  r.abs_err = std::max(0.0, threshold - measured);
  r.tol = 0.0;
  r.pass = std::isfinite(measured) && measured >= threshold;
  return r;
}

void write_csv(std::ostream& os, const std::vector<CheckRecord>& rows) {
  os << kHeader << '\n';
  for (const auto& r : rows) {
    os << quote(r.suite) << ',' << quote(r.case_name) << ',' << quote(r.check_id) << ','
       << format_double(r.measured.real()) << ',' << format_double(r.measured.imag()) << ','
       << format_double(r.expected.real()) << ',' << format_double(r.expected.imag()) << ','
       << format_double(r.abs_err) << ',' << format_double(r.tol) << ','
       << (r.pass ? "true" : "false") << ',' << quote(r.property) << ',' << quote(r.inputs)
       << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<CheckRecord>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["case"] = r.case_name;
    j["check_id"] = r.check_id;
    j["measured_re"] = r.measured.real();
    j["measured_im"] = r.measured.imag();
    j["expected_re"] = r.expected.real();
    j["expected_im"] = r.expected.imag();
    j["abs_err"] = r.abs_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["property"] = r.property;
    j["inputs"] = r.inputs;
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

std::vector<CheckRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader)
    throw std::runtime_error("read_csv: unexpected header");
  std::vector<CheckRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 12) throw std::runtime_error("read_csv: malformed row: " + line);
    CheckRecord r;
    r.suite = f[0];
    r.case_name = f[1];
    r.check_id = f[2];
    r.measured = {std::stod(f[3]), std::stod(f[4])};
    r.expected = {std::stod(f[5]), std::stod(f[6])};
    r.abs_err = std::stod(f[7]);
    r.tol = std::stod(f[8]);
    r.pass = f[9] == "true";
    r.property = f[10];
    r.inputs = f[11];
    out.push_back(r);
  }
  return out;
}

}  // namespace sphstar
