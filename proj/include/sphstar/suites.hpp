#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphstar/report.hpp"
#include "sphstar/types.hpp"

namespace sphstar {

struct RunConfig {
  std::vector<CaseId> cases;         // empty: every case the suite supports
  std::vector<std::string> suites;   // kernels, star, invariance, stationary, sphere
  std::vector<double> hbars;         // empty: suite defaults
  int truncation = 0;                // 0: automatic
  std::uint64_t seed = 1;
  std::optional<double> tol;         // replaces every absolute/relative tolerance
  std::string format = "csv";        // csv | json
  std::string out;                   // empty: stdout
  int samples = 20;                  // random points per case where applicable
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for unknown suites or an empty selection.
void validate(const RunConfig& cfg);

std::vector<CheckRecord> run_suite(const std::string& suite, const RunConfig& cfg);

// All selected suites, run concurrently, merged in the order of suite_names().
std::vector<CheckRecord> run(const RunConfig& cfg);

}  // namespace sphstar
