#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2/liealg.hpp"
#include "g2/rings.hpp"

namespace g2 {

/// Ring descriptors from {"rings": [...]}; every ring must be finite with 3
/// a unit.
std::vector<Ring> load_fleet(const std::string& path);
std::vector<Ring> default_fleet();

struct SuiteOptions {
  std::vector<Ring> fleet = default_fleet();
  std::uint64_t seed = 0;
  int specs_per_ring = 50;
  int mutations = 5;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool checks_pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;
  bool pass() const { return checks_pass && seconds < limit_seconds; }
};

CriterionResult structure_integrity(const StructureTable& table);
/// With `calibrate`, also reports the sign calibration against the stated R2
/// coefficients.
CriterionResult relation_suite(const StructureTable& table, bool calibrate);
CriterionResult generation_suite(const StructureTable& table);
CriterionResult word_suite(const SuiteOptions& options);
CriterionResult localization_suite();
CriterionResult decomposition_suite(const SuiteOptions& options);
CriterionResult extract_rho_suite();
CriterionResult negative_controls(const SuiteOptions& options);

/// Criterion n in 1..8 on the calibrated table.
CriterionResult run_criterion(int n, const SuiteOptions& options);
std::vector<CriterionResult> run_all(const SuiteOptions& options);

/// "PASS [3] generation identities (0.42 s / 10 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace g2
