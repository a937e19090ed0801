#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/group.hpp"
#include "g2/liealg.hpp"

namespace g2 {

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string expected;
  std::string actual;
};

struct RelationCheck {
  std::string instance;
  bool pass = true;
  std::optional<Mismatch> mismatch;
  std::string note;
};

struct RelationReport {
  std::string relation;
  std::string ring;
  bool pass = true;
  std::vector<RelationCheck> checks;

  void add(RelationCheck check);
  std::size_t failures() const;
};

/// Compares two matrices; nullopt when equal.
std::optional<Mismatch> compare(const Matrix& expected, const Matrix& actual);

// ---------------------------------------------------------------------------
// (R2): alpha = alpha2 (long), beta = alpha1 (short).

/// One factor x_root(coeff * t^t_exp * u^u_exp) of a right-hand side.
struct R2Term {
  Root root;
  int coeff = 0;
  int t_exp = 0;
  int u_exp = 0;
};

struct R2Formula {
  int number = 0;  // 1..5
  Root left;
  Root right;
  std::vector<R2Term> terms;
  std::string text;
};

/// The five R2 formulas with their stated coefficients. The last factor of
/// formula 2 is taken as x_{2a+3b}(3t^2u); see r2_literal_variant.
const std::vector<R2Formula>& r2_formulas();
/// Formula 2 with 3t^2u^3 in its last factor.
R2Formula r2_literal_variant();

struct R2FormulaResult {
  int number = 0;
  std::string text;
  bool holds = false;              // for some choice of signs on the stated magnitudes
  std::vector<int> stated_signs;
  std::vector<int> computed_signs;  // empty when no choice works
  bool signs_match = false;
  std::optional<Mismatch> mismatch;  // against the stated signs
};

struct R2Report {
  std::string ring;
  bool pass = true;  // every formula holds with computed signs
  std::vector<R2FormulaResult> formulas;
  bool literal_variant_holds = false;
  /// Stated coefficient magnitudes, formula by formula.
  std::vector<int> magnitudes;
};

/// Signs s_i such that [x_left(t), x_right(u)] = prod x_root(s_i c_i t^i u^j)
/// over the given polynomial ring, first in lexicographic order (+1 first).
std::optional<std::vector<int>> r2_signs(const Chevalley& poly_group, const R2Formula& f);

/// Searches all 64 rescalings of `table` for one reproducing every stated sign.
CalibrationResult search_calibration(const StructureTable& table);
/// Returns flips reproducing the stated signs; throws CalibrationError
/// (NoCalibrationFound) carrying the best-effort table otherwise.
SignFlips calibrate_signs(const StructureTable& table);
/// The default table rescaled by the best calibration found (cached).
const StructureTable& calibrated_table();
const CalibrationResult& default_calibration();

/// Polynomial ring base[t,u] (or base itself if it already has two variables).
Ring symbolic_ring(const Ring& base, std::size_t variables = 2);

RelationReport verify_R1(const StructureTable& table, const Ring& base);
R2Report verify_R2(const StructureTable& table, const Ring& base);

struct R45Report {
  RelationReport r4;
  RelationReport r5;
  /// c[alpha][beta] in all_roots() order; 0 where undetermined.
  std::array<std::array<int, kRootCount>, kRootCount> c{};
  bool pass() const { return r4.pass && r5.pass; }
};

/// (R5) symbolic over base[t]; (R4) at the sampled units of each ring in
/// `unit_rings` (all units of finite rings, {2,3,5} or the units among them
/// otherwise).
R45Report verify_R4_R5(const StructureTable& table, const Ring& symbolic_base, const std::vector<Ring>& unit_rings);

/// For every unit t of each ring (sampled for infinite ones) and every root
/// pair, h_a(t) x_b(u) h_a(t)^-1 = x_b(t^<b,a> u) over ring[u].
RelationReport verify_R6(const StructureTable& table, const std::vector<Ring>& rings);

/// Units used when sweeping a ring: all units if finite, else those of
/// {2, 3, 5, -1} that are units.
std::vector<Value> sweep_units(const Ring& r);

}  // namespace g2
