#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2/error.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

inline constexpr std::size_t kDim = 14;

/// One sign per positive root, in all_roots() order; negatives follow their
/// positive partner.
using SignFlips = std::array<int, 6>;
inline constexpr SignFlips kNoFlips{1, 1, 1, 1, 1, 1};

using IntVector = std::array<std::int64_t, kDim>;
using IntMatrix = std::array<std::array<std::int64_t, kDim>, kDim>;

/// Chevalley basis constants of the G2 Lie algebra in the basis
/// h1, h2, x_r (r in all_roots() order).
struct StructureTable {
  SignFlips flips = kNoFlips;
  /// n[i][j] = N_{r_i, r_j}, zero when r_i + r_j is not a root.
  std::array<std::array<int, kRootCount>, kRootCount> n{};
  /// [x_r, x_{-r}] = hbracket[r][0] h1 + hbracket[r][1] h2.
  std::array<std::array<int, 2>, kRootCount> hbracket{};

  int nconst(const Root& x, const Root& y) const { return n[root_index(x)][root_index(y)]; }
  /// [h_i, x_r] = coroot_pairing(r, i) x_r, i in {0, 1}.
  int coroot_pairing(const Root& r, int i) const;
  /// Bracket of basis vectors i and j as a coordinate vector.
  IntVector bracket(std::size_t i, std::size_t j) const;
  IntVector bracket(const IntVector& x, const IntVector& y) const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// Positive pairs (x, y), x before y, whose sum is a root.
const std::vector<std::pair<Root, Root>>& special_pairs();
/// The extraspecial subset: for each positive sum, the pair with the earliest x.
const std::vector<std::pair<Root, Root>>& extraspecial_pairs();

/// Extraspecial signs +1, remaining special sign forced by Jacobi, then the
/// optional diagonal rescaling N' = N s_x s_y s_{x+y}.
StructureTable build_structure_table(std::optional<SignFlips> flips = std::nullopt);

/// Rescales an existing table.
StructureTable apply_flips(const StructureTable& table, const SignFlips& flips);

/// Negates N_{x,y} and N_{y,x} only. For negative controls; the result is
/// generally not a Lie algebra.
StructureTable with_sign_flipped(const StructureTable& table, const Root& x, const Root& y);

IntMatrix ad_matrix(const StructureTable& table, const Root& r);
IntMatrix ad_basis(const StructureTable& table, std::size_t basis);

IntMatrix identity_int();
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& a, std::int64_t k);
bool is_zero(const IntMatrix& a);
/// Exact division of every entry; throws NotExact.
IntMatrix divide_exact(const IntMatrix& a, std::int64_t d);

/// X, X^2/2, X^3/6 for x_r; the divisions are checked.
struct DividedPowers {
  IntMatrix x{};
  IntMatrix x2{};
  IntMatrix x3{};
};
DividedPowers divided_powers(const StructureTable& table, const Root& r);

struct JacobiReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> first_failure;
};
JacobiReport check_jacobi(const StructureTable& table);

struct MagnitudeFailure {
  Root x;
  Root y;
  int n = 0;
  int expected = 0;
};
struct MagnitudeReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<MagnitudeFailure> failures;
};
/// |N_{x,y}| = p + 1 with p from root_string(y, x).
MagnitudeReport check_magnitudes(const StructureTable& table);

/// ad[x_i, x_j] = [ad x_i, ad x_j] on all basis pairs; returns the first
/// failing pair.
std::optional<std::pair<std::size_t, std::size_t>> check_ad_homomorphism(const StructureTable& table);

/// Outcome of the search over the 64 rescalings against the stated R2
/// signs. See calibrate_signs in relations.hpp.
struct CalibrationEntry {
  int formula = 0;  // 1..5
  Root root;
  int stated = 0;   // signed stated coefficient
  int computed = 0;  // signed coefficient under `flips`
};
struct CalibrationResult {
  bool found = false;
  SignFlips flips = kNoFlips;
  int matched = 0;
  int total = 0;
  std::vector<CalibrationEntry> table;
};

class CalibrationError : public Error {
 public:
  explicit CalibrationError(CalibrationResult result);
  const CalibrationResult& result() const { return result_; }

 private:
  CalibrationResult result_;
};

}  // namespace g2
