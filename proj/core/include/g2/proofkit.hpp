#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2/group.hpp"
#include "g2/ring_map.hpp"

namespace g2 {

// ---------------------------------------------------------------------------
// Recovering X_a from root elements

struct LongSquare {
  Root gamma;
  Root beta;
  /// Sign s with (x_g(1)x_b(1) - x_g(1) - x_b(1) + E)^2 = s E_(a,-a); 0 if the
  /// square is not of that shape.
  int sign = 0;
};

struct LongRecovery {
  Root alpha;
  std::vector<LongSquare> squares;  // every ordered long decomposition
  Matrix X;                         // from the first decomposition
};

/// Throws InvalidArgument for short roots, NoLongDecomposition if no long
/// pair sums to alpha, NotExact if a square has the wrong shape.
LongRecovery recover_X_long(const Chevalley& g, const Root& alpha);

/// Matrix unit E_(a,-a): the single entry at (basis(a), basis(-a)).
Matrix root_pair_unit(const Ring& r, const Root& alpha);

struct ShortData {
  Root beta;
  Matrix Xsq;     // x(-1) + x(1) - 2E
  Matrix twoX;    // (-x(2) - 2x(-1))/3 - E + 2x(1)
  Matrix Xcube3;  // -x(1) - x(-1)/3 + x(2)/3 + E
  bool eq2_consistent = false;  // x(1) - x(-1) - twoX reproduces Xcube3
};

/// Throws ThreeNotInvertible.
ShortData recover_short_data(const Chevalley& g, const Root& beta);

struct IdentityCheck {
  std::string name;
  Root root;
  bool pass = false;
  std::string detail;
};

/// The four short-root identities for beta against the divided powers of
/// ad x_b mapped into the ring. Throws ThreeNotInvertible.
std::vector<IdentityCheck> check_short_identities(const Chevalley& g, const Root& beta);

/// X_a for any root over a ring where the divisions by 3 and 2 in the 2X
/// formula are exact (e.g. int): long roots via the square, short via 2X.
Matrix recover_X(const Chevalley& g, const Root& alpha);

/// x_a(t), x_-a(-t^-1), x_a(t), x_a(-1), x_-a(1), x_a(-1). Throws NotAUnit.
GroupWord h_word(const Ring& r, const Root& alpha, const Value& t);

/// First long root a (in all_roots order) with <beta, a> = 1. Throws
/// NoAdjacentLongRoot.
Root adjacent_long_root(const Root& beta);
/// h_a(t) x_b(1) h_a(t)^-1 spelled as a word. Throws NotAUnit, NoAdjacentLongRoot.
GroupWord short_unit_word(const Ring& r, const Root& beta, const Value& t);

struct IntegrityEntry {
  Root root;
  std::string scalar;
  bool in_image = false;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Conjugates x_a(f(t)) by g over f's target and tests whether every entry
/// lies in f(source).
std::vector<IntegrityEntry> conjugation_integrality_check(const Chevalley& over_target, const GroupMatrix& g,
                                                          const RingMap& embedding,
                                                          const std::vector<std::pair<Root, Value>>& targets);

// ---------------------------------------------------------------------------
// Automorphism specs

/// phi given by the images of the x_a(1), optionally also of every x_a(t)
/// (table[root][element index]) and a claimed decomposition.
struct AutomorphismSpec {
  Ring ring;
  std::vector<Matrix> images;  // all_roots() order
  std::optional<std::vector<std::vector<Matrix>>> table;
  std::optional<GroupMatrix> claimed_g;
  std::optional<RingMap> claimed_rho;
};

/// [x_a(1), x_b(1)] = prod x_g(c_g) over int for one root pair, in product order.
struct CommutatorExpansion {
  Root alpha;
  Root beta;
  std::vector<std::pair<Root, std::int64_t>> factors;
};

/// Entry (i, j) of x_a(s) equal to sign * s.
struct ReadingEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 1;
};

/// Per-table data used by spec checks: commutator expansions of every pair
/// a != -b and reading entries of every root.
class GeneratorRelations {
 public:
  explicit GeneratorRelations(const StructureTable& table);
  const StructureTable& table() const { return table_; }
  const std::vector<CommutatorExpansion>& expansions() const { return expansions_; }
  const CommutatorExpansion& expansion(const Root& a, const Root& b) const;
  const ReadingEntry& reading(const Root& r) const { return reading_[root_index(r)]; }

 private:
  StructureTable table_;
  std::vector<CommutatorExpansion> expansions_;
  std::array<ReadingEntry, kRootCount> reading_{};
};

/// Additive order of 1 in a finite ring.
std::int64_t characteristic(const Ring& r);

struct SpecCheck {
  bool pass = true;
  std::vector<std::string> failures;
};

/// phi(x_a(1))^char = E, and every commutator [phi(x_a(1)), phi(x_b(1))]
/// equals the image of its expansion; with a table also x_a(s)x_a(t) = x_a(s+t)
/// on images.
SpecCheck check_spec_relations(const AutomorphismSpec& spec, const GeneratorRelations& rel);

/// Spec of i_g o rho with the full generator table.
AutomorphismSpec make_standard_spec(const Chevalley& g, const GroupMatrix& inner, const RingMap& rho);

struct RandomSpec {
  AutomorphismSpec spec;
  GroupWord word;
  RingMap rho;
};

/// Inner factor from a random generator word of length <= max_depth, ring
/// factor identity or (for gf:p^k, k > 1, when `frobenius`) a random power
/// of Frobenius.
RandomSpec random_standard_spec(const Chevalley& g, std::mt19937_64& rng, bool frobenius, int max_depth = 4);

// ---------------------------------------------------------------------------
// Ring automorphism extraction

/// Reads rho from a spec fixing every x_a(1) and carrying the full table.
/// Throws InvalidArgument (precondition), NotOfRootForm, LengthMismatch.
RingMap extract_rho(const AutomorphismSpec& spec, const GeneratorRelations& rel);

struct RhoCheck {
  bool additive = true;
  bool multiplicative = true;
  /// x_{2a+3b}(c rho(s) rho(t)) = [x_a(rho s), x_{a+3b}(rho t)] for all s, t.
  bool commutator_witness = true;
  std::vector<std::string> failures;
  bool pass() const { return additive && multiplicative && commutator_witness; }
};

RhoCheck check_rho(const Chevalley& g, const RingMap& rho, const GeneratorRelations& rel);

/// Every entry of x - x_a(1) lies in the radical. Throws NotLocal.
bool congruence_check(const Chevalley& g, const GroupMatrix& x, const Root& alpha);

struct CentralizerReport {
  Root alpha;
  std::vector<Root> gamma;  // roots b with x_b(1) commuting with x_a(1)
  std::size_t checks = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

/// Gamma_a from the generator commutation table, then every x_a(t) against
/// every element of Gamma_a. Ring size <= 9.
CentralizerReport centralizer_gamma_check(const Chevalley& g, const Root& alpha);

// ---------------------------------------------------------------------------
// Standardness

struct DecompositionResult {
  GroupMatrix g;
  RingMap rho;
  std::optional<Root> failed_at;  // nullopt means Exact
  std::string method;             // "linear" or "word"
  bool exact() const { return !failed_at.has_value(); }
};

struct DecomposeOptions {
  int word_depth = 6;
  std::size_t word_budget = 200000;
};

/// Finds g with i_{g^-1} o phi fixing every x_a(1) (linear conjugacy solve
/// over finite fields, word search otherwise), then reads rho from the table
/// if present (identity otherwise). Throws SearchExhausted.
DecompositionResult decompose_standard(const AutomorphismSpec& spec, const GeneratorRelations& rel,
                                       const DecomposeOptions& options = {});

/// First root (or table entry) where i_g o rho differs from the spec.
std::optional<Root> first_failure(const AutomorphismSpec& spec, const Chevalley& g, const GroupMatrix& inner,
                                  const RingMap& rho);

}  // namespace g2
