#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "dimjac/verify/random.hpp"

namespace dimjac::verify {

/// Outcome of one property suite: `cases` checks ran, `detail` describes the
/// first failure (or a short summary on success).
struct CheckResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;

  /// Records a failed case; the first failure's message is kept.
  void fail(const std::string& message);
  void merge(const CheckResult& other);
};

// Numeric tolerances shared by selftest and the acceptance binary.
inline constexpr double kCupMinutesTol = 1e-4;
inline constexpr double kCupSecondsTol = 1e-3;
inline constexpr double kFreeParticleTol = 1e-10;
inline constexpr double kDecayTol = 1e-9;
inline constexpr double kOrderRatioLow = 14.0;
inline constexpr double kOrderRatioHigh = 18.0;
inline constexpr double kReductionTol = 1e-12;

/// Cup fill time (300 cm^3)/(4.3 L/min): exactly 3/43 min in the kitchen
/// system, about 0.0698 min and 4.186 s in floating point.
CheckResult cup_fill(const std::filesystem::path& data_dir);

/// Associativity, commutativity, distributivity over homogeneous addition,
/// additivity of the dimension projection and absorption by zero on random
/// triples over Z^3.
CheckResult field_axioms(Rng& rng, std::size_t triples);
/// ratio(a,b) ratio(b,c) ratio(c,a) = 1 on random triples of one line,
/// elements drawn across rescaled generators.
CheckResult two_out_of_three(Rng& rng, std::size_t triples);
/// Trivialization by a random unit choice is bijective and multiplicative.
CheckResult trivialization(Rng& rng, std::size_t count);

/// For each random pair on R^3: is_jacobi_pair agrees with the bracket's
/// Jacobi identity on random triples, with the extension conditions and with
/// the Jacobi identity of the dimensioned bracket.
CheckResult jacobi_equivalence(Rng& rng, std::size_t pairs, std::size_t triples);
/// dimensioned_bracket against the base-case definitions of the bracket at
/// weights (1,1), (1,0), (0,0), (1,-1), (0,-1), (-1,-1) on monomial probes.
CheckResult base_case_conformance(Rng& rng);
/// Defining relations of the product structure for the given factors.
CheckResult product_relations(const LichnerowiczStructure& l1,
                              const LichnerowiczStructure& l2);
/// Symplectic R^2 times a point plus zero times zero.
CheckResult product_cases();
/// Coordinate subspaces of symplectic R^4.
CheckResult coisotropic_cases();

/// Contact field against the Darboux hamiltonian field on random h.
CheckResult contact_field_identity(Rng& rng, std::size_t count);
/// Free particle, exponential decay, rk4 order and the symplectic reduction.
CheckResult contact_dynamics();

/// Random inputs to the quantity language produce values or library errors.
CheckResult parser_fuzz(Rng& rng, std::size_t count, const std::filesystem::path& data_dir);
/// format -> parse -> evaluate is the identity on random quantities.
CheckResult format_round_trip(Rng& rng, std::size_t count,
                              const std::filesystem::path& data_dir);

struct Suite {
  std::string id;
  std::string title;
  /// Wall-clock budget in seconds.
  double limit_seconds;
  std::function<CheckResult()> run;
};

struct SuiteReport {
  const Suite* suite;
  CheckResult result;
  double seconds;
  bool passed() const { return result.ok && seconds <= suite->limit_seconds; }
};

/// The nine acceptance suites with their full sample sizes.
std::vector<Suite> acceptance_suites(const std::filesystem::path& data_dir,
                                     std::uint64_t seed = 20240901);
/// Runs a suite, turning any escaped exception into a failure.
SuiteReport run_suite(const Suite& suite);

}  // namespace dimjac::verify
