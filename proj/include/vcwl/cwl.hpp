#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcwl/gin.hpp"
#include "vcwl/koszul.hpp"
#include "vcwl/resolution.hpp"

namespace vcwl {

enum class Verdict { ComponentwiseLinear, NotComponentwiseLinear, Inconclusive };
enum class CwlMethod { Direct, GinCriterion };

std::string to_string(Verdict v);
std::string to_string(CwlMethod m);

/// Betti entry of the ideal: beta_{i,j}(I) = beta_{i+1,j}(R^(c)/I).
struct BettiWitness {
  int i = 0;
  int j = 0;
  long value = 0;
  long other = 0;  // the compared value, when two tables are involved
};

/// Betti table of R^(c)/I through step imax + 1, so every ideal entry
/// beta_{i,j}(I) with i <= imax is present. The unit ideal gives the zero
/// module and an empty table.
BettiTable quotient_betti(const GradedIdeal& ideal, int imax, std::optional<int> jmax = {}, std::uint64_t seed = 0);

/// Smallest window making every column of the quotient table complete.
int quotient_window(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);

struct LinearityReport {
  Verdict verdict = Verdict::Inconclusive;  // ComponentwiseLinear means linear here
  int degree = 0;
  std::optional<BettiWitness> witness;
  BettiTable table;
};

/// I generated in one degree j has a j-linear resolution: beta_{i,i+k}(I) = 0
/// for k != j and i <= imax.
LinearityReport check_linear_resolution(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);

struct CwlVerdict {
  Verdict verdict = Verdict::Inconclusive;
  CwlMethod method = CwlMethod::Direct;
  int imax = 0;
  int jmax = 0;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  std::optional<int> witness_component;
  std::optional<BettiWitness> witness;
  std::optional<BettiTable> table;      // R^(c)/I
  std::optional<BettiTable> gin_table;  // R^(c)/(Gin contraction)
  std::optional<GinCertificate> certificate;
  std::optional<GradedIdeal> gin_ideal;
};

CwlVerdict check_cwl_direct(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);
CwlVerdict check_cwl_gin(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0, long bound = kDefaultBound);

struct GinBettiReport {
  bool holds = false;
  bool strict = false;
  bool complete = false;  // every column of both tables certified
  std::optional<BettiWitness> violation;
  std::optional<BettiWitness> strict_entry;
  BettiTable table;
  BettiTable gin_table;
};

/// beta_{ij}(R^(c)/I) <= beta_{ij}(R^(c)/Gin contraction) entrywise.
GinBettiReport gin_betti_inequality_check(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0,
                                   long bound = kDefaultBound);

struct ComponentBettiCell {
  int i = 0;
  int j = 0;
  long graded = 0;     // beta_{i,i+j}(I)
  long component = 0;  // beta_i(I_<j>)
  long shifted = 0;    // beta_i(m^(c) I_<j-1>)
  bool holds() const { return graded == component - shifted; }
};

struct ComponentBettiReport {
  bool holds = false;
  std::vector<ComponentBettiCell> cells;
};

/// beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m^(c) I_<j-1>) for a
/// componentwise linear I; refuses any other input.
ComponentBettiReport component_betti_identity_check(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);

struct SufficiencyReport {
  ProperSequenceReport proper;
  bool condition_met = false;
  std::optional<CwlVerdict> verdict;  // present when the sequence is proper
  bool consistent = false;            // proper implies a componentwise linear verdict
};

SufficiencyReport proper_sequence_sufficiency(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0,
                                    long bound = kDefaultBound);

struct AnnihilationReport {
  /// m^(c) H_i(d) = 0 for 1 <= i <= imax.
  bool literal = false;
  /// m^(c) H_a(b) = 0 for all 1 <= a <= imax and 1 <= b <= d.
  bool strengthened = false;
  std::optional<std::pair<int, int>> failure;  // (a, b)
};

AnnihilationReport annihilation_check(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);

struct NecessityReport {
  CwlVerdict verdict;
  AnnihilationReport annihilation;
};

/// For componentwise linear I: m^(c) kills Tor_i(K, R^(c)/I) (always true,
/// kept as a gate) and the partial-sequence diagnostic. Throws
/// PreconditionError unless the direct check is definitive and positive,
/// TheoremViolation if the literal check fails.
NecessityReport annihilation_necessity(const GradedIdeal& ideal, int imax, std::uint64_t seed = 0);

}  // namespace vcwl
