#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vcwl/resolution.hpp"

namespace vcwl {

/// Graded dims over a degree window with their total. `stabilized` means
/// the top degree of the window is zero.
struct GradedDims {
  std::vector<long> dims;
  long total = 0;
  bool stabilized = false;
};

/// H_i(p) = Tor_i(R^(c)/(y_1..y_p), M) for p = 0..d and i = 0..imax, with
/// the connecting data of the sequences
///   0 -> N_{p-1}(-1) --y_p--> N_{p-1} -> N_p -> 0,  N_p = R^(c)/(y_1..y_p).
/// The long exact sequence in Tor needs y_p injective on N_{p-1}; that is
/// checked degreewise and recorded in `injective`.
struct KoszulHomologyTable {
  int d = 0;
  int imax = 0;
  int jmax = 0;
  std::uint64_t seed = 0;
  /// beta[p][i][j] = dim H_i(p)_j.
  std::vector<std::vector<std::vector<long>>> beta;
  /// h[p][i]: totals over the window.
  std::vector<std::vector<GradedDims>> h;
  /// alpha[p] for p = 1..d (index 0 unused): A_p = ker(y_p on H_0(p-1)),
  /// graded on degrees 0..jmax-1.
  std::vector<GradedDims> alpha;
  /// image[p][i][j] = dim Im(phi_{i,p-1})_j, multiplication by y_p from
  /// H_i(p-1)_{j-1} to H_i(p-1)_j, for p = 1..d.
  std::vector<std::vector<std::vector<long>>> image;
  /// injective[p]: y_p injective on N_{p-1} in all degrees of the window.
  std::vector<bool> injective;
  /// Residual LHS - RHS of the exact-sequence recursion, for i >= 1:
  ///   b_{ijp} = b_{ij(p-1)} + b_{(i-1)(j-1)(p-1)} - Im(phi_{i,p-1})_j - Im(phi_{i-1,p-1})_j.
  std::vector<std::vector<std::vector<long>>> residual;
  /// Residual of the i = 1 variant without the Im(phi_{1,p-1}) term:
  ///   b_{1jp} = b_{1j(p-1)} + b_{0(j-1)(p-1)} - b_{0j(p-1)} + b_{0jp}.
  std::vector<std::vector<long>> residual_first;

  long at(int p, int i, int j) const;
  /// First (p, i, j) with a nonzero residual among the stated recursions
  /// (general form for i >= 2, the variant for i = 1).
  std::optional<std::array<int, 3>> stated_recursion_failure() const;
  /// Same, using the general form for i = 1 as well.
  std::optional<std::array<int, 3>> exact_recursion_failure() const;
};

/// One (i, p) cell of the upper bound h_i(p) <= sum_{j=1}^{p-i+1} binom(p-j, i-1) alpha_j.
struct BettiBoundCell {
  int i = 0;
  int p = 0;
  long h = 0;
  long bound = 0;
  bool holds = false;
  bool equal = false;
  bool maps_vanish = false;  // phi_{a,b} = 0 on the index set
  bool annihilated = false;  // m^(c) H_a(b) = 0 on the index set
  bool stabilized = false;
};

struct MaxBettiReport {
  std::vector<BettiBoundCell> cells;
  bool bounds_hold = false;
  /// At every equality cell the two vanishing conditions hold, and conversely.
  bool equivalence_holds = false;
  /// h_i(d) equals the bound for every 1 <= i <= imax.
  bool maximal_betti = false;
  /// m^(c) H_a(b) = 0 for all 1 <= a <= imax, 1 <= b <= d.
  bool annihilation = false;
};

struct ProperSequenceReport {
  bool proper = false;
  std::optional<std::pair<int, int>> failure;  // (i, p)
  std::optional<int> failure_degree;
};

/// Owns the resolution of M and the tensor complexes for every N_p.
class KoszulHomology {
 public:
  KoszulHomology(const GradedModule& m, GenericForms forms, int imax, std::optional<int> jmax = {},
                 std::uint64_t seed = 0);

  const KoszulHomologyTable& table() const { return table_; }
  const GenericForms& forms() const { return forms_; }
  const TensorComplex& complex(int p) const { return *complexes_.at(static_cast<std::size_t>(p)); }
  /// y_p in x-coordinates, p = 1..d.
  const Polynomial& form(int p) const { return forms_x_.at(static_cast<std::size_t>(p - 1)); }

  /// phi_{a,b} (multiplication by y_{b+1} on H_a(b)) vanishes on the window.
  bool map_vanishes(int a, int b) const;
  /// Every degree-one element kills H_a(b) on the window.
  bool annihilated(int a, int b) const;

  MaxBettiReport max_betti_check() const;
  ProperSequenceReport proper_sequence_check() const;

 private:
  GenericForms forms_;
  std::vector<Polynomial> forms_x_;
  ResolutionResult resolution_;
  std::vector<std::unique_ptr<TensorComplex>> complexes_;
  KoszulHomologyTable table_;
};

/// Default degree window: imax + regularity bound + n + 1.
int default_koszul_window(const GradedModule& m, int imax, std::uint64_t seed = 0);

long max_betti_bound(const KoszulHomologyTable& t, int i, int p);

KoszulHomologyTable koszul_table(const GradedModule& m, const GenericForms& forms, int imax,
                                 std::optional<int> jmax = {});
MaxBettiReport max_betti_check(const GradedModule& m, const GenericForms& forms, int imax,
                               std::optional<int> jmax = {});
ProperSequenceReport proper_sequence_check(const GradedModule& m, const GenericForms& forms, int imax,
                                           std::optional<int> jmax = {});

}  // namespace vcwl
