#pragma once

#include <cstdint>
#include <vector>

#include "vcwl/groebner.hpp"
#include "vcwl/matrix.hpp"
#include "vcwl/veronese.hpp"

namespace vcwl {

/// A random invertible change of coordinates x_i -> sum_j g_ij x_j.
struct GenericChange {
  Matrix g;
  std::uint64_t seed = 0;
  long bound = 0;
};

GenericChange random_change(int n, std::uint64_t seed, long bound = kDefaultBound);

/// Applies the change to a polynomial of R.
Polynomial apply_change(const GenericChange& change, const Polynomial& f);

struct GinCertificate {
  std::vector<Monomial> ideal;        // minimal generators of the agreed result
  int draws = 0;                      // draws compared in the deciding round
  std::vector<std::uint64_t> seeds;   // every seed used, in order
  bool agree = false;
  bool escalated = false;             // a second round with more draws ran
  long bound = 0;
};

struct GinResult {
  GradedIdeal ideal;  // monomial ideal of R
  GinCertificate certificate;
};

/// Generic initial ideal of J (an ideal of R) with respect to `order`:
/// in(g(J)) for `draws` independent random g, required to agree. On
/// disagreement one more round with draws + 1 fresh seeds is tried before
/// an InstabilityError is raised.
GinResult gin(const GradedIdeal& j, const TermOrder& order, int draws = 2, std::uint64_t seed = 0,
              long bound = kDefaultBound);

/// A gin computed with agreement must be Borel.
bool check_gin_certificate_borel(const GinResult& result);

struct GinContraction {
  GradedIdeal ideal;  // (Gin(IR))^(c) over R^(c)
  GinResult gin;      // Gin(IR) in R
  int veronese_bound = 0;
};

/// (Gin_degrevlex(IR))^(c) for an ideal I of R^(c).
GinContraction gin_contraction(const GradedIdeal& ideal, std::uint64_t seed = 0, long bound = kDefaultBound);

struct LinearSectionCheck {
  HilbertFunction original;  // R^(c)/(I + (y_1..y_p))
  HilbertFunction gin_side;  // R^(c)/((Gin(IR))^(c) + (y_1..y_p))
  bool equal = false;
};

/// Compares the two Hilbert functions over [first, last]; both are counted
/// from Groebner bases in S under the Veronese-compatible order.
LinearSectionCheck linear_section_hilbert_check(const GradedIdeal& ideal, const GenericForms& forms, int p,
                                                int first, int last, std::uint64_t seed = 0,
                                                long bound = kDefaultBound);

}  // namespace vcwl
