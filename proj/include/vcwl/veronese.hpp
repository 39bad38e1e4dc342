#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vcwl/groebner.hpp"
#include "vcwl/matrix.hpp"
#include "vcwl/polynomial.hpp"

namespace vcwl {

/// The surjection phi: S = K[t1..td] -> R^(c) inside R = K[x1..xn],
/// t_i -> x^{a_i} with a_1 >lex ... >lex a_d, and its toric kernel Q.
struct VeronesePresentation {
  int n = 0;
  int c = 0;
  int d = 0;
  std::vector<Monomial> images;           // a_i as x-monomials
  std::vector<Polynomial> kernel;         // minimal generators of Q
  GroebnerBasis kernel_gb;                // reduced, degrevlex on S

  Ring R() const { return Ring::R(n); }
  Ring S() const { return Ring::S(d); }

  Polynomial phi(const Polynomial& f) const;
  /// Preimage of an R-form of degree divisible by c, reduced modulo Q.
  Polynomial lift(const Polynomial& g) const;
  /// Normal form modulo Q.
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, kernel_gb); }
  /// Monomial of S mapping to the x-monomial m (deg m divisible by c).
  Monomial lift_monomial(const Monomial& m) const;
};

/// Builds (and caches per (n, c)) the presentation; Q is found by
/// elimination in the joint ring K[x, t].
std::shared_ptr<const VeronesePresentation> build_presentation(int n, int c);

enum class RingTag { R, S, Veronese };

/// Homogeneous ideal with a ring tag. Over R^(c) the generators are
/// t-polynomials in normal form modulo Q, graded by Veronese degree.
struct GradedIdeal {
  RingTag tag = RingTag::R;
  std::vector<Polynomial> generators;
  std::shared_ptr<const VeronesePresentation> pres;

  bool is_zero() const { return generators.empty(); }
  bool is_monomial() const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
};

/// Ideal of R^(c): validates homogeneity, reduces modulo Q, drops zeros.
GradedIdeal veronese_ideal(std::shared_ptr<const VeronesePresentation> pres, std::vector<Polynomial> gens);
GradedIdeal r_ideal(std::vector<Polynomial> gens);

/// IR: images of the generators under phi.
GradedIdeal expand(const GradedIdeal& ideal);

struct Contraction {
  GradedIdeal ideal;
  int max_generator_degree = 0;  // D, in R-degrees (0 for the zero ideal)
  int veronese_bound = 0;        // ceil(D / c): last Veronese degree searched
};

/// J^(c) = (+)_j J_{cj}, minimally generated. Generators are found in
/// Veronese degrees up to ceil(D/c) since J_{e+1} = R_1 J_e for e >= D.
Contraction contract(const GradedIdeal& j, std::shared_ptr<const VeronesePresentation> pres);

/// Degree-j piece I_j of an R^(c)-ideal as a canonical basis of R_{cj}.
std::vector<Polynomial> veronese_piece(const GradedIdeal& ideal, int j);

/// Minimal generators of an R^(c)-ideal (canonical per degree).
GradedIdeal minimalize(const GradedIdeal& ideal);

/// dim (R^(c)/I)_j for j in [first, last], counted in x-coordinates.
HilbertFunction veronese_hilbert(const GradedIdeal& ideal, int first, int last);

bool is_borel(const GradedIdeal& monomial_ideal);
bool is_borel_veronese(const GradedIdeal& monomial_ideal);

/// The ideal generated by the degree-j piece I_j.
GradedIdeal component_ideal(const GradedIdeal& ideal, int j);

/// m^(c) = (t1, ..., td).
GradedIdeal irrelevant_ideal(std::shared_ptr<const VeronesePresentation> pres);

/// Ideal equality over R^(c), tested degreewise up to the larger
/// generation degree (both sides are then determined).
bool same_ideal(const GradedIdeal& a, const GradedIdeal& b);

struct GenericForms {
  std::vector<Polynomial> forms;  // y_1..y_p in S_1
  Matrix coefficients;            // p x d
  std::uint64_t seed = 0;
  long bound = 0;
  int redraws = 0;
};

constexpr long kDefaultBound = 1000;

/// y_1..y_p: rows of a seeded d x d integer matrix with entries in
/// [-B, B] of full rank d (redrawn up to 5 times). Prefixes agree for
/// equal (seed, B), so y_1..y_p is the start of y_1..y_d.
GenericForms generic_linear_forms(const VeronesePresentation& pres, int p, std::uint64_t seed,
                                  long bound = kDefaultBound);

}  // namespace vcwl
