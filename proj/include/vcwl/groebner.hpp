#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vcwl/polynomial.hpp"
#include "vcwl/term_order.hpp"

namespace vcwl {

namespace detail {
struct PreparedBasis;
}

/// Reduced Groebner basis of an ideal of a polynomial ring, optionally
/// realizing a quotient ring: when `quotient` is nonempty the basis is that
/// of (generators) + (quotient) computed in the lifted ring.
struct GroebnerBasis {
  Ring ring;
  TermOrder order = TermOrder::degrevlex(0);
  std::vector<Polynomial> generators;  // monic, auto-reduced, sorted by leading monomial
  std::vector<Polynomial> quotient;    // relations adjoined from the quotient ring
  std::shared_ptr<const detail::PreparedBasis> prepared;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit_ideal() const;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by generator indices) and Buchberger's two criteria.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         std::span<const Polynomial> quotient = {});

/// Remainder of multivariate division by the basis; zero iff f lies in the
/// ideal, and no remainder term is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Minimal generators of the initial ideal, sorted lex-descending.
std::vector<Monomial> initial_ideal(std::span<const Polynomial> gens, const TermOrder& order,
                                    std::span<const Polynomial> quotient = {});

/// Reduced Groebner basis elements free of the `discard` variables; these
/// generate the elimination ideal. The order used puts the discarded block
/// first and compares both blocks by degrevlex.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const int> discard);

/// Minimal monomial generators: drops every monomial divisible by another.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials);
bool monomial_ideal_contains(std::span<const Monomial> gens, const Monomial& m);

/// Values of a Hilbert function on the explicit degree window [first, last].
struct HilbertFunction {
  int first = 0;
  std::vector<long> values;

  int last() const { return first + static_cast<int>(values.size()) - 1; }
  long at(int j) const { return values.at(static_cast<std::size_t>(j - first)); }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Hilbert function of ring/(quotient + gens), counted through the
/// standard monomials of the initial ideal (standard grading of the ring).
HilbertFunction hilbert_function(std::span<const Polynomial> gens, std::span<const Polynomial> quotient,
                                 Ring ring, int first, int last);
/// Same count for a monomial ideal given by its generators.
HilbertFunction hilbert_function_monomial(std::span<const Monomial> gens, int nvars, int first, int last);

/// Graded presentation data: the submodule of F = (+)_a ring(-shifts[a])
/// generated by `columns`, where each column is a vector of length `rank`.
/// With a nonempty `quotient`, everything is read in ring/(quotient).
struct ModulePresentation {
  Ring ring;
  int rank = 0;
  std::vector<int> shifts;
  std::vector<std::vector<Polynomial>> columns;
  std::vector<Polynomial> quotient;

  /// Degree of a column w.r.t. the shifts; empty for zero columns.
  std::optional<int> column_degree(std::size_t k) const;
  void validate() const;
};

/// Generators of {v : sum_k v_k * columns[k] = 0}, returned as a
/// presentation of rank columns.size() whose shifts are the column degrees.
/// Over a quotient the computation is lifted: Q-multiples of the free basis
/// are adjoined and the resulting syzygy vectors are reduced modulo Q.
ModulePresentation syzygies(const ModulePresentation& pres, const TermOrder& order);

}  // namespace vcwl
