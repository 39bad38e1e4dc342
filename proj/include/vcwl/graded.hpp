#pragma once

#include <vector>

#include "vcwl/monomial.hpp"
#include "vcwl/polynomial.hpp"

namespace vcwl {

struct DegreeCMonomials {
  std::vector<Monomial> monomials;  // strictly lex-descending
  int d = 0;                        // binomial(n + c - 1, n - 1)
};

/// The degree-c monomials of K[x1..xn] that define the Veronese map.
DegreeCMonomials degree_c_monomials(int n, int c);

/// Row-reduced basis of the degree-j part of the ideal generated by `gens`
/// in their polynomial ring (standard grading). The basis is the reduced
/// row echelon form over monomials sorted lex-descending, hence canonical.
std::vector<Polynomial> graded_piece(const std::vector<Polynomial>& gens, int j);

/// A minimal generating subset of homogeneous generators (standard grading),
/// scanning by increasing degree and keeping each generator not already in
/// the ideal of those kept before it.
std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens);

}  // namespace vcwl
