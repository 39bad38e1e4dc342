#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcwl/monomial.hpp"
#include "vcwl/rational.hpp"
#include "vcwl/term_order.hpp"

namespace vcwl {

/// Variable layout: x1..x_{x_vars} followed by t1..t_{t_vars}.
/// R is {n, 0}, S is {0, d}; elimination works in the joint ring {n, d}.
struct Ring {
  int x_vars = 0;
  int t_vars = 0;

  static Ring R(int n) { return {n, 0}; }
  static Ring S(int d) { return {0, d}; }
  static Ring joint(int n, int d) { return {n, d}; }

  int nvars() const { return x_vars + t_vars; }
  std::string var_name(int i) const;
  std::string name() const;
  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are keyed by
/// exponent vector; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, int index);
  static Polynomial term(Ring ring, const Monomial& m, const Rational& c = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Total degree shared by all terms; empty for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  int degree() const;

  std::pair<Monomial, Rational> leading_term(const TermOrder& order) const;
  Monomial leading_monomial(const TermOrder& order) const { return leading_term(order).first; }
  Polynomial monic(const TermOrder& order) const;

  /// Replaces variable i by images[i]; all images must share one ring.
  Polynomial substitute(const std::vector<Polynomial>& images, Ring target) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial multiply(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Terms listed in degrevlex-descending order, e.g. "3/2*x1^2*x2 - x3^3".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  Ring ring_;
  TermMap terms_;
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Parses the polynomial text grammar: signed terms, integer or p/q
/// coefficients, variables x<i> or t<i>, powers via '^', products via '*'
/// or juxtaposition. `offset` is added to error positions.
Polynomial parse_polynomial(std::string_view text, Ring ring, std::size_t offset = 0);

/// Symbols ('x' or 't') referenced by the text, in order of appearance.
std::vector<std::pair<char, std::size_t>> scan_variables(std::string_view text);

}  // namespace vcwl
