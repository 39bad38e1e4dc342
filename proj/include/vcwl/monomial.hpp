#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vcwl {

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  static constexpr int kMaxVars = 32;

  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  std::vector<int> exponents() const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Lexicographic comparison of exponent vectors; x1 > x2 > ...
  friend bool operator==(const Monomial& a, const Monomial& b);
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  void check_same(const Monomial& other) const;

  std::array<std::uint16_t, kMaxVars> exps_{};
  int nvars_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of the given degree in nvars variables, lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace vcwl
