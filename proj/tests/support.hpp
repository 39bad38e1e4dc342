#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "vcwl/polynomial.hpp"

namespace vcwl {

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  os << "[";
  for (int i = 0; i < m.nvars(); ++i) os << (i ? "," : "") << m[i];
  return os << "]";
}

}  // namespace vcwl

namespace vcwl::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int bound = 20) {
    int den = integer(1, bound);
    Rational q(integer(-bound, bound), den);
    q.canonicalize();
    return q;
  }

  Monomial monomial(int nvars, int max_degree) {
    Monomial m(nvars);
    int budget = integer(0, max_degree);
    for (int k = 0; k < budget; ++k) {
      int v = integer(0, nvars - 1);
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Monomial monomial_of_degree(int nvars, int degree) {
    Monomial m(nvars);
    for (int k = 0; k < degree; ++k) {
      int v = integer(0, nvars - 1);
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Polynomial polynomial(Ring ring, int terms, int max_degree) {
    Polynomial p(ring);
    for (int k = 0; k < terms; ++k) p.add_term(monomial(ring.nvars(), max_degree), rational());
    return p;
  }

  Polynomial homogeneous(Ring ring, int terms, int degree) {
    Polynomial p(ring);
    for (int k = 0; k < terms; ++k) p.add_term(monomial_of_degree(ring.nvars(), degree), rational(5));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Polynomial P(const char* text, Ring ring) { return parse_polynomial(text, ring); }

}  // namespace vcwl::testing
