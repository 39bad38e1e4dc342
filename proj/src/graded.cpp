#include "vcwl/graded.hpp"

#include <algorithm>
#include <unordered_map>

#include "vcwl/error.hpp"
#include "vcwl/matrix.hpp"

namespace vcwl {

DegreeCMonomials degree_c_monomials(int n, int c) {
  if (n < 1 || c < 1) throw Error("degree_c_monomials needs n >= 1 and c >= 1");
  DegreeCMonomials out;
  out.monomials = monomials_of_degree(n, c);
  out.d = static_cast<int>(out.monomials.size());
  return out;
}

std::vector<Polynomial> graded_piece(const std::vector<Polynomial>& gens, int j) {
  if (gens.empty()) return {};
  Ring ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw DimensionError("graded_piece generators in different rings");
    if (!g.is_homogeneous()) throw GradingError("graded_piece: non-homogeneous generator " + g.to_string());
  }
  auto basis = monomials_of_degree(ring.nvars(), j);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  Echelon ech(static_cast<int>(basis.size()));
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = *g.homogeneous_degree();
    if (e > j) continue;
    for (const auto& u : monomials_of_degree(ring.nvars(), j - e)) {
      SparseVector v;
      for (const auto& [m, c] : g.terms()) v.emplace_back(index.at(m * u), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(v);
    }
  }
  std::vector<Polynomial> out;
  for (const auto& row : ech.rows()) {
    Polynomial p(ring);
    for (const auto& [i, c] : row) p.add_term(basis[static_cast<std::size_t>(i)], c);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return a.terms().rbegin()->first > b.terms().rbegin()->first;
  });
  return out;
}

std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw GradingError("minimal_generators: non-homogeneous generator " + g.to_string());
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return *a.homogeneous_degree() < *b.homogeneous_degree();
  });
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    int e = *g.homogeneous_degree();
    bool redundant = false;
    if (!kept.empty()) {
      auto piece = graded_piece(kept, e);
      auto basis = monomials_of_degree(g.ring().nvars(), e);
      Echelon ech(static_cast<int>(basis.size()));
      std::unordered_map<Monomial, int, MonomialHash> index;
      for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
      auto vec = [&](const Polynomial& f) {
        SparseVector v;
        for (const auto& [m, c] : f.terms()) v.emplace_back(index.at(m), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
      };
      for (const auto& b : piece) ech.insert(vec(b));
      redundant = ech.contains(vec(g));
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace vcwl
