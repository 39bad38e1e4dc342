#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"
#include "vcwl/error.hpp"
#include "vcwl/resolution.hpp"

using namespace vcwl;
using vcwl::testing::Gen;
using vcwl::testing::P;
using namespace vcwl::testing;

namespace {

GradedIdeal VI(std::shared_ptr<const VeronesePresentation> pres, std::vector<const char*> texts) {
  std::vector<Polynomial> gens;
  for (auto* t : texts) gens.push_back(P(t, pres->S()));
  return veronese_ideal(pres, gens);
}

GradedIdeal random_ideal(Gen& gen, std::shared_ptr<const VeronesePresentation> pres) {
  std::vector<Polynomial> gens;
  int k = gen.integer(1, 3);
  for (int i = 0; i < k; ++i) {
    int e = gen.integer(1, 2);
    auto f = Polynomial::term(pres->S(), gen.monomial_of_degree(pres->d, e));
    if (gen.integer(0, 1)) f -= Polynomial::term(pres->S(), gen.monomial_of_degree(pres->d, e), gen.integer(1, 3));
    gens.push_back(f);
  }
  return veronese_ideal(pres, gens);
}

void check_resolution(const GradedIdeal& ideal, int imax) {
  auto m = quotient_module(ideal);
  auto res = minimal_resolution(m, imax);
  const auto& f = res.resolution;
  const int jmax = f.jmax;
  // d o d = 0 and minimality
  for (int i = 1; i <= imax; ++i) {
    for (std::size_t g = 0; g < f.degrees[static_cast<std::size_t>(i)].size(); ++g) {
      const auto& e = f.differential[static_cast<std::size_t>(i)][g];
      for (const auto& a : e) {
        if (!a.is_zero()) CHECK(a.homogeneous_degree().value() > 0);
      }
      if (i < 2) continue;
      std::vector<Polynomial> comp(f.degrees[static_cast<std::size_t>(i - 2)].size(), Polynomial(f.pres->R()));
      for (std::size_t h = 0; h < e.size(); ++h) {
        const auto& dh = f.differential[static_cast<std::size_t>(i - 1)][h];
        for (std::size_t k = 0; k < dh.size(); ++k) comp[k] += e[h] * dh[k];
      }
      for (const auto& p : comp) CHECK(p.is_zero());
    }
  }
  // exactness at F_i for 1 <= i < imax and image of d_1 = N
  auto hf = veronese_hilbert(ideal, 0, jmax);
  for (int j = 0; j <= jmax; ++j) {
    long gens_rank = static_cast<long>(brute_basis(f.pres->n, f.pres->c * j).size());
    CHECK(gens_rank - differential_rank(f, 1, j) == hf.at(j));
    for (int i = 1; i < imax; ++i) {
      CHECK(differential_rank(f, i, j) + differential_rank(f, i + 1, j) == free_dim(f, i, j));
    }
    // alternating sum, valid while F_{imax+1} cannot reach degree j
    if (j <= imax) {
      long chi = 0;
      for (int i = 0; i <= imax; ++i) chi += (i % 2 ? -1 : 1) * free_dim(f, i, j);
      CHECK(chi == hf.at(j));
    }
  }
}

}  // namespace

TEST_CASE("algebra bases") {
  auto pres = build_presentation(2, 3);
  auto alg = veronese_algebra(pres);
  CHECK(alg->dim(0) == 1);
  CHECK(alg->dim(1) == 4);
  CHECK(alg->dim(2) == 7);
  CHECK(alg->dim(-1) == 0);
  CHECK(alg->basis(2).index.at(alg->basis(2).monomials[3]) == 3);
}

TEST_CASE("module validation") {
  auto pres = build_presentation(2, 2);
  GradedModule bad = free_module(pres, {0});
  bad.relations.push_back({P("x1", pres->R())});
  CHECK_THROWS_AS(bad.validate(), GradingError);
  GradedModule unit = free_module(pres, {0});
  unit.relations.push_back({P("1", pres->R())});
  CHECK_THROWS_AS(unit.validate(), PreconditionError);
  CHECK_THROWS_AS(quotient_module(VI(pres, {"t1", "1"})), PreconditionError);
}

TEST_CASE("free module resolution") {
  auto pres = build_presentation(2, 2);
  auto res = minimal_resolution(free_module(pres, {0, 1, 1}), 3);
  CHECK(res.betti.at(0, 0) == 1);
  CHECK(res.betti.at(0, 1) == 2);
  for (int i = 1; i <= 3; ++i) CHECK(res.betti.total(i) == 0);
  CHECK(res.regularity->bound == 1);
  CHECK(res.betti.all_complete());
}

TEST_CASE("complete intersection of parameters") {
  auto pres = build_presentation(2, 2);
  auto res = minimal_resolution(quotient_module(VI(pres, {"t1", "t3"})), 3);
  CHECK(res.betti.at(0, 0) == 1);
  CHECK(res.betti.at(1, 1) == 2);
  CHECK(res.betti.at(2, 2) == 1);
  CHECK(res.betti.total(3) == 0);
  // reg over S of S/(t1, t3, t2^2) is 1, an upper bound for the true 0
  CHECK(res.regularity->bound == 1);
  CHECK(res.betti.all_complete());
}

TEST_CASE("residue field over the hypersurface Veronese") {
  // Poincare series (1+t)^3 / (1-t^2)
  auto pres = build_presentation(2, 2);
  auto res = minimal_resolution(residue_field(pres), 5);
  std::vector<long> expect{1, 3, 4, 4, 4, 4};
  for (int i = 0; i <= 5; ++i) {
    CHECK(res.betti.at(i, i) == expect[static_cast<std::size_t>(i)]);
    CHECK(res.betti.total(i) == expect[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("residue field is linear over Koszul Veronese rings") {
  for (auto [n, c] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
    auto pres = build_presentation(n, c);
    auto res = minimal_resolution(residue_field(pres), 3, 5);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 5; ++j) {
        if (j != i) CHECK(res.betti.at(i, j) == 0);
      }
    }
    CHECK(res.betti.at(1, 1) == pres->d);
    CHECK(res.betti.at(2, 2) == static_cast<long>(pres->d * (pres->d - 1) / 2 + pres->kernel.size()));
  }
}

TEST_CASE("resolutions are exact and minimal") {
  Gen gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    auto pres = build_presentation(2, trial % 3 == 2 ? 3 : 2);
    auto ideal = random_ideal(gen, pres);
    if (ideal.is_zero() || ideal.min_degree() == 0) continue;
    CAPTURE(trial);
    check_resolution(ideal, 3);
  }
  check_resolution(VI(build_presentation(3, 2), {"t1", "t2*t6"}), 2);
}

TEST_CASE("complete columns are stable under a larger window") {
  Gen gen(12);
  for (int trial = 0; trial < 8; ++trial) {
    auto pres = build_presentation(2, 2);
    auto ideal = random_ideal(gen, pres);
    if (ideal.is_zero() || ideal.min_degree() == 0) continue;
    auto m = quotient_module(ideal);
    auto small = minimal_resolution(m, 3);
    auto big = minimal_resolution(m, 3, small.betti.jmax + 3);
    for (int i = 0; i <= 3; ++i) {
      if (!small.betti.complete[static_cast<std::size_t>(i)]) continue;
      CHECK(small.betti.total(i) == big.betti.total(i));
      for (int j = small.betti.jmax + 1; j <= big.betti.jmax; ++j) CHECK(big.betti.at(i, j) == 0);
    }
  }
}

TEST_CASE("regularity bound dominates observed regularity") {
  Gen gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto pres = build_presentation(2, trial % 2 ? 3 : 2);
    auto ideal = random_ideal(gen, pres);
    if (ideal.is_zero() || ideal.min_degree() == 0) continue;
    auto res = minimal_resolution(quotient_module(ideal), 3, 8);
    auto rb = regularity_bound(quotient_module(ideal));
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 8; ++j) {
        if (res.betti.at(i, j) > 0) CHECK(j - i <= rb.bound);
      }
    }
  }
}

TEST_CASE("general modules need an explicit window") {
  auto pres = build_presentation(2, 2);
  auto m = free_module(pres, {0, 0});
  m.relations.push_back({P("x1^2", pres->R()), P("x2^2", pres->R())});
  CHECK_THROWS_AS(minimal_resolution(m, 2), PreconditionError);
  auto res = minimal_resolution(m, 2, 4);
  CHECK(res.betti.at(0, 0) == 2);
  CHECK(res.betti.at(1, 1) == 1);
  CHECK_FALSE(res.betti.all_complete());
}

TEST_CASE("Tor is symmetric") {
  auto pres = build_presentation(2, 2);
  std::vector<GradedModule> mods{quotient_module(VI(pres, {"t1", "t3"})), residue_field(pres),
                                 quotient_module(VI(pres, {"t1^2", "t3^2"})), quotient_module(VI(pres, {"t2"}))};
  for (std::size_t a = 0; a < mods.size(); ++a) {
    for (std::size_t b = a + 1; b < mods.size(); ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(tor_dims(mods[a], mods[b], 2, 4) == tor_dims(mods[b], mods[a], 2, 4));
    }
  }
}

TEST_CASE("Tor with the residue field recovers Betti numbers") {
  auto pres = build_presentation(2, 2);
  auto m = quotient_module(VI(pres, {"t1^2", "t2*t3"}));
  auto res = minimal_resolution(m, 2, 5);
  auto tor = tor_dims(residue_field(pres), m, 2, 5);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 5; ++j) CHECK(tor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == res.betti.at(i, j));
  }
}

TEST_CASE("tensor complex homology in degree zero") {
  auto pres = build_presentation(2, 2);
  auto m = quotient_module(VI(pres, {"t1", "t3"}));
  auto res = minimal_resolution(residue_field(pres), 3, 4);
  TensorComplex tc(res.resolution, std::make_shared<const ModuleQuotient>(veronese_algebra(pres), m));
  // Tor_0(K, M) = M/mM
  CHECK(tc.homology(0, 0).dim() == 1);
  CHECK(tc.homology(0, 1).dim() == 0);
  // x1^2 kills Tor_i(K, M)
  auto a = P("x1^2", pres->R());
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j < 4; ++j) CHECK_FALSE(tc.non_annihilated(a, i, j).has_value());
  }
  CHECK_THROWS_AS(tc.homology(3, 3), PreconditionError);
}

TEST_CASE("multiplication on Tor against M") {
  // Tor_0(A, M) = M, so image dims are ranks of multiplication maps on M
  auto pres = build_presentation(2, 2);
  auto m = quotient_module(VI(pres, {"t1"}));
  auto res = minimal_resolution(free_module(pres, {0}), 1, 4);
  TensorComplex tc(res.resolution, std::make_shared<const ModuleQuotient>(veronese_algebra(pres), m));
  auto hf = veronese_hilbert(VI(pres, {"t1"}), 0, 4);
  for (int j = 0; j <= 4; ++j) CHECK(tc.homology(0, j).dim() == hf.at(j));
  // x2^2 is a nonzerodivisor on A/(x1^2)
  for (int j = 1; j <= 4; ++j) CHECK(tc.image_dim(P("x2^2", pres->R()), 0, j) == hf.at(j - 1));
  // (x1*x2)^2 = 0 modulo x1^2
  CHECK(tc.image_dim(P("x1*x2", pres->R()), 0, 1) == 1);
  CHECK(tc.image_dim(P("x1*x2", pres->R()), 0, 2) == 1);
}
