#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "vcwl/error.hpp"
#include "vcwl/koszul.hpp"

using namespace vcwl;
using vcwl::testing::Gen;
using vcwl::testing::P;

namespace {

GradedIdeal VI(std::shared_ptr<const VeronesePresentation> pres, std::vector<const char*> texts) {
  std::vector<Polynomial> gens;
  for (auto* t : texts) gens.push_back(P(t, pres->S()));
  return veronese_ideal(pres, gens);
}

GradedIdeal with_forms(const GradedIdeal& ideal, const GenericForms& forms, int p) {
  auto gens = ideal.generators;
  gens.insert(gens.end(), forms.forms.begin(), forms.forms.begin() + p);
  return veronese_ideal(ideal.pres, gens);
}

// alpha_p(R/I)_j from Hilbert functions of Groebner-based quotients:
// 0 -> A_p(-1) -> N(-1) -> N -> N/y_p N -> 0 with N = R/(I + y_<p)
std::vector<long> alpha_oracle(const GradedIdeal& ideal, const GenericForms& forms, int p, int top) {
  auto n = veronese_hilbert(with_forms(ideal, forms, p - 1), 0, top + 1);
  auto q = veronese_hilbert(with_forms(ideal, forms, p), 0, top + 1);
  std::vector<long> out;
  for (int j = 0; j < top; ++j) out.push_back(n.at(j) - n.at(j + 1) + q.at(j + 1));
  return out;
}

}  // namespace

TEST_CASE("free module") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 3);
  KoszulHomology kh(free_module(pres, {0}), forms, 2);
  const auto& t = kh.table();
  for (int p = 0; p <= 3; ++p) {
    for (int i = 1; i <= 2; ++i) CHECK(t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)].total == 0);
  }
  CHECK(t.alpha[1].total == 0);
  CHECK(t.alpha[2].total == 0);
  CHECK(t.alpha[3].total == 1);
  CHECK(t.alpha[3].dims[1] == 1);
  CHECK(t.injective[1]);
  CHECK(t.injective[2]);
  CHECK_FALSE(t.injective[3]);
  CHECK(kh.proper_sequence_check().proper);
}

TEST_CASE("parameter ideal") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 5);
  auto ideal = VI(pres, {"t1", "t3"});
  auto m = quotient_module(ideal);
  KoszulHomology kh(m, forms, 2);
  const auto& t = kh.table();
  CHECK(t.h[3][1].total == 2);
  CHECK(t.h[3][2].total == 1);
  // the p = d column is the Betti table
  auto res = minimal_resolution(m, 2, t.jmax);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= t.jmax; ++j) CHECK(t.at(3, i, j) == res.betti.at(i, j));
  }
  // h_1(1) = h_1(0) + alpha_1 - dim Im(phi_{1,0})
  long im = 0;
  for (long v : t.image[1][1]) im += v;
  auto a1 = alpha_oracle(ideal, forms, 1, t.jmax);
  long alpha1 = 0;
  for (long v : a1) alpha1 += v;
  CHECK(alpha1 == 1);
  CHECK(t.h[1][1].total == 0 + alpha1 - im);
  CHECK(kh.proper_sequence_check().proper);
}

TEST_CASE("alpha and H_0 against Hilbert functions") {
  Gen gen(21);
  std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}, {3, 2}};
  for (int trial = 0; trial < 9; ++trial) {
    auto [n, c] = shapes[static_cast<std::size_t>(trial % 3)];
    auto pres = build_presentation(n, c);
    std::vector<Polynomial> gens;
    for (int k = gen.integer(1, 2); k > 0; --k) gens.push_back(Polynomial::term(pres->S(), gen.monomial_of_degree(pres->d, gen.integer(1, 2))));
    auto ideal = veronese_ideal(pres, gens);
    auto forms = generic_linear_forms(*pres, pres->d, static_cast<std::uint64_t>(trial));
    KoszulHomology kh(quotient_module(ideal), forms, 1, 5);
    const auto& t = kh.table();
    CAPTURE(trial);
    for (int p = 0; p <= pres->d; ++p) {
      auto hf = veronese_hilbert(with_forms(ideal, forms, p), 0, 5);
      for (int j = 0; j <= 5; ++j) CHECK(t.at(p, 0, j) == hf.at(j));
    }
    for (int p = 1; p <= pres->d; ++p) {
      CHECK(t.alpha[static_cast<std::size_t>(p)].dims == alpha_oracle(ideal, forms, p, 5));
      // injectivity on R^(c)/(y_<p) is alpha_p of the free module
      auto free_alpha = alpha_oracle(veronese_ideal(pres, {}), forms, p, 5);
      bool zero = std::all_of(free_alpha.begin(), free_alpha.end(), [](long v) { return v == 0; });
      CHECK(t.injective[static_cast<std::size_t>(p)] == zero);
      CHECK(t.injective[static_cast<std::size_t>(p)] == (p <= n));
    }
  }
}

TEST_CASE("exact-sequence recursion where y_p is injective") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 9);
  for (auto texts : std::vector<std::vector<const char*>>{{"t1^2", "t3^2"}, {"t2"}, {"t1", "t2^2"}}) {
    KoszulHomology kh(quotient_module(VI(pres, texts)), forms, 2);
    const auto& t = kh.table();
    for (int p = 1; p <= 3; ++p) {
      if (!t.injective[static_cast<std::size_t>(p)]) continue;
      for (const auto& row : t.residual[static_cast<std::size_t>(p)]) {
        for (long r : row) CHECK(r == 0);
      }
    }
  }
}

TEST_CASE("first-step variant omits the image of phi_1") {
  // the two residuals differ exactly by dim Im(phi_{1,p-1})_j
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 9);
  KoszulHomology kh(quotient_module(VI(pres, {"t1^2", "t3^2"})), forms, 2);
  const auto& t = kh.table();
  bool some_image = false;
  for (int p = 1; p <= 3; ++p) {
    for (int j = 0; j <= t.jmax; ++j) {
      auto pp = static_cast<std::size_t>(p);
      auto jj = static_cast<std::size_t>(j);
      CHECK(t.residual_first[pp][jj] - t.residual[pp][1][jj] == -t.image[pp][1][jj]);
      some_image = some_image || t.image[pp][1][jj] != 0;
    }
  }
  CHECK(some_image);
}

TEST_CASE("Tor against the residue field is killed by the maximal ideal") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 4);
  for (auto texts : std::vector<std::vector<const char*>>{{"t1^2", "t3^2"}, {"t1", "t3"}, {"t2^2"}}) {
    KoszulHomology kh(quotient_module(VI(pres, texts)), forms, 2);
    for (int a = 1; a <= 2; ++a) CHECK(kh.annihilated(a, 3));
  }
}

TEST_CASE("upper bounds and the non-proper witness") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 2);
  KoszulHomology kh(quotient_module(VI(pres, {"t1^2", "t3^2"})), forms, 2);
  auto report = kh.max_betti_check();
  CHECK(report.bounds_hold);
  for (const auto& cell : report.cells) {
    if (cell.equal) {
      CHECK(cell.maps_vanish);
      CHECK(cell.annihilated);
    }
  }
  CHECK_FALSE(report.maximal_betti);
  CHECK_FALSE(report.annihilation);
  auto proper = kh.proper_sequence_check();
  CHECK_FALSE(proper.proper);
  REQUIRE(proper.failure.has_value());
  CHECK(proper.failure->first >= 1);
  // the failing map is nonzero in the table as well
  CHECK_FALSE(kh.map_vanishes(proper.failure->first, proper.failure->second));
}

TEST_CASE("bound cells for the parameter ideal") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 5);
  KoszulHomology kh(quotient_module(VI(pres, {"t1", "t3"})), forms, 2);
  auto report = kh.max_betti_check();
  CHECK(report.bounds_hold);
  for (const auto& cell : report.cells) {
    CHECK(cell.bound == max_betti_bound(kh.table(), cell.i, cell.p));
    if (cell.p <= 2) CHECK(cell.equal);
  }
}

TEST_CASE("determinism and preconditions") {
  auto pres = build_presentation(2, 2);
  auto forms = generic_linear_forms(*pres, pres->d, 8);
  auto m = quotient_module(VI(pres, {"t2"}));
  auto a = koszul_table(m, forms, 2);
  auto b = koszul_table(m, forms, 2);
  CHECK(a.beta == b.beta);
  CHECK(a.image == b.image);
  CHECK_THROWS_AS(koszul_table(m, generic_linear_forms(*pres, 2, 8), 2), PreconditionError);
}
