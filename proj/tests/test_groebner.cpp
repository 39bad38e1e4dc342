#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "support.hpp"
#include "vcwl/error.hpp"
#include "vcwl/graded.hpp"
#include "vcwl/groebner.hpp"
#include "vcwl/matrix.hpp"

using namespace vcwl;
using vcwl::testing::Gen;
using vcwl::testing::P;

namespace {

const Ring S3 = Ring::S(3);
const Ring R2 = Ring::R(2);

/// Coordinates of degree-j elements of ring/(gb) on standard monomials.
struct StandardCoords {
  std::vector<Monomial> basis;
  std::map<Monomial, int> index;
};

StandardCoords standard(const GroebnerBasis& gb, int nvars, int j) {
  StandardCoords sc;
  auto lms = gb.leading_monomials();
  for (const auto& m : monomials_of_degree(nvars, j)) {
    if (!monomial_ideal_contains(lms, m)) {
      sc.index.emplace(m, static_cast<int>(sc.basis.size()));
      sc.basis.push_back(m);
    }
  }
  return sc;
}

/// Oracle: dimension of the degree-j kernel of (a_k) -> sum a_k f_k over
/// ring/(quotient), for a rank-1 target, by plain linear algebra.
int syzygy_kernel_dim(const std::vector<Polynomial>& cols, const GroebnerBasis& qgb, int nvars, int j) {
  auto target = standard(qgb, nvars, j);
  std::vector<SparseVector> images;
  for (const auto& f : cols) {
    int e = *f.homogeneous_degree();
    if (j - e < 0) continue;
    for (const auto& u : standard(qgb, nvars, j - e).basis) {
      auto nf = normal_form(f.multiply(u), qgb);
      SparseVector v;
      for (const auto& [m, c] : nf.terms()) v.emplace_back(target.index.at(m), c);
      images.push_back(v);
    }
  }
  return static_cast<int>(kernel_of_columns(images, static_cast<int>(target.basis.size())).size());
}

/// Degree-j dimension of the submodule generated by syzygy vectors.
int generated_dim(const ModulePresentation& syz, const GroebnerBasis& qgb, int nvars, int j) {
  int m = syz.rank;
  std::vector<StandardCoords> coords;
  std::vector<int> offset;
  int total = 0;
  for (int k = 0; k < m; ++k) {
    coords.push_back(standard(qgb, nvars, j - syz.shifts[static_cast<std::size_t>(k)]));
    offset.push_back(total);
    total += static_cast<int>(coords.back().basis.size());
  }
  Echelon ech(total);
  for (std::size_t g = 0; g < syz.columns.size(); ++g) {
    int deg = *syz.column_degree(g);
    if (j < deg) continue;
    for (const auto& u : standard(qgb, nvars, j - deg).basis) {
      SparseVector v;
      for (int k = 0; k < m; ++k) {
        auto nf = normal_form(syz.columns[g][static_cast<std::size_t>(k)].multiply(u), qgb);
        for (const auto& [mono, c] : nf.terms()) v.emplace_back(offset[static_cast<std::size_t>(k)] + coords[static_cast<std::size_t>(k)].index.at(mono), c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(v);
    }
  }
  return ech.rank();
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto single = buchberger(std::vector{P("t2^2 - t1*t3", S3)}, TermOrder::degrevlex(3));
  REQUIRE(single.generators.size() == 1);
  CHECK(single.generators[0] == P("t2^2 - t1*t3", S3));

  // x2*(x1^2 - x2^2) - x1*(x1*x2) = -x2^3
  auto gb = buchberger(std::vector{P("x1^2 - x2^2", R2), P("x1*x2", R2)}, TermOrder::lex(2));
  std::vector<Polynomial> expect = {P("x2^3", R2), P("x1*x2", R2), P("x1^2 - x2^2", R2)};
  CHECK(gb.generators == expect);

  auto lin = buchberger(std::vector{P("x1", R2), P("x2", R2)}, TermOrder::degrevlex(2));
  CHECK(lin.generators == std::vector{P("x2", R2), P("x1", R2)});
}

TEST_CASE("reduced basis is independent of generator order and scaling") {
  Gen gen(21);
  Ring r = Ring::R(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen.homogeneous(r, 3, gen.integer(2, 3)));
    auto a = buchberger(gens, TermOrder::degrevlex(3));
    std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
    shuffled.push_back(gens[0] * Rational(3) + gens[1] * gens[2]);
    shuffled[0] *= Rational(-7, 2);
    auto b = buchberger(shuffled, TermOrder::degrevlex(3));
    CHECK(a.generators == b.generators);
    // every S-polynomial reduces to zero: members reduce to zero
    for (const auto& g : gens) CHECK(normal_form(g, a).is_zero());
    // no leading monomial divides another
    auto lms = a.leading_monomials();
    for (std::size_t i = 0; i < lms.size(); ++i) {
      for (std::size_t j = 0; j < lms.size(); ++j) {
        if (i != j) CHECK_FALSE(lms[i].divides(lms[j]));
      }
    }
  }
}

TEST_CASE("normal_form") {
  auto gb = buchberger(std::vector{P("t2^2 - t1*t3", S3)}, TermOrder::degrevlex(3));
  CHECK(normal_form(P("t2^2", S3), gb) == P("t1*t3", S3));
  CHECK(normal_form(P("1", S3), gb) == P("1", S3));
  CHECK_THROWS_AS(normal_form(P("x1", R2), gb), DimensionError);

  Gen gen(4);
  Ring r = Ring::R(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens = {gen.homogeneous(r, 3, 2), gen.homogeneous(r, 2, 2)};
    auto g = buchberger(gens, TermOrder::degrevlex(3));
    auto member = gens[0] * gen.homogeneous(r, 2, 1) + gens[1] * gen.homogeneous(r, 3, 2);
    CHECK(normal_form(member, g).is_zero());
    // the remainder has no term divisible by a leading monomial
    auto rem = normal_form(gen.homogeneous(r, 6, 3), g);
    for (const auto& [m, c] : rem.terms()) CHECK_FALSE(monomial_ideal_contains(g.leading_monomials(), m));
  }
}

TEST_CASE("initial_ideal") {
  auto in = initial_ideal(std::vector{P("t2^2 - t1*t3", S3)}, TermOrder::degrevlex(3));
  CHECK(in == std::vector{Monomial{0, 2, 0}});
  auto mono = initial_ideal(std::vector{P("x1^2", R2), P("x1*x2^3", R2)}, TermOrder::lex(2));
  CHECK(mono == std::vector{Monomial{2, 0}, Monomial{1, 3}});
  auto lexin = initial_ideal(std::vector{P("x1^2 - x2^2", R2), P("x1*x2", R2)}, TermOrder::lex(2));
  CHECK(lexin == std::vector{Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 3}});

  // invariance under change of generating set
  Gen gen(8);
  Ring r = Ring::R(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto f = gen.homogeneous(r, 3, 2), g = gen.homogeneous(r, 3, 2);
    auto a = initial_ideal(std::vector{f, g}, TermOrder::degrevlex(3));
    auto b = initial_ideal(std::vector{f + g, f - g * Rational(2)}, TermOrder::degrevlex(3));
    CHECK(a == b);
  }
}

TEST_CASE("eliminate") {
  Ring joint = Ring::joint(2, 3);
  std::vector<Polynomial> gens = {P("t1 - x1^2", joint), P("t2 - x1*x2", joint), P("t3 - x2^2", joint)};
  auto kernel = eliminate(gens, std::vector<int>{0, 1});
  REQUIRE(kernel.size() == 1);
  CHECK((kernel[0] == P("t2^2 - t1*t3", joint) || kernel[0] == P("t1*t3 - t2^2", joint)));

  Ring j1 = Ring::joint(1, 1);
  CHECK(eliminate(std::vector{P("t1 - x1", j1)}, std::vector<int>{0}).empty());

  // (n=3, c=2): the degree-2 part of the kernel has dim 21 - 15 = 6
  Ring j3 = Ring::joint(3, 6);
  auto dc = degree_c_monomials(3, 2);
  std::vector<Polynomial> pres;
  for (int i = 0; i < 6; ++i) {
    Monomial m(9);
    for (int v = 0; v < 3; ++v) m.set(v, dc.monomials[static_cast<std::size_t>(i)][v]);
    pres.push_back(Polynomial::variable(j3, 3 + i) - Polynomial::term(j3, m));
  }
  auto k3 = eliminate(pres, std::vector<int>{0, 1, 2});
  CHECK(k3.size() >= 6);
  for (const auto& q : k3) CHECK(q.homogeneous_degree() == 2);
  CHECK(graded_piece(k3, 2).size() == 6);
}

TEST_CASE("hilbert_function") {
  auto q = std::vector{P("t2^2 - t1*t3", S3)};
  auto hf = hilbert_function({}, q, S3, 0, 3);
  CHECK(hf.values == std::vector<long>{1, 3, 5, 7});
  auto hr = hilbert_function(std::vector{P("x1", R2)}, {}, R2, 0, 2);
  CHECK(hr.values == std::vector<long>{1, 1, 1});
  auto hq = hilbert_function(std::vector{P("t1", S3), P("t3", S3)}, q, S3, 0, 2);
  CHECK(hq.values == std::vector<long>{1, 1, 0});

  // equal to the Hilbert function of the initial ideal
  Gen gen(13);
  Ring r = Ring::R(3);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens = {gen.homogeneous(r, 3, 2), gen.homogeneous(r, 3, 3)};
    auto in = initial_ideal(gens, TermOrder::lex(3));
    CHECK(hilbert_function(gens, {}, r, 0, 6) == hilbert_function_monomial(in, 3, 0, 6));
  }
  CHECK_THROWS_AS(hilbert_function(std::vector{P("x1 + x2^2", R2)}, {}, R2, 0, 2), GradingError);
}

TEST_CASE("syzygies") {
  auto order = TermOrder::degrevlex(3);
  // one nonzerodivisor in a domain
  ModulePresentation one{S3, 1, {0}, {{P("t1 + t2", S3)}}, {}};
  CHECK(syzygies(one, order).columns.empty());

  // Koszul pair over R
  ModulePresentation kos{R2, 1, {0}, {{P("x1", R2)}, {P("x2", R2)}}, {}};
  auto ks = syzygies(kos, TermOrder::degrevlex(2));
  REQUIRE(ks.columns.size() == 1);
  auto v = ks.columns[0];
  if (v[0].leading_term(TermOrder::degrevlex(2)).second < 0) {
    for (auto& e : v) e = -e;
  }
  CHECK(v == std::vector{P("x2", R2), P("-x1", R2)});
  CHECK(ks.shifts == std::vector<int>{1, 1});

  // (t1, t3) over S/(t2^2 - t1 t3)
  std::vector<Polynomial> q = {P("t2^2 - t1*t3", S3)};
  ModulePresentation quo{S3, 1, {0}, {{P("t1", S3)}, {P("t3", S3)}}, q};
  auto syz = syzygies(quo, order);
  auto qgb = buchberger(q, order);
  for (const auto& col : syz.columns) {
    auto combo = col[0] * P("t1", S3) + col[1] * P("t3", S3);
    CHECK(normal_form(combo, qgb).is_zero());
  }
  REQUIRE(!syz.columns.empty());
  CHECK(*syz.column_degree(0) == 2);
  for (int j = 1; j <= 4; ++j) {
    CHECK(generated_dim(syz, qgb, 3, j) == syzygy_kernel_dim({P("t1", S3), P("t3", S3)}, qgb, 3, j));
  }
  CHECK(generated_dim(syz, qgb, 3, 2) == 1);
}

TEST_CASE("syzygy completeness on random columns") {
  Gen gen(17);
  auto order = TermOrder::degrevlex(3);
  std::vector<Polynomial> q = {P("t2^2 - t1*t3", S3)};
  auto qgb = buchberger(q, order);
  auto empty = buchberger(std::vector{Polynomial(S3)}, order);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> cols = {gen.homogeneous(S3, 2, 1), gen.homogeneous(S3, 2, 2), gen.homogeneous(S3, 1, 2)};
    if (std::any_of(cols.begin(), cols.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
    for (bool use_q : {false, true}) {
      ModulePresentation pres{S3, 1, {0}, {}, use_q ? q : std::vector<Polynomial>{}};
      for (const auto& c : cols) pres.columns.push_back({c});
      auto syz = syzygies(pres, order);
      const auto& base = use_q ? qgb : empty;
      for (int j = 1; j <= 5; ++j) {
        CHECK(generated_dim(syz, base, 3, j) == syzygy_kernel_dim(cols, base, 3, j));
      }
    }
  }
}
