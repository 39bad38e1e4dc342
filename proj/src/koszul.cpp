#include "vcwl/koszul.hpp"

#include <algorithm>

#include "vcwl/error.hpp"

namespace vcwl {

namespace {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

GradedDims graded(std::vector<long> dims) {
  GradedDims g;
  for (long v : dims) g.total += v;
  g.stabilized = dims.empty() || dims.back() == 0;
  g.dims = std::move(dims);
  return g;
}

/// y injective from degree k to k+1 for every k < top.
bool injective_on(const ModuleQuotient& q, const Polynomial& y, int top) {
  for (int k = 0; k < top; ++k) {
    int n = q.dim(k);
    Echelon e(q.dim(k + 1));
    for (int s = 0; s < n; ++s) e.insert(q.multiply(y, 1, k, s));
    if (e.rank() != n) return false;
  }
  return true;
}

}  // namespace

long KoszulHomologyTable::at(int p, int i, int j) const {
  if (p < 0 || p > d || i < 0 || i > imax || j < 0 || j > jmax) return 0;
  return beta[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::optional<std::array<int, 3>> KoszulHomologyTable::stated_recursion_failure() const {
  for (int p = 1; p <= d; ++p) {
    for (int i = 1; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        long r = i == 1 ? residual_first[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)]
                        : residual[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (r != 0) return std::array{p, i, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> KoszulHomologyTable::exact_recursion_failure() const {
  for (int p = 1; p <= d; ++p) {
    for (int i = 1; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        if (residual[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          return std::array{p, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

int default_koszul_window(const GradedModule& m, int imax, std::uint64_t seed) {
  return imax + regularity_bound(m, seed).bound + m.pres->n + 1;
}

KoszulHomology::KoszulHomology(const GradedModule& m, GenericForms forms, int imax, std::optional<int> jmax,
                               std::uint64_t seed)
    : forms_(std::move(forms)) {
  m.validate();
  const auto& pres = m.pres;
  const int d = pres->d;
  if (static_cast<int>(forms_.forms.size()) != d) throw PreconditionError("Koszul homology needs d generic forms");
  if (imax < 0) throw PreconditionError("imax must be nonnegative");
  const int top = jmax ? *jmax : default_koszul_window(m, imax, seed);
  for (const auto& y : forms_.forms) forms_x_.push_back(pres->phi(y));

  resolution_ = minimal_resolution(m, imax + 1, top, seed);
  auto alg = veronese_algebra(pres);
  std::vector<std::shared_ptr<const ModuleQuotient>> quotients;
  for (int p = 0; p <= d; ++p) {
    GradedModule n = p == 0 ? free_module(pres, {0})
                            : quotient_module(veronese_ideal(pres, std::vector<Polynomial>(forms_.forms.begin(),
                                                                                           forms_.forms.begin() + p)));
    quotients.push_back(std::make_shared<const ModuleQuotient>(alg, std::move(n)));
    complexes_.push_back(std::make_unique<TensorComplex>(resolution_.resolution, quotients.back()));
  }

  auto& t = table_;
  t.d = d;
  t.imax = imax;
  t.jmax = top;
  t.seed = forms_.seed;
  const auto P = static_cast<std::size_t>(d + 1);
  const auto I = static_cast<std::size_t>(imax + 1);
  const auto J = static_cast<std::size_t>(top + 1);
  t.beta.assign(P, std::vector<std::vector<long>>(I, std::vector<long>(J, 0)));
  t.image.assign(P, std::vector<std::vector<long>>(I, std::vector<long>(J, 0)));
  t.residual.assign(P, std::vector<std::vector<long>>(I, std::vector<long>(J, 0)));
  t.residual_first.assign(P, std::vector<long>(J, 0));
  t.injective.assign(P, false);
  t.alpha.assign(P, GradedDims{});
  t.h.assign(P, std::vector<GradedDims>(I));

  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t j = 0; j < J; ++j) {
        t.beta[p][i][j] = complex(static_cast<int>(p)).homology(static_cast<int>(i), static_cast<int>(j)).dim();
      }
      t.h[p][i] = graded(t.beta[p][i]);
    }
  }
  for (int p = 1; p <= d; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    const auto& y = form(p);
    for (int i = 0; i <= imax; ++i) {
      for (int j = 1; j <= top; ++j) {
        t.image[pp][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = complex(p - 1).image_dim(y, i, j);
      }
    }
    std::vector<long> alpha;
    for (int j = 0; j < top; ++j) alpha.push_back(t.at(p - 1, 0, j) - t.image[pp][0][static_cast<std::size_t>(j + 1)]);
    t.alpha[pp] = graded(std::move(alpha));
    t.injective[pp] = injective_on(*quotients[pp - 1], y, top);

    auto im = [&](int i, int j) { return t.image[pp][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int j = 0; j <= top; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      for (int i = 1; i <= imax; ++i) {
        long rhs = t.at(p - 1, i, j) + t.at(p - 1, i - 1, j - 1) - im(i, j) - im(i - 1, j);
        t.residual[pp][static_cast<std::size_t>(i)][jj] = t.at(p, i, j) - rhs;
        if (t.injective[pp] && t.residual[pp][static_cast<std::size_t>(i)][jj] != 0) {
          throw ConsistencyError("long exact sequence violated at p=" + std::to_string(p) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
        }
      }
      if (imax >= 1) {
        long rhs = t.at(p - 1, 1, j) + t.at(p - 1, 0, j - 1) - t.at(p - 1, 0, j) + t.at(p, 0, j);
        t.residual_first[pp][jj] = t.at(p, 1, j) - rhs;
      }
    }
  }
}

bool KoszulHomology::map_vanishes(int a, int b) const {
  const auto& img = table_.image.at(static_cast<std::size_t>(b + 1)).at(static_cast<std::size_t>(a));
  return std::all_of(img.begin(), img.end(), [](long v) { return v == 0; });
}

bool KoszulHomology::annihilated(int a, int b) const {
  const auto& tc = complex(b);
  auto alg = veronese_algebra(resolution_.resolution.pres);
  for (const auto& u : alg->basis(1).monomials) {
    auto x = Polynomial::term(alg->pres().R(), u);
    for (int j = 0; j < table_.jmax; ++j) {
      if (tc.non_annihilated(x, a, j)) return false;
    }
  }
  return true;
}

long max_betti_bound(const KoszulHomologyTable& t, int i, int p) {
  long s = 0;
  for (int j = 1; j <= p - i + 1; ++j) s += binom(p - j, i - 1) * t.alpha.at(static_cast<std::size_t>(j)).total;
  return s;
}

MaxBettiReport KoszulHomology::max_betti_check() const {
  const auto& t = table_;
  MaxBettiReport out;
  out.bounds_hold = out.equivalence_holds = out.maximal_betti = out.annihilation = true;
  for (int i = 1; i <= t.imax; ++i) {
    for (int p = 1; p <= t.d; ++p) {
      BettiBoundCell cell;
      cell.i = i;
      cell.p = p;
      cell.h = t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)].total;
      cell.bound = max_betti_bound(t, i, p);
      cell.holds = cell.h <= cell.bound;
      cell.equal = cell.h == cell.bound;
      cell.stabilized = t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)].stabilized;
      for (int j = 1; j <= p - i + 1; ++j) cell.stabilized = cell.stabilized && t.alpha[static_cast<std::size_t>(j)].stabilized;
      cell.maps_vanish = cell.annihilated = true;
      for (int b = 1; b <= p - 1; ++b) {
        for (int a = std::max(i - p + b, 1); a <= i; ++a) {
          cell.maps_vanish = cell.maps_vanish && map_vanishes(a, b);
          cell.annihilated = cell.annihilated && annihilated(a, b);
        }
      }
      out.bounds_hold = out.bounds_hold && cell.holds;
      out.equivalence_holds = out.equivalence_holds && cell.equal == cell.maps_vanish && cell.equal == cell.annihilated;
      if (p == t.d) out.maximal_betti = out.maximal_betti && cell.equal;
      out.cells.push_back(cell);
    }
  }
  for (int a = 1; a <= t.imax; ++a) {
    for (int b = 1; b <= t.d; ++b) out.annihilation = out.annihilation && annihilated(a, b);
  }
  return out;
}

ProperSequenceReport KoszulHomology::proper_sequence_check() const {
  ProperSequenceReport out;
  for (int p = 0; p < table_.d; ++p) {
    for (int i = 1; i <= table_.imax; ++i) {
      for (int j = 0; j < table_.jmax; ++j) {
        if (complex(p).non_annihilated(form(p + 1), i, j)) {
          out.failure = std::make_pair(i, p);
          out.failure_degree = j;
          return out;
        }
      }
    }
  }
  out.proper = true;
  return out;
}

KoszulHomologyTable koszul_table(const GradedModule& m, const GenericForms& forms, int imax, std::optional<int> jmax) {
  return KoszulHomology(m, forms, imax, jmax, forms.seed).table();
}

MaxBettiReport max_betti_check(const GradedModule& m, const GenericForms& forms, int imax, std::optional<int> jmax) {
  return KoszulHomology(m, forms, imax, jmax, forms.seed).max_betti_check();
}

ProperSequenceReport proper_sequence_check(const GradedModule& m, const GenericForms& forms, int imax,
                                           std::optional<int> jmax) {
  return KoszulHomology(m, forms, imax, jmax, forms.seed).proper_sequence_check();
}

}  // namespace vcwl
