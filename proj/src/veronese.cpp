#include "vcwl/veronese.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "vcwl/error.hpp"
#include "vcwl/graded.hpp"
#include "vcwl/random.hpp"

namespace vcwl {

namespace {

struct MonomialIndex {
  std::vector<Monomial> basis;
  std::unordered_map<Monomial, int, MonomialHash> index;

  MonomialIndex(int nvars, int degree) : basis(monomials_of_degree(nvars, degree)) {
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  }

  int dim() const { return static_cast<int>(basis.size()); }

  SparseVector vec(const Polynomial& f) const {
    SparseVector v;
    for (const auto& [m, c] : f.terms()) v.emplace_back(index.at(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  Polynomial poly(const SparseVector& v, Ring ring) const {
    Polynomial p(ring);
    for (const auto& [i, c] : v) p.add_term(basis[static_cast<std::size_t>(i)], c);
    return p;
  }
};

void require_veronese(const GradedIdeal& ideal, const char* op) {
  if (ideal.tag != RingTag::Veronese || !ideal.pres) {
    throw PreconditionError(std::string(op) + ": expected an ideal of the Veronese ring");
  }
}

}  // namespace

Polynomial VeronesePresentation::phi(const Polynomial& f) const {
  if (!(f.ring() == S())) throw DimensionError("phi: argument not in " + S().name());
  std::vector<Polynomial> imgs;
  imgs.reserve(images.size());
  for (const auto& a : images) imgs.push_back(Polynomial::term(R(), a));
  return f.substitute(imgs, R());
}

Monomial VeronesePresentation::lift_monomial(const Monomial& m) const {
  if (m.nvars() != n) throw DimensionError("lift: monomial not in " + R().name());
  if (m.degree() % c != 0) throw GradingError("lift: degree " + std::to_string(m.degree()) + " not divisible by c");
  Monomial out(d);
  Monomial chunk(n);
  int filled = 0;
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < m[v]; ++e) {
      chunk.set(v, chunk[v] + 1);
      if (++filled == c) {
        auto it = std::find(images.begin(), images.end(), chunk);
        int k = static_cast<int>(it - images.begin());
        out.set(k, out[k] + 1);
        chunk = Monomial(n);
        filled = 0;
      }
    }
  }
  return out;
}

Polynomial VeronesePresentation::lift(const Polynomial& g) const {
  if (!(g.ring() == R())) throw DimensionError("lift: argument not in " + R().name());
  Polynomial out(S());
  for (const auto& [m, coef] : g.terms()) out.add_term(lift_monomial(m), coef);
  return reduce(out);
}

std::shared_ptr<const VeronesePresentation> build_presentation(int n, int c) {
  if (n < 1 || c < 1) throw PreconditionError("presentation needs n >= 1 and c >= 1");
  if (n > Monomial::kMaxVars) throw DimensionError("too many variables");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const VeronesePresentation>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, c});
    if (it != cache.end()) return it->second;
  }

  auto pres = std::make_shared<VeronesePresentation>();
  pres->n = n;
  pres->c = c;
  auto dc = degree_c_monomials(n, c);
  pres->d = dc.d;
  pres->images = dc.monomials;
  const int d = dc.d;
  if (n + d > Monomial::kMaxVars) throw DimensionError("presentation ring exceeds the variable limit");

  Ring joint = Ring::joint(n, d);
  std::vector<Polynomial> gens;
  for (int k = 0; k < d; ++k) {
    Monomial a(n + d);
    for (int v = 0; v < n; ++v) a.set(v, dc.monomials[static_cast<std::size_t>(k)][v]);
    gens.push_back(Polynomial::variable(joint, n + k) - Polynomial::term(joint, a));
  }
  std::vector<int> discard;
  for (int v = 0; v < n; ++v) discard.push_back(v);
  std::vector<Polynomial> kernel;
  for (const auto& g : eliminate(gens, discard)) {
    Polynomial q(Ring::S(d));
    for (const auto& [m, coef] : g.terms()) {
      Monomial t(d);
      for (int k = 0; k < d; ++k) t.set(k, m[n + k]);
      q.add_term(t, coef);
    }
    kernel.push_back(std::move(q));
  }
  std::vector<Polynomial> seed{Polynomial(Ring::S(d))};
  seed.insert(seed.end(), kernel.begin(), kernel.end());
  pres->kernel_gb = buchberger(seed, TermOrder::degrevlex(d));
  pres->kernel = minimal_generators(pres->kernel_gb.generators);
  for (const auto& q : pres->kernel) {
    if (!pres->phi(q).is_zero()) throw ConsistencyError("presentation kernel element " + q.to_string() + " not in ker phi");
  }

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(n, c), std::move(pres));
  return it->second;
}

bool GradedIdeal::is_monomial() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::optional<int> GradedIdeal::min_degree() const {
  std::optional<int> out;
  for (const auto& g : generators) {
    int e = *g.homogeneous_degree();
    if (!out || e < *out) out = e;
  }
  return out;
}

std::optional<int> GradedIdeal::max_degree() const {
  std::optional<int> out;
  for (const auto& g : generators) {
    int e = *g.homogeneous_degree();
    if (!out || e > *out) out = e;
  }
  return out;
}

GradedIdeal veronese_ideal(std::shared_ptr<const VeronesePresentation> pres, std::vector<Polynomial> gens) {
  GradedIdeal out;
  out.tag = RingTag::Veronese;
  for (auto& g : gens) {
    if (!(g.ring() == pres->S())) throw DimensionError("generator " + g.to_string() + " not in " + pres->S().name());
    if (!g.is_homogeneous()) throw GradingError("non-homogeneous generator " + g.to_string());
    auto r = pres->reduce(g);
    if (!r.is_zero()) out.generators.push_back(std::move(r));
  }
  out.pres = std::move(pres);
  return out;
}

GradedIdeal r_ideal(std::vector<Polynomial> gens) {
  GradedIdeal out;
  out.tag = RingTag::R;
  for (auto& g : gens) {
    if (!g.is_homogeneous()) throw GradingError("non-homogeneous generator " + g.to_string());
    if (!g.is_zero()) out.generators.push_back(std::move(g));
  }
  return out;
}

GradedIdeal expand(const GradedIdeal& ideal) {
  require_veronese(ideal, "expand");
  GradedIdeal out;
  out.tag = RingTag::R;
  for (const auto& g : ideal.generators) {
    auto img = ideal.pres->phi(g);
    if (!img.is_zero()) out.generators.push_back(std::move(img));
  }
  return out;
}

namespace {

/// Degreewise minimal generators of the R^(c)-ideal whose degree-j piece is
/// `piece(j)` (a spanning set of a subspace of R_{cj}), for j = 0..bound.
template <class Piece>
std::vector<Polynomial> minimal_generators_by_degree(const VeronesePresentation& pres, int bound, Piece piece) {
  struct Found {
    int degree;
    Polynomial f;
  };
  std::vector<Found> found;
  std::vector<Polynomial> out;
  for (int j = 0; j <= bound; ++j) {
    MonomialIndex idx(pres.n, pres.c * j);
    Echelon lower(idx.dim());
    for (const auto& [e, f] : found) {
      for (const auto& u : monomials_of_degree(pres.n, pres.c * (j - e))) lower.insert(idx.vec(f.multiply(u)));
    }
    Echelon fresh(idx.dim());
    for (const auto& b : piece(j)) {
      auto r = lower.reduce(idx.vec(b));
      if (!r.empty()) fresh.insert(r);
    }
    auto rows = fresh.rows();
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    for (const auto& row : rows) {
      auto f = idx.poly(row, pres.R());
      out.push_back(pres.lift(f));
      found.push_back({j, std::move(f)});
    }
  }
  return out;
}

}  // namespace

Contraction contract(const GradedIdeal& j, std::shared_ptr<const VeronesePresentation> pres) {
  if (j.tag != RingTag::R) throw PreconditionError("contract: expected an ideal of R");
  for (const auto& g : j.generators) {
    if (!(g.ring() == pres->R())) throw DimensionError("contract: generator not in " + pres->R().name());
  }
  Contraction out;
  out.max_generator_degree = j.max_degree().value_or(0);
  out.veronese_bound = (out.max_generator_degree + pres->c - 1) / pres->c;
  std::vector<Polynomial> gens;
  if (!j.is_zero()) {
    gens = minimal_generators_by_degree(*pres, out.veronese_bound,
                                        [&](int k) { return graded_piece(j.generators, pres->c * k); });
  }
  out.ideal.tag = RingTag::Veronese;
  out.ideal.generators = std::move(gens);
  out.ideal.pres = std::move(pres);
  return out;
}

std::vector<Polynomial> veronese_piece(const GradedIdeal& ideal, int j) {
  require_veronese(ideal, "veronese_piece");
  if (j < 0) return {};
  std::vector<Polynomial> images;
  for (const auto& g : ideal.generators) images.push_back(ideal.pres->phi(g));
  if (images.empty()) return {};
  return graded_piece(images, ideal.pres->c * j);
}

GradedIdeal minimalize(const GradedIdeal& ideal) {
  require_veronese(ideal, "minimalize");
  GradedIdeal out;
  out.tag = RingTag::Veronese;
  out.pres = ideal.pres;
  if (!ideal.is_zero()) {
    out.generators = minimal_generators_by_degree(*ideal.pres, *ideal.max_degree(),
                                                  [&](int k) { return veronese_piece(ideal, k); });
  }
  return out;
}

HilbertFunction veronese_hilbert(const GradedIdeal& ideal, int first, int last) {
  require_veronese(ideal, "veronese_hilbert");
  HilbertFunction hf;
  hf.first = first;
  for (int j = first; j <= last; ++j) {
    if (j < 0) {
      hf.values.push_back(0);
      continue;
    }
    long total = binomial(ideal.pres->n + ideal.pres->c * j - 1, ideal.pres->n - 1).get_si();
    hf.values.push_back(total - static_cast<long>(veronese_piece(ideal, j).size()));
  }
  return hf;
}

bool is_borel(const GradedIdeal& ideal) {
  if (ideal.tag != RingTag::R) throw PreconditionError("is_borel: expected an ideal of R");
  if (!ideal.is_monomial()) throw PreconditionError("is_borel: generators must be monomials");
  std::vector<Monomial> mons;
  for (const auto& g : ideal.generators) mons.push_back(g.terms().begin()->first);
  mons = minimalize_monomials(std::move(mons));
  for (const auto& m : mons) {
    for (int j = 1; j < m.nvars(); ++j) {
      if (m[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial e = m;
        e.set(j, m[j] - 1);
        e.set(i, m[i] + 1);
        if (!monomial_ideal_contains(mons, e)) return false;
      }
    }
  }
  return true;
}

bool is_borel_veronese(const GradedIdeal& ideal) {
  require_veronese(ideal, "is_borel_veronese");
  if (!ideal.is_monomial()) throw PreconditionError("is_borel_veronese: generators must be monomials");
  return is_borel(expand(ideal));
}

GradedIdeal component_ideal(const GradedIdeal& ideal, int j) {
  if (ideal.tag == RingTag::R) return r_ideal(j < 0 ? std::vector<Polynomial>{} : graded_piece(ideal.generators, j));
  require_veronese(ideal, "component_ideal");
  std::vector<Polynomial> gens;
  for (const auto& f : veronese_piece(ideal, j)) gens.push_back(ideal.pres->lift(f));
  return veronese_ideal(ideal.pres, std::move(gens));
}

GradedIdeal irrelevant_ideal(std::shared_ptr<const VeronesePresentation> pres) {
  std::vector<Polynomial> gens;
  for (int k = 0; k < pres->d; ++k) gens.push_back(Polynomial::variable(pres->S(), k));
  return veronese_ideal(std::move(pres), std::move(gens));
}

bool same_ideal(const GradedIdeal& a, const GradedIdeal& b) {
  require_veronese(a, "same_ideal");
  require_veronese(b, "same_ideal");
  int top = std::max(a.max_degree().value_or(0), b.max_degree().value_or(0));
  for (int j = 0; j <= top; ++j) {
    if (veronese_piece(a, j) != veronese_piece(b, j)) return false;
  }
  return true;
}

GenericForms generic_linear_forms(const VeronesePresentation& pres, int p, std::uint64_t seed, long bound) {
  if (p < 0 || p > pres.d) throw PreconditionError("generic_linear_forms: need 0 <= p <= d");
  if (bound < 1) throw PreconditionError("generic_linear_forms: bound must be positive");
  constexpr int kRetries = 5;
  SeededRng rng(seed);
  GenericForms out;
  out.seed = seed;
  out.bound = bound;
  const auto d = static_cast<std::size_t>(pres.d);
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) m(r, k) = Rational(rng.uniform(-bound, bound));
    }
    if (m.rank() == d) {
      out.coefficients = Matrix(static_cast<std::size_t>(p), d);
      for (std::size_t r = 0; r < static_cast<std::size_t>(p); ++r) {
        Polynomial y(pres.S());
        for (std::size_t k = 0; k < d; ++k) {
          out.coefficients(r, k) = m(r, k);
          y.add_term(Monomial::variable(pres.d, static_cast<int>(k), 1), m(r, k));
        }
        out.forms.push_back(std::move(y));
      }
      return out;
    }
    ++out.redraws;
  }
  throw GenericityError("generic_linear_forms: no full-rank draw after " + std::to_string(kRetries) + " retries");
}

}  // namespace vcwl
