#include "vcwl/resolution.hpp"

#include <algorithm>

#include "vcwl/error.hpp"
#include "vcwl/graded.hpp"

namespace vcwl {

namespace {

SparseVector from_map(const std::map<int, Rational>& acc) {
  SparseVector out;
  for (const auto& [i, c] : acc) {
    if (c != 0) out.emplace_back(i, c);
  }
  return out;
}

void sort_vector(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

/// Block of a coordinate: last g with offset[g] <= c and a nonempty block.
int block_of(const FreeCoords& coords, int c) {
  auto it = std::upper_bound(coords.offset.begin(), coords.offset.end(), c);
  return static_cast<int>(it - coords.offset.begin()) - 1;
}

}  // namespace

const DegreeBasis& VeroneseAlgebra::basis(int j) const {
  static const DegreeBasis empty;
  if (j < 0) return empty;
  std::lock_guard lock(mutex_);
  auto it = cache_.find(j);
  if (it != cache_.end()) return *it->second;
  auto b = std::make_unique<DegreeBasis>();
  b->monomials = monomials_of_degree(pres_->n, pres_->c * j);
  for (std::size_t k = 0; k < b->monomials.size(); ++k) b->index.emplace(b->monomials[k], static_cast<int>(k));
  return *cache_.emplace(j, std::move(b)).first->second;
}

std::shared_ptr<const VeroneseAlgebra> veronese_algebra(std::shared_ptr<const VeronesePresentation> pres) {
  static std::mutex mutex;
  static std::map<const VeronesePresentation*, std::shared_ptr<const VeroneseAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(pres.get());
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const VeroneseAlgebra>(pres);
  cache.emplace(pres.get(), alg);
  return alg;
}

std::optional<int> GradedModule::relation_degree(std::size_t k) const {
  const auto& r = relations.at(k);
  for (std::size_t g = 0; g < r.size(); ++g) {
    if (!r[g].is_zero()) return generator_degrees[g] + *r[g].homogeneous_degree() / pres->c;
  }
  return std::nullopt;
}

void GradedModule::validate() const {
  if (!pres) throw PreconditionError("module without a presentation");
  for (int deg : generator_degrees) {
    if (deg < 0) throw GradingError("module generators must have nonnegative degree");
  }
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& r = relations[k];
    if (static_cast<int>(r.size()) != rank()) throw DimensionError("relation of the wrong length");
    std::optional<int> deg;
    for (std::size_t g = 0; g < r.size(); ++g) {
      if (!(r[g].ring() == pres->R())) throw DimensionError("relation entry not in " + pres->R().name());
      if (r[g].is_zero()) continue;
      auto e = r[g].homogeneous_degree();
      if (!e || *e % pres->c != 0) throw GradingError("relation entry " + r[g].to_string() + " is not in the Veronese ring");
      int total = generator_degrees[g] + *e / pres->c;
      if (deg && *deg != total) throw GradingError("relation " + std::to_string(k) + " is not homogeneous");
      deg = total;
      if (*e == 0) throw PreconditionError("relation " + std::to_string(k) + " has a unit entry; presentation not minimal");
    }
  }
}

GradedModule quotient_module(const GradedIdeal& ideal) {
  if (ideal.tag != RingTag::Veronese) throw PreconditionError("quotient_module: expected an ideal of the Veronese ring");
  GradedModule m;
  m.pres = ideal.pres;
  m.generator_degrees = {0};
  for (const auto& g : ideal.generators) {
    if (g.homogeneous_degree() == 0) throw PreconditionError("quotient_module: unit ideal");
    m.relations.push_back({ideal.pres->phi(g)});
  }
  return m;
}

GradedModule free_module(std::shared_ptr<const VeronesePresentation> pres, std::vector<int> degrees) {
  GradedModule m;
  m.pres = std::move(pres);
  m.generator_degrees = std::move(degrees);
  return m;
}

GradedModule residue_field(std::shared_ptr<const VeronesePresentation> pres) {
  return quotient_module(irrelevant_ideal(std::move(pres)));
}

FreeCoords free_coords(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j) {
  FreeCoords out;
  for (int deg : degrees) {
    out.offset.push_back(out.dim);
    out.dim += alg.dim(j - deg);
  }
  return out;
}

SparseVector element_vector(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j,
                            const ModuleElement& e) {
  auto coords = free_coords(alg, degrees, j);
  SparseVector v;
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (e[g].is_zero()) continue;
    const auto& basis = alg.basis(j - degrees[g]);
    for (const auto& [m, c] : e[g].terms()) v.emplace_back(coords.offset[g] + basis.index.at(m), c);
  }
  sort_vector(v);
  return v;
}

ModuleElement vector_element(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j,
                             const SparseVector& v) {
  auto coords = free_coords(alg, degrees, j);
  ModuleElement e(degrees.size(), Polynomial(alg.pres().R()));
  for (const auto& [i, c] : v) {
    int g = block_of(coords, i);
    e[static_cast<std::size_t>(g)].add_term(alg.basis(j - degrees[static_cast<std::size_t>(g)]).monomials[static_cast<std::size_t>(i - coords.offset[static_cast<std::size_t>(g)])], c);
  }
  return e;
}

namespace {

/// u * e for a monomial u of degree c*k, as a vector of F_{j} (j = deg e + k).
SparseVector shifted_vector(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j,
                            const FreeCoords& coords, const ModuleElement& e, const Monomial& u) {
  SparseVector v;
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (e[g].is_zero()) continue;
    const auto& basis = alg.basis(j - degrees[g]);
    for (const auto& [m, c] : e[g].terms()) v.emplace_back(coords.offset[g] + basis.index.at(m * u), c);
  }
  sort_vector(v);
  return v;
}

int element_degree(const VeroneseAlgebra& alg, const std::vector<int>& degrees, const ModuleElement& e) {
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (!e[g].is_zero()) return degrees[g] + *e[g].homogeneous_degree() / alg.pres().c;
  }
  throw ConsistencyError("zero module element has no degree");
}

/// dim of (A_p)_m for A/I: kernel of y_p on R^(c)/(I + (y_1..y_{p-1})),
/// from degree m to m + 1.
long colon_dim(const GradedIdeal& ideal, const GenericForms& forms, int p, int m) {
  const auto& pres = *ideal.pres;
  std::vector<Polynomial> gens = ideal.generators;
  gens.insert(gens.end(), forms.forms.begin(), forms.forms.begin() + (p - 1));
  auto u = veronese_ideal(ideal.pres, gens);
  auto low = veronese_piece(u, m);
  auto high = veronese_piece(u, m + 1);
  auto alg = veronese_algebra(ideal.pres);
  const auto& hb = alg->basis(m + 1);
  auto vec = [&](const Polynomial& f) {
    SparseVector v;
    for (const auto& [mono, c] : f.terms()) v.emplace_back(hb.index.at(mono), c);
    sort_vector(v);
    return v;
  };
  Echelon top(hb.dim());
  for (const auto& f : high) top.insert(vec(f));
  auto y = pres.phi(forms.forms[static_cast<std::size_t>(p - 1)]);
  Echelon images(hb.dim());
  for (const auto& mono : alg->basis(m).monomials) {
    auto r = top.reduce(vec(y.multiply(mono)));
    if (!r.empty()) images.insert(r);
  }
  return static_cast<long>(alg->dim(m)) - images.rank() - static_cast<long>(low.size());
}

}  // namespace

RegularityBound regularity_bound(const GradedModule& m, std::uint64_t seed) {
  m.validate();
  if (m.relations.empty()) {
    int top = 0;
    for (int deg : m.generator_degrees) top = std::max(top, deg);
    return {top, top, top};
  }
  if (m.rank() != 1) throw PreconditionError("regularity bound is available for cyclic and free modules only");
  const auto& pres = *m.pres;
  int shift = m.generator_degrees[0];
  std::vector<Polynomial> gens;
  for (const auto& r : m.relations) gens.push_back(pres.lift(r[0]));
  auto ideal = minimalize(veronese_ideal(m.pres, gens));

  // generation degree of J = lift(I) + Q over S
  int start = std::max(1, ideal.max_degree().value_or(0));
  if (!pres.kernel.empty()) {
    std::vector<Polynomial> linear;
    for (const auto& g : ideal.generators) {
      if (g.homogeneous_degree() == 1) linear.push_back(g);
    }
    bool absorbed = false;
    if (!linear.empty()) {
      auto prods = graded_piece(linear, 2);
      auto with_q = prods;
      with_q.insert(with_q.end(), pres.kernel.begin(), pres.kernel.end());
      absorbed = graded_piece(with_q, 2).size() == prods.size();
    }
    int qdeg = 0;
    for (const auto& q : pres.kernel) qdeg = std::max(qdeg, *q.homogeneous_degree());
    if (!absorbed || qdeg > 2) start = std::max(start, qdeg);
  }

  auto forms = generic_linear_forms(pres, pres.d, seed);
  constexpr int kSearch = 30;
  for (int deg = start; deg <= start + kSearch; ++deg) {
    bool ok = true;
    for (int p = 1; p <= pres.d && ok; ++p) ok = colon_dim(ideal, forms, p, deg) == 0;
    if (ok) return {deg - 1 + shift, start + shift, deg + shift};
  }
  throw GenericityError("regularity criterion did not hold within " + std::to_string(kSearch) + " degrees");
}

long BettiTable::at(int i, int j) const {
  if (i < 0 || i > imax || j < 0 || j > jmax) return 0;
  return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

long BettiTable::total(int i) const {
  long s = 0;
  for (int j = 0; j <= jmax; ++j) s += at(i, j);
  return s;
}

bool BettiTable::all_complete() const {
  return std::all_of(complete.begin(), complete.end(), [](bool b) { return b; });
}

ResolutionResult minimal_resolution(const GradedModule& m, int imax, std::optional<int> jmax, std::uint64_t seed) {
  m.validate();
  if (imax < 0) throw PreconditionError("imax must be nonnegative");
  ResolutionResult out;
  try {
    out.regularity = regularity_bound(m, seed);
  } catch (const PreconditionError&) {
    if (!jmax) throw;
  }
  const int top = jmax ? *jmax : imax + out.regularity->bound;
  auto alg = veronese_algebra(m.pres);

  FreeResolution& res = out.resolution;
  res.pres = m.pres;
  res.imax = imax;
  res.jmax = top;
  res.degrees.push_back(m.generator_degrees);
  res.differential.emplace_back();

  for (int i = 1; i <= imax; ++i) {
    const auto& prev = res.degrees[static_cast<std::size_t>(i - 1)];
    std::vector<int> degs;
    std::vector<ModuleElement> diffs;
    if (!prev.empty()) {
      int lowest = *std::min_element(prev.begin(), prev.end()) + 1;
      for (int j = lowest; j <= top; ++j) {
        auto coords = free_coords(*alg, prev, j);
        if (coords.dim == 0) continue;
        Echelon lower(coords.dim);
        for (std::size_t g = 0; g < degs.size(); ++g) {
          for (const auto& u : alg->basis(j - degs[g]).monomials) {
            lower.insert(shifted_vector(*alg, prev, j, coords, diffs[g], u));
          }
        }
        std::vector<SparseVector> cycles;
        if (i == 1) {
          for (std::size_t k = 0; k < m.relations.size(); ++k) {
            int e = element_degree(*alg, prev, m.relations[k]);
            for (const auto& u : alg->basis(j - e).monomials) {
              cycles.push_back(shifted_vector(*alg, prev, j, coords, m.relations[k], u));
            }
          }
        } else {
          const auto& pprev = res.degrees[static_cast<std::size_t>(i - 2)];
          const auto& pdiff = res.differential[static_cast<std::size_t>(i - 1)];
          auto target = free_coords(*alg, pprev, j);
          std::vector<SparseVector> images;
          images.reserve(static_cast<std::size_t>(coords.dim));
          for (std::size_t h = 0; h < prev.size(); ++h) {
            for (const auto& u : alg->basis(j - prev[h]).monomials) {
              images.push_back(shifted_vector(*alg, pprev, j, target, pdiff[h], u));
            }
          }
          cycles = kernel_of_columns(images, target.dim);
        }
        Echelon fresh(coords.dim);
        for (const auto& z : cycles) {
          auto r = lower.reduce(z);
          if (!r.empty()) fresh.insert(r);
        }
        auto rows = fresh.rows();
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
        for (const auto& row : rows) {
          degs.push_back(j);
          diffs.push_back(vector_element(*alg, prev, j, row));
        }
      }
    }
    res.degrees.push_back(std::move(degs));
    res.differential.push_back(std::move(diffs));
  }

  BettiTable& bt = out.betti;
  bt.imax = imax;
  bt.jmax = top;
  bt.values.assign(static_cast<std::size_t>(imax + 1), std::vector<long>(static_cast<std::size_t>(std::max(top, 0) + 1), 0));
  for (int i = 0; i <= imax; ++i) {
    for (int deg : res.degrees[static_cast<std::size_t>(i)]) {
      if (deg >= 0 && deg <= top) ++bt.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(deg)];
    }
    bt.complete.push_back(out.regularity && i + out.regularity->bound <= top);
  }
  return out;
}

ModuleQuotient::ModuleQuotient(std::shared_ptr<const VeroneseAlgebra> alg, GradedModule m)
    : alg_(std::move(alg)), m_(std::move(m)) {
  m_.validate();
}

const ModuleQuotient::Piece& ModuleQuotient::piece(int k) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(k);
  if (it != cache_.end()) return *it->second;
  auto p = std::make_unique<Piece>();
  p->coords = free_coords(*alg_, m_.generator_degrees, k);
  p->relations = Echelon(p->coords.dim);
  for (std::size_t r = 0; r < m_.relations.size(); ++r) {
    int e = element_degree(*alg_, m_.generator_degrees, m_.relations[r]);
    if (e > k) continue;
    for (const auto& u : alg_->basis(k - e).monomials) {
      p->relations.insert(shifted_vector(*alg_, m_.generator_degrees, k, p->coords, m_.relations[r], u));
    }
  }
  p->position.assign(static_cast<std::size_t>(p->coords.dim), -1);
  for (int c = 0; c < p->coords.dim; ++c) {
    if (!p->relations.is_pivot(c)) {
      p->position[static_cast<std::size_t>(c)] = static_cast<int>(p->standard.size());
      p->standard.push_back(c);
    }
  }
  return *cache_.emplace(k, std::move(p)).first->second;
}

SparseVector ModuleQuotient::reduce(int k, const SparseVector& v) const {
  const auto& p = piece(k);
  SparseVector out;
  for (auto& [i, c] : p.relations.reduce(v)) out.emplace_back(p.position[static_cast<std::size_t>(i)], c);
  return out;
}

SparseVector ModuleQuotient::multiply(const Polynomial& a, int e, int k, int s) const {
  const auto& src = piece(k);
  int coord = src.standard[static_cast<std::size_t>(s)];
  int g = block_of(src.coords, coord);
  const auto gi = static_cast<std::size_t>(g);
  const auto& mono = alg_->basis(k - m_.generator_degrees[gi]).monomials[static_cast<std::size_t>(coord - src.coords.offset[gi])];
  const auto& dst = piece(k + e);
  const auto& basis = alg_->basis(k + e - m_.generator_degrees[gi]);
  SparseVector v;
  for (const auto& [m, c] : a.terms()) v.emplace_back(dst.coords.offset[gi] + basis.index.at(m * mono), c);
  sort_vector(v);
  return reduce(k + e, v);
}

TensorComplex::TensorComplex(const FreeResolution& f, std::shared_ptr<const ModuleQuotient> m)
    : f_(f), m_(std::move(m)) {
  if (f_.pres.get() != m_->module().pres.get()) throw DimensionError("tensor factors over different rings");
}

int TensorComplex::dim(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(f_.degrees.size())) return 0;
  int total = 0;
  for (int deg : f_.degrees[static_cast<std::size_t>(i)]) total += m_->dim(j - deg);
  return total;
}

namespace {

std::vector<int> block_offsets(const FreeResolution& f, const ModuleQuotient& m, int i, int j) {
  std::vector<int> out;
  int total = 0;
  for (int deg : f.degrees[static_cast<std::size_t>(i)]) {
    out.push_back(total);
    total += m.dim(j - deg);
  }
  return out;
}

}  // namespace

SparseVector TensorComplex::boundary(int i, int j, int g, int s) const {
  const auto& degs = f_.degrees[static_cast<std::size_t>(i)];
  const auto& prev = f_.degrees[static_cast<std::size_t>(i - 1)];
  const auto& e = f_.differential[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
  auto offsets = block_offsets(f_, *m_, i - 1, j);
  int dg = degs[static_cast<std::size_t>(g)];
  SparseVector out;
  for (std::size_t h = 0; h < e.size(); ++h) {
    if (e[h].is_zero()) continue;
    for (const auto& [k, c] : m_->multiply(e[h], dg - prev[h], j - dg, s)) out.emplace_back(offsets[h] + k, c);
  }
  sort_vector(out);
  return out;
}

const TensorComplex::Homology& TensorComplex::homology(int i, int j) const {
  if (i < 0 || i >= f_.imax) throw PreconditionError("homology needs the resolution one step further");
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find({i, j});
    if (it != cache_.end()) return *it->second;
  }
  auto h = std::make_unique<Homology>();
  int n = dim(i, j);
  if (i == 0) {
    for (int k = 0; k < n; ++k) h->cycles.push_back({{k, Rational(1)}});
  } else {
    std::vector<SparseVector> images;
    const auto& degs = f_.degrees[static_cast<std::size_t>(i)];
    for (std::size_t g = 0; g < degs.size(); ++g) {
      for (int s = 0; s < m_->dim(j - degs[g]); ++s) images.push_back(boundary(i, j, static_cast<int>(g), s));
    }
    h->cycles = kernel_of_columns(images, dim(i - 1, j));
  }
  h->boundaries = Echelon(n);
  const auto& next = f_.degrees[static_cast<std::size_t>(i + 1)];
  for (std::size_t g = 0; g < next.size(); ++g) {
    for (int s = 0; s < m_->dim(j - next[g]); ++s) h->boundaries.insert(boundary(i + 1, j, static_cast<int>(g), s));
  }
  std::lock_guard lock(mutex_);
  return *cache_.emplace(std::make_pair(i, j), std::move(h)).first->second;
}

SparseVector TensorComplex::multiply(const Polynomial& a, int i, int j, const SparseVector& v) const {
  const auto& degs = f_.degrees[static_cast<std::size_t>(i)];
  auto src = block_offsets(f_, *m_, i, j);
  auto dst = block_offsets(f_, *m_, i, j + 1);
  std::map<int, Rational> acc;
  for (const auto& [k, c] : v) {
    auto it = std::upper_bound(src.begin(), src.end(), k);
    auto g = static_cast<std::size_t>(it - src.begin() - 1);
    for (const auto& [t, x] : m_->multiply(a, 1, j - degs[g], k - src[g])) acc[dst[g] + t] += c * x;
  }
  return from_map(acc);
}

int TensorComplex::image_dim(const Polynomial& a, int i, int j) const {
  Echelon e = homology(i, j).boundaries;
  int base = e.rank();
  for (const auto& z : homology(i, j - 1).cycles) e.insert(multiply(a, i, j - 1, z));
  return e.rank() - base;
}

std::optional<SparseVector> TensorComplex::non_annihilated(const Polynomial& a, int i, int j) const {
  const auto& target = homology(i, j + 1).boundaries;
  for (const auto& z : homology(i, j).cycles) {
    if (!target.contains(multiply(a, i, j, z))) return z;
  }
  return std::nullopt;
}

std::vector<std::vector<long>> tor_dims(const GradedModule& m, const GradedModule& n, int imax, int jmax) {
  auto res = minimal_resolution(m, imax + 1, jmax);
  auto q = std::make_shared<const ModuleQuotient>(veronese_algebra(m.pres), n);
  TensorComplex tc(res.resolution, q);
  std::vector<std::vector<long>> out(static_cast<std::size_t>(imax + 1), std::vector<long>(static_cast<std::size_t>(jmax + 1), 0));
  for (int i = 0; i <= imax; ++i) {
    for (int j = 0; j <= jmax; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = tc.homology(i, j).dim();
  }
  return out;
}

}  // namespace vcwl
