#include "vcwl/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "vcwl/error.hpp"

namespace vcwl {
namespace detail {

struct VTerm {
  Monomial m;
  int comp = 0;
  Rational c;
};

using VPoly = std::vector<VTerm>;

/// Term arithmetic for vectors of polynomials under a position-over-term
/// order: a smaller component index dominates, then the monomial order.
class Arith {
 public:
  Arith(TermOrder order, std::vector<int> shifts) : order_(std::move(order)), shifts_(std::move(shifts)) {}

  const TermOrder& order() const { return order_; }

  int cmp(const VTerm& a, const VTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    auto c = order_.compare(a.m, b.m);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }

  int degree(const Monomial& m, int comp) const { return m.degree() + shifts_[static_cast<std::size_t>(comp)]; }

  void sort(VPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const VTerm& a, const VTerm& b) { return cmp(a, b) > 0; });
  }

  /// a[from..] - f * u * b
  VPoly sub_mul(const VPoly& a, std::size_t from, const Rational& f, const Monomial& u, const VPoly& b) const {
    VPoly out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from;
    std::size_t j = 0;
    VTerm scaled;
    while (i < a.size() || j < b.size()) {
      if (j < b.size()) {
        scaled.m = b[j].m * u;
        scaled.comp = b[j].comp;
      }
      int c = (i == a.size()) ? -1 : (j == b.size() ? 1 : cmp(a[i], scaled));
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({scaled.m, scaled.comp, -f * b[j].c});
        ++j;
      } else {
        Rational x = a[i].c - f * b[j].c;
        if (x != 0) out.push_back({a[i].m, a[i].comp, std::move(x)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  VPoly reduce(VPoly p, const std::vector<VPoly>& basis, int skip = -1, bool tail = true) const {
    VPoly r;
    std::size_t head = 0;
    while (head < p.size()) {
      const VTerm& t = p[head];
      const VPoly* div = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (static_cast<int>(k) == skip) continue;
        const auto& lead = basis[k].front();
        if (lead.comp == t.comp && lead.m.divides(t.m)) {
          div = &basis[k];
          break;
        }
      }
      if (!div) {
        if (!tail) {
          r.insert(r.end(), p.begin() + static_cast<long>(head), p.end());
          return r;
        }
        r.push_back(p[head]);
        ++head;
        continue;
      }
      Monomial u = t.m / div->front().m;
      Rational f = t.c / div->front().c;
      p = sub_mul(p, head, f, u, *div);
      head = 0;
    }
    return r;
  }

  void make_monic(VPoly& p) const {
    if (p.empty() || p.front().c == 1) return;
    Rational inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
  }

 private:
  TermOrder order_;
  std::vector<int> shifts_;
};

struct PreparedBasis {
  Arith arith;
  std::vector<VPoly> polys;
};

namespace {

VPoly to_vpoly(const Arith& ar, const Polynomial& f, int comp = 0) {
  VPoly p;
  p.reserve(f.size());
  for (const auto& [m, c] : f.terms()) p.push_back({m, comp, c});
  ar.sort(p);
  return p;
}

Polynomial from_vpoly(const VPoly& p, Ring ring) {
  Polynomial f(ring);
  for (const auto& t : p) f.add_term(t.m, t.c);
  return f;
}

/// Core Buchberger loop over vectors of polynomials. Returns a reduced
/// Groebner basis sorted by leading term ascending.
std::vector<VPoly> buchberger_core(const Arith& ar, std::vector<VPoly> inputs, bool ideal_mode) {
  std::vector<VPoly> g;
  std::set<std::tuple<int, int, int>> queue;
  std::set<std::pair<int, int>> pending;

  std::vector<std::size_t> input_order;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (!inputs[k].empty()) input_order.push_back(k);
  }
  auto lead_degree = [&](const VPoly& p) { return ar.degree(p.front().m, p.front().comp); };
  std::stable_sort(input_order.begin(), input_order.end(), [&](std::size_t a, std::size_t b) {
    return lead_degree(inputs[a]) < lead_degree(inputs[b]);
  });

  auto add = [&](VPoly h) {
    ar.make_monic(h);
    int k = static_cast<int>(g.size());
    const auto& lead = h.front();
    for (int i = 0; i < k; ++i) {
      const auto& li = g[static_cast<std::size_t>(i)].front();
      if (li.comp != lead.comp) continue;
      if (ideal_mode && li.m.coprime(lead.m)) continue;
      Monomial l = li.m.lcm(lead.m);
      queue.emplace(ar.degree(l, lead.comp), i, k);
      pending.emplace(i, k);
    }
    g.push_back(std::move(h));
  };

  auto is_pending = [&](int a, int b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  std::size_t next_input = 0;
  while (next_input < input_order.size() || !queue.empty()) {
    bool take_input = false;
    if (next_input < input_order.size()) {
      take_input = queue.empty() || lead_degree(inputs[input_order[next_input]]) <= std::get<0>(*queue.begin());
    }
    if (take_input) {
      VPoly h = ar.reduce(inputs[input_order[next_input++]], g);
      if (!h.empty()) add(std::move(h));
      continue;
    }
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const auto& gi = g[static_cast<std::size_t>(i)];
    const auto& gj = g[static_cast<std::size_t>(j)];
    int comp = gi.front().comp;
    Monomial l = gi.front().m.lcm(gj.front().m);
    bool chain = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chain; ++k) {
      if (k == i || k == j) continue;
      const auto& lk = g[static_cast<std::size_t>(k)].front();
      if (lk.comp == comp && lk.m.divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    VPoly s = ar.sub_mul(VPoly{}, 0, -1, l / gi.front().m, gi);
    s = ar.sub_mul(s, 0, 1, l / gj.front().m, gj);
    VPoly h = ar.reduce(std::move(s), g);
    if (!h.empty()) add(std::move(h));
  }

  // minimalize
  std::vector<VPoly> kept;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& la = g[a].front();
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& lb = g[b].front();
      if (lb.comp != la.comp || !lb.m.divides(la.m)) continue;
      if (lb.m != la.m || b < a) redundant = true;
    }
    if (!redundant) kept.push_back(g[a]);
  }
  // interreduce
  std::vector<VPoly> reduced;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    VPoly head{kept[a].front()};
    VPoly tail(kept[a].begin() + 1, kept[a].end());
    VPoly r = ar.reduce(std::move(tail), kept, static_cast<int>(a));
    head.insert(head.end(), r.begin(), r.end());
    ar.make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const VPoly& a, const VPoly& b) { return ar.cmp(a.front(), b.front()) < 0; });
  return reduced;
}

}  // namespace
}  // namespace detail

using detail::Arith;
using detail::VPoly;

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(g.leading_monomial(order));
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         std::span<const Polynomial> quotient) {
  Ring ring;
  if (!gens.empty()) {
    ring = gens.front().ring();
  } else if (!quotient.empty()) {
    ring = quotient.front().ring();
  } else {
    ring = Ring{order.nvars(), 0};
  }
  if (order.nvars() != ring.nvars()) throw DimensionError("term order does not match the ring");
  Arith ar(order, {0});
  std::vector<VPoly> inputs;
  for (const auto* list : {&gens, &quotient}) {
    for (const auto& f : *list) {
      if (!(f.ring() == ring)) throw DimensionError("buchberger: generators in different rings");
      inputs.push_back(detail::to_vpoly(ar, f));
    }
  }
  auto basis = detail::buchberger_core(ar, std::move(inputs), true);

  GroebnerBasis gb;
  gb.ring = ring;
  gb.order = order;
  gb.quotient.assign(quotient.begin(), quotient.end());
  for (const auto& p : basis) gb.generators.push_back(detail::from_vpoly(p, ring));
  gb.prepared = std::make_shared<const detail::PreparedBasis>(detail::PreparedBasis{ar, std::move(basis)});
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(f.ring() == gb.ring)) {
    throw DimensionError("normal_form: " + f.ring().name() + " element reduced by a basis over " + gb.ring.name());
  }
  const auto& prep = *gb.prepared;
  auto r = prep.arith.reduce(detail::to_vpoly(prep.arith, f), prep.polys);
  return detail::from_vpoly(r, f.ring());
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> out;
  for (const auto& m : monomials) {
    if (!monomial_ideal_contains(out, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool monomial_ideal_contains(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> initial_ideal(std::span<const Polynomial> gens, const TermOrder& order,
                                    std::span<const Polynomial> quotient) {
  return minimalize_monomials(buchberger(gens, order, quotient).leading_monomials());
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const int> discard) {
  if (gens.empty()) return {};
  int nvars = gens.front().ring().nvars();
  std::vector<bool> dropped(static_cast<std::size_t>(nvars), false);
  std::vector<int> priority;
  for (int v : discard) {
    if (v < 0 || v >= nvars) throw DimensionError("eliminate: variable index out of range");
    if (!dropped[static_cast<std::size_t>(v)]) priority.push_back(v);
    dropped[static_cast<std::size_t>(v)] = true;
  }
  int block = static_cast<int>(priority.size());
  for (int v = 0; v < nvars; ++v) {
    if (!dropped[static_cast<std::size_t>(v)]) priority.push_back(v);
  }
  auto order = TermOrder::elimination(nvars, block).with_priority(priority);
  auto gb = buchberger(gens, order);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    bool free = true;
    for (const auto& [m, c] : g.terms()) {
      for (int v = 0; v < nvars && free; ++v) {
        if (dropped[static_cast<std::size_t>(v)] && m[v] > 0) free = false;
      }
    }
    if (free) out.push_back(g);
  }
  return out;
}

HilbertFunction hilbert_function_monomial(std::span<const Monomial> gens, int nvars, int first, int last) {
  HilbertFunction hf;
  hf.first = first;
  for (int j = first; j <= last; ++j) {
    long count = 0;
    if (j >= 0) {
      for (const auto& m : monomials_of_degree(nvars, j)) {
        if (!monomial_ideal_contains(gens, m)) ++count;
      }
    }
    hf.values.push_back(count);
  }
  return hf;
}

HilbertFunction hilbert_function(std::span<const Polynomial> gens, std::span<const Polynomial> quotient,
                                 Ring ring, int first, int last) {
  for (const auto* list : {&gens, &quotient}) {
    for (const auto& f : *list) {
      if (!f.is_homogeneous()) throw GradingError("hilbert_function: non-homogeneous input " + f.to_string());
    }
  }
  auto gb = buchberger(gens, TermOrder::degrevlex(ring.nvars()), quotient);
  auto lms = minimalize_monomials(gb.leading_monomials());
  return hilbert_function_monomial(lms, ring.nvars(), first, last);
}

std::optional<int> ModulePresentation::column_degree(std::size_t k) const {
  const auto& col = columns.at(k);
  for (int a = 0; a < rank; ++a) {
    const auto& e = col[static_cast<std::size_t>(a)];
    if (!e.is_zero()) return *e.homogeneous_degree() + shifts[static_cast<std::size_t>(a)];
  }
  return std::nullopt;
}

void ModulePresentation::validate() const {
  if (static_cast<int>(shifts.size()) != rank) throw DimensionError("module shifts do not match the rank");
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const auto& col = columns[k];
    if (static_cast<int>(col.size()) != rank) throw DimensionError("module column of the wrong length");
    std::optional<int> deg;
    for (int a = 0; a < rank; ++a) {
      const auto& e = col[static_cast<std::size_t>(a)];
      if (!(e.ring() == ring)) throw DimensionError("module entry in the wrong ring");
      if (e.is_zero()) continue;
      auto hd = e.homogeneous_degree();
      if (!hd) throw GradingError("module column " + std::to_string(k) + " has a non-homogeneous entry");
      int d = *hd + shifts[static_cast<std::size_t>(a)];
      if (deg && *deg != d) throw GradingError("module column " + std::to_string(k) + " is not homogeneous");
      deg = d;
    }
  }
}

ModulePresentation syzygies(const ModulePresentation& pres, const TermOrder& order) {
  pres.validate();
  const int r = pres.rank;
  const int m = static_cast<int>(pres.columns.size());
  std::vector<int> shifts = pres.shifts;
  std::vector<int> col_degrees;
  for (int b = 0; b < m; ++b) {
    auto d = pres.column_degree(static_cast<std::size_t>(b));
    col_degrees.push_back(d.value_or(0));
    shifts.push_back(d.value_or(0));
  }
  Arith ar(order, shifts);

  std::optional<GroebnerBasis> qgb;
  if (!pres.quotient.empty()) qgb = buchberger(pres.quotient, order);

  std::vector<VPoly> inputs;
  for (int b = 0; b < m; ++b) {
    VPoly p;
    for (int a = 0; a < r; ++a) {
      for (const auto& [mono, c] : pres.columns[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)].terms()) {
        p.push_back({mono, a, c});
      }
    }
    p.push_back({Monomial(pres.ring.nvars()), r + b, Rational(1)});
    ar.sort(p);
    inputs.push_back(std::move(p));
  }
  if (qgb) {
    for (int a = 0; a < r + m; ++a) {
      for (const auto& q : qgb->generators) inputs.push_back(detail::to_vpoly(ar, q, a));
    }
  }
  auto basis = detail::buchberger_core(ar, std::move(inputs), false);

  ModulePresentation out;
  out.ring = pres.ring;
  out.rank = m;
  out.shifts = col_degrees;
  out.quotient = pres.quotient;
  for (const auto& p : basis) {
    if (p.front().comp < r) continue;
    if (qgb && p.size() > 0) {
      // skip the adjoined quotient multiples themselves
      bool pure = std::all_of(p.begin(), p.end(), [&](const detail::VTerm& t) { return t.comp == p.front().comp; });
      if (pure && normal_form(detail::from_vpoly(p, pres.ring), *qgb).is_zero()) continue;
    }
    std::vector<Polynomial> v(static_cast<std::size_t>(m), Polynomial(pres.ring));
    for (const auto& t : p) v[static_cast<std::size_t>(t.comp - r)].add_term(t.m, t.c);
    bool zero = true;
    for (auto& e : v) {
      if (qgb) e = normal_form(e, *qgb);
      if (!e.is_zero()) zero = false;
    }
    if (!zero && std::find(out.columns.begin(), out.columns.end(), v) == out.columns.end()) {
      out.columns.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace vcwl
