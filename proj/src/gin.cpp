#include "vcwl/gin.hpp"

#include <algorithm>

#include "vcwl/error.hpp"
#include "vcwl/random.hpp"

namespace vcwl {

GenericChange random_change(int n, std::uint64_t seed, long bound) {
  constexpr int kRetries = 5;
  SeededRng rng(seed);
  const auto size = static_cast<std::size_t>(n);
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    Matrix g(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t k = 0; k < size; ++k) g(r, k) = Rational(rng.uniform(-bound, bound));
    }
    if (g.determinant() != 0) return {std::move(g), seed, bound};
  }
  throw GenericityError("random_change: no invertible draw after " + std::to_string(kRetries) + " retries");
}

Polynomial apply_change(const GenericChange& change, const Polynomial& f) {
  Ring ring = f.ring();
  const auto n = change.g.rows();
  if (ring.x_vars != static_cast<int>(n) || ring.t_vars != 0) throw DimensionError("apply_change: not a polynomial of R");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial y(ring);
    for (std::size_t k = 0; k < n; ++k) {
      if (change.g(i, k) != 0) y.add_term(Monomial::variable(ring.nvars(), static_cast<int>(k)), change.g(i, k));
    }
    images.push_back(std::move(y));
  }
  return f.substitute(images, ring);
}

namespace {

std::vector<Monomial> one_draw(const GradedIdeal& j, const TermOrder& order, std::uint64_t seed, long bound) {
  auto change = random_change(order.nvars(), seed, bound);
  std::vector<Polynomial> moved;
  for (const auto& f : j.generators) moved.push_back(apply_change(change, f));
  return initial_ideal(moved, order);
}

}  // namespace

GinResult gin(const GradedIdeal& j, const TermOrder& order, int draws, std::uint64_t seed, long bound) {
  if (j.tag != RingTag::R) throw PreconditionError("gin: expected an ideal of R");
  if (draws < 2) throw PreconditionError("gin: at least two draws are required");
  for (const auto& f : j.generators) {
    if (f.ring().nvars() != order.nvars()) throw DimensionError("gin: order does not match the ring");
  }
  GinResult out;
  out.certificate.bound = bound;
  out.ideal.tag = RingTag::R;
  if (j.is_zero()) {
    out.certificate.agree = true;
    out.certificate.draws = draws;
    return out;
  }

  std::uint64_t next = 0;
  for (int round = 0; round < 2; ++round) {
    int k = draws + round;
    std::vector<std::vector<Monomial>> results;
    for (int i = 0; i < k; ++i) {
      std::uint64_t s = derive_seed(seed, next++);
      out.certificate.seeds.push_back(s);
      results.push_back(one_draw(j, order, s, bound));
    }
    out.certificate.draws = k;
    out.certificate.escalated = round > 0;
    bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) { return r == results.front(); });
    if (agree) {
      out.certificate.agree = true;
      out.certificate.ideal = results.front();
      Ring ring = j.generators.front().ring();
      for (const auto& m : results.front()) out.ideal.generators.push_back(Polynomial::term(ring, m));
      return out;
    }
  }
  throw InstabilityError("gin: independent draws disagree (bound " + std::to_string(bound) +
                         "); raise the bound or the draw count");
}

bool check_gin_certificate_borel(const GinResult& result) {
  if (!result.certificate.agree) throw PreconditionError("gin certificate does not record agreement");
  return is_borel(result.ideal);
}

GinContraction gin_contraction(const GradedIdeal& ideal, std::uint64_t seed, long bound) {
  if (ideal.tag != RingTag::Veronese) throw PreconditionError("gin_contraction: expected an ideal of the Veronese ring");
  GinContraction out;
  out.gin = gin(expand(ideal), TermOrder::degrevlex(ideal.pres->n), 2, seed, bound);
  auto con = contract(out.gin.ideal, ideal.pres);
  out.ideal = std::move(con.ideal);
  out.veronese_bound = con.veronese_bound;
  return out;
}

namespace {

HilbertFunction section_hilbert(const GradedIdeal& ideal, const GenericForms& forms, int p, int first, int last) {
  const auto& pres = *ideal.pres;
  std::vector<Polynomial> gens = ideal.generators;
  gens.insert(gens.end(), forms.forms.begin(), forms.forms.begin() + p);
  gens.push_back(Polynomial(pres.S()));
  auto order = TermOrder::veronese_compatible(pres.images);
  auto gb = buchberger(gens, order, pres.kernel);
  return hilbert_function_monomial(minimalize_monomials(gb.leading_monomials()), pres.d, first, last);
}

}  // namespace

LinearSectionCheck linear_section_hilbert_check(const GradedIdeal& ideal, const GenericForms& forms, int p,
                                                int first, int last, std::uint64_t seed, long bound) {
  if (ideal.tag != RingTag::Veronese) throw PreconditionError("linear_section_hilbert_check: expected a Veronese ideal");
  if (p < 0 || p > static_cast<int>(forms.forms.size())) throw PreconditionError("linear_section_hilbert_check: p out of range");
  auto gc = gin_contraction(ideal, seed, bound);
  LinearSectionCheck out;
  out.original = section_hilbert(ideal, forms, p, first, last);
  out.gin_side = section_hilbert(gc.ideal, forms, p, first, last);
  out.equal = out.original == out.gin_side;
  return out;
}

}  // namespace vcwl
