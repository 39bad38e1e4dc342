#include "vcwl/cwl.hpp"

#include <algorithm>

#include "vcwl/error.hpp"

namespace vcwl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ComponentwiseLinear: return "componentwise-linear";
    case Verdict::NotComponentwiseLinear: return "not-componentwise-linear";
    case Verdict::Inconclusive: return "inconclusive-at-bounds";
  }
  return "unknown";
}

std::string to_string(CwlMethod m) { return m == CwlMethod::Direct ? "direct" : "gin-criterion"; }

namespace {

bool is_unit(const GradedIdeal& ideal) { return ideal.min_degree() == 0; }

BettiTable zero_table(int imax, int jmax) {
  BettiTable t;
  t.imax = imax;
  t.jmax = jmax;
  t.values.assign(static_cast<std::size_t>(imax + 1), std::vector<long>(static_cast<std::size_t>(jmax + 1), 0));
  t.complete.assign(static_cast<std::size_t>(imax + 1), true);
  return t;
}

long total_ideal_betti(const GradedIdeal& ideal, int i, std::uint64_t seed) {
  if (ideal.is_zero()) return 0;
  return quotient_betti(ideal, i, std::nullopt, seed).total(i + 1);
}

}  // namespace

BettiTable quotient_betti(const GradedIdeal& ideal, int imax, std::optional<int> jmax, std::uint64_t seed) {
  if (is_unit(ideal)) return zero_table(imax + 1, jmax.value_or(0));
  return minimal_resolution(quotient_module(ideal), imax + 1, jmax, seed).betti;
}

int quotient_window(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  if (is_unit(ideal)) return 0;
  return imax + 1 + regularity_bound(quotient_module(ideal), seed).bound;
}

LinearityReport check_linear_resolution(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  auto gens = minimalize(ideal);
  LinearityReport out;
  if (gens.is_zero() || is_unit(gens)) {
    out.verdict = Verdict::ComponentwiseLinear;
    out.degree = gens.min_degree().value_or(0);
    out.table = quotient_betti(gens, imax, std::nullopt, seed);
    return out;
  }
  if (gens.min_degree() != gens.max_degree()) {
    throw PreconditionError("linear resolution check needs generators of a single degree");
  }
  out.degree = *gens.min_degree();
  out.table = quotient_betti(gens, imax, std::nullopt, seed);
  for (int i = 0; i <= imax; ++i) {
    for (int j = 0; j <= out.table.jmax; ++j) {
      long v = out.table.at(i + 1, j);
      if (v != 0 && j != i + out.degree) {
        out.verdict = Verdict::NotComponentwiseLinear;
        out.witness = BettiWitness{i, j, v, 0};
        return out;
      }
    }
  }
  out.verdict = out.table.all_complete() ? Verdict::ComponentwiseLinear : Verdict::Inconclusive;
  return out;
}

CwlVerdict check_cwl_direct(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  auto gens = minimalize(ideal);
  CwlVerdict out;
  out.method = CwlMethod::Direct;
  out.imax = imax;
  out.min_degree = gens.min_degree();
  out.max_degree = gens.max_degree();
  out.table = quotient_betti(gens, imax, std::nullopt, seed);
  out.jmax = out.table->jmax;
  out.verdict = Verdict::ComponentwiseLinear;
  if (gens.is_zero()) return out;
  for (int j = *out.min_degree; j <= *out.max_degree + 1; ++j) {
    auto component = component_ideal(gens, j);
    if (component.is_zero()) continue;
    auto rep = check_linear_resolution(component, imax, seed);
    if (rep.verdict == Verdict::NotComponentwiseLinear) {
      out.verdict = Verdict::NotComponentwiseLinear;
      out.witness_component = j;
      out.witness = rep.witness;
      return out;
    }
    if (rep.verdict == Verdict::Inconclusive) out.verdict = Verdict::Inconclusive;
  }
  return out;
}

namespace {

struct GinTables {
  GinContraction gin;
  BettiTable table;
  BettiTable gin_table;
};

GinTables gin_tables(const GradedIdeal& ideal, int imax, std::uint64_t seed, long bound) {
  auto gin = gin_contraction(ideal, seed, bound);
  int window = std::max(quotient_window(ideal, imax, seed), quotient_window(gin.ideal, imax, seed));
  auto table = quotient_betti(ideal, imax, window, seed);
  auto gin_table = quotient_betti(gin.ideal, imax, window, seed);
  return {std::move(gin), std::move(table), std::move(gin_table)};
}

}  // namespace

CwlVerdict check_cwl_gin(const GradedIdeal& ideal, int imax, std::uint64_t seed, long bound) {
  auto gens = minimalize(ideal);
  CwlVerdict out;
  out.method = CwlMethod::GinCriterion;
  out.imax = imax;
  out.min_degree = gens.min_degree();
  out.max_degree = gens.max_degree();
  auto t = gin_tables(gens, imax, seed, bound);
  out.jmax = t.table.jmax;
  out.certificate = t.gin.gin.certificate;
  out.gin_ideal = t.gin.ideal;
  out.verdict = t.table.all_complete() && t.gin_table.all_complete() ? Verdict::ComponentwiseLinear
                                                                    : Verdict::Inconclusive;
  for (int i = 0; i <= t.table.imax && !out.witness; ++i) {
    for (int j = 0; j <= t.table.jmax; ++j) {
      if (t.table.at(i, j) != t.gin_table.at(i, j)) {
        out.verdict = Verdict::NotComponentwiseLinear;
        out.witness = BettiWitness{i - 1, j, t.table.at(i, j), t.gin_table.at(i, j)};
        break;
      }
    }
  }
  out.table = std::move(t.table);
  out.gin_table = std::move(t.gin_table);
  return out;
}

GinBettiReport gin_betti_inequality_check(const GradedIdeal& ideal, int imax, std::uint64_t seed, long bound) {
  auto t = gin_tables(minimalize(ideal), imax, seed, bound);
  GinBettiReport out;
  out.holds = true;
  out.complete = t.table.all_complete() && t.gin_table.all_complete();
  for (int i = 0; i <= t.table.imax; ++i) {
    for (int j = 0; j <= t.table.jmax; ++j) {
      long a = t.table.at(i, j);
      long b = t.gin_table.at(i, j);
      if (a > b && !out.violation) {
        out.holds = false;
        out.violation = BettiWitness{i - 1, j, a, b};
      }
      if (a < b && !out.strict_entry) {
        out.strict = true;
        out.strict_entry = BettiWitness{i - 1, j, a, b};
      }
    }
  }
  out.table = std::move(t.table);
  out.gin_table = std::move(t.gin_table);
  return out;
}

ComponentBettiReport component_betti_identity_check(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  auto gens = minimalize(ideal);
  auto direct = check_cwl_direct(gens, imax, seed);
  if (direct.verdict != Verdict::ComponentwiseLinear) {
    throw PreconditionError("Betti identity is stated for componentwise linear ideals only (verdict: " +
                            to_string(direct.verdict) + ")");
  }
  ComponentBettiReport out;
  out.holds = true;
  if (gens.is_zero()) return out;
  const auto& pres = gens.pres;
  auto whole = quotient_betti(gens, imax, std::nullopt, seed);
  for (int j = *gens.min_degree(); j <= *gens.max_degree(); ++j) {
    auto component = component_ideal(gens, j);
    std::vector<Polynomial> products;
    for (const auto& g : component_ideal(gens, j - 1).generators) {
      for (int k = 0; k < pres->d; ++k) products.push_back(g * Polynomial::variable(pres->S(), k));
    }
    auto shifted = veronese_ideal(pres, products);
    for (int i = 0; i <= imax; ++i) {
      ComponentBettiCell cell;
      cell.i = i;
      cell.j = j;
      cell.graded = whole.at(i + 1, i + j);
      cell.component = total_ideal_betti(component, i, seed);
      cell.shifted = total_ideal_betti(shifted, i, seed);
      out.holds = out.holds && cell.holds();
      out.cells.push_back(cell);
    }
  }
  return out;
}

SufficiencyReport proper_sequence_sufficiency(const GradedIdeal& ideal, int imax, std::uint64_t seed, long bound) {
  auto gens = minimalize(ideal);
  const auto& pres = *gens.pres;
  KoszulHomology kh(quotient_module(gens), generic_linear_forms(pres, pres.d, seed, bound), imax, std::nullopt, seed);
  SufficiencyReport out;
  out.proper = kh.proper_sequence_check();
  out.condition_met = out.proper.proper;
  out.consistent = true;
  if (out.condition_met) {
    out.verdict = check_cwl_gin(gens, imax, seed, bound);
    out.consistent = out.verdict->verdict == Verdict::ComponentwiseLinear;
  }
  return out;
}

AnnihilationReport annihilation_check(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  auto gens = minimalize(ideal);
  const auto& pres = *gens.pres;
  KoszulHomology kh(quotient_module(gens), generic_linear_forms(pres, pres.d, seed), imax, std::nullopt, seed);
  AnnihilationReport out;
  out.literal = true;
  for (int a = 1; a <= imax; ++a) out.literal = out.literal && kh.annihilated(a, pres.d);
  out.strengthened = true;
  for (int b = 1; b <= pres.d && out.strengthened; ++b) {
    for (int a = 1; a <= imax; ++a) {
      if (!kh.annihilated(a, b)) {
        out.strengthened = false;
        out.failure = std::make_pair(a, b);
        break;
      }
    }
  }
  return out;
}

NecessityReport annihilation_necessity(const GradedIdeal& ideal, int imax, std::uint64_t seed) {
  NecessityReport out;
  out.verdict = check_cwl_direct(ideal, imax, seed);
  if (out.verdict.verdict != Verdict::ComponentwiseLinear) {
    throw PreconditionError("necessity check needs a componentwise linear ideal (verdict: " +
                            to_string(out.verdict.verdict) + ")");
  }
  out.annihilation = annihilation_check(ideal, imax, seed);
  if (!out.annihilation.literal) throw TheoremViolation("m^(c) does not annihilate Tor(K, R^(c)/I)");
  return out;
}

}  // namespace vcwl
