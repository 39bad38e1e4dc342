#include "vcwl/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "vcwl/cache.hpp"
#include "vcwl/error.hpp"
#include "vcwl/io.hpp"

namespace vcwl {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"present", "hilbert", "gin", "contract", "betti",
                                              "cwl-check", "koszul-table", "proper-seq", "prop-checks"};
  return names;
}

namespace {

struct Context {
  const JobSpec& spec;
  std::shared_ptr<const VeronesePresentation> pres;
  std::optional<GradedIdeal> ideal;
  std::optional<Cache> cache;
  std::ostream& out;

  const GradedIdeal& require_ideal() const {
    if (!ideal) throw PreconditionError("command '" + spec.command + "' needs --ideal or --ideal-file");
    return *ideal;
  }
  bool records() const { return spec.format == OutputFormat::Records; }

  Json header() const {
    Json h{{"record", spec.command}, {"engine", kEngineVersion}, {"n", spec.n}, {"c", spec.c}};
    if (ideal) {
      h["ideal"] = format_ideal(*ideal);
      h["presentation_hash"] = sha256_hex(std::to_string(spec.n) + "," + std::to_string(spec.c) + ":" + format_ideal(*ideal));
    }
    return h;
  }

  void emit(Json body) const {
    Json rec = header();
    for (auto& [k, v] : body.items()) rec[k] = v;
    out << rec.dump() << "\n";
  }

  /// Cached computation of a JSON payload.
  Json cached(const Json& inputs, const std::function<Json()>& compute) const {
    if (!cache) return compute();
    auto key = cache->key(inputs);
    if (auto hit = cache->load(key)) return *hit;
    auto payload = compute();
    cache->store(key, payload);
    return payload;
  }

  Json cache_inputs(const std::string& what) const {
    Json in{{"what", what}, {"n", spec.n}, {"c", spec.c}, {"seed", spec.seed}, {"bound", spec.bound}, {"imax", spec.imax}};
    in["jmax"] = spec.jmax ? Json(*spec.jmax) : Json(nullptr);
    in["ideal"] = ideal ? format_ideal(*ideal) : "";
    in["order"] = "degrevlex";
    return in;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read ideal file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

BettiTable module_betti(const Context& ctx, const GradedIdeal& ideal) {
  if (ideal.min_degree() == 0) {
    BettiTable t;
    t.imax = ctx.spec.imax;
    t.jmax = ctx.spec.jmax.value_or(0);
    t.values.assign(static_cast<std::size_t>(t.imax + 1), std::vector<long>(static_cast<std::size_t>(t.jmax + 1), 0));
    t.complete.assign(static_cast<std::size_t>(t.imax + 1), true);
    return t;
  }
  return minimal_resolution(quotient_module(ideal), ctx.spec.imax, ctx.spec.jmax, ctx.spec.seed).betti;
}

int cmd_present(const Context& ctx) {
  const auto& p = *ctx.pres;
  if (ctx.records()) {
    ctx.emit(Json{{"presentation", to_json(p)}});
    return 0;
  }
  ctx.out << "d = " << p.d << "\n";
  for (int i = 0; i < p.d; ++i) {
    ctx.out << "  " << p.S().var_name(i) << " -> " << monomial_to_string(p.images[static_cast<std::size_t>(i)], p.R()) << "\n";
  }
  ctx.out << "kernel (" << p.kernel.size() << " generators):\n";
  for (const auto& q : p.kernel) ctx.out << "  " << q.to_string() << "\n";
  return 0;
}

int cmd_hilbert(const Context& ctx) {
  auto hf = veronese_hilbert(ctx.require_ideal(), 0, ctx.spec.jmax.value_or(6));
  if (ctx.records()) {
    ctx.emit(Json{{"hilbert", to_json(hf)}});
    return 0;
  }
  ctx.out << "Hilbert function of R^(" << ctx.spec.c << ")/I, degrees 0.." << hf.last() << ":\n ";
  for (long v : hf.values) ctx.out << " " << v;
  ctx.out << "\n";
  return 0;
}

int cmd_gin(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  auto payload = ctx.cached(ctx.cache_inputs("gin"), [&] {
    auto g = gin(expand(ideal), TermOrder::degrevlex(ctx.spec.n), 2, ctx.spec.seed, ctx.spec.bound);
    return Json{{"certificate", to_json(g.certificate, ctx.pres->R())}, {"borel", check_gin_certificate_borel(g)}};
  });
  if (ctx.records()) {
    ctx.emit(payload);
    return 0;
  }
  const auto& cert = payload["certificate"];
  ctx.out << "Gin(IR), degrevlex:";
  for (const auto& g : cert["generators"]) ctx.out << " " << g.get<std::string>();
  ctx.out << "\ndraws " << cert["draws"] << ", agree " << cert["agree"] << ", escalated " << cert["escalated"]
          << ", bound " << cert["bound"] << ", borel " << payload["borel"] << "\n";
  return 0;
}

int cmd_contract(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  auto payload = ctx.cached(ctx.cache_inputs("contract"), [&] {
    auto gc = gin_contraction(ideal, ctx.spec.seed, ctx.spec.bound);
    return Json{{"contraction", format_ideal(gc.ideal)},
                {"veronese_bound", gc.veronese_bound},
                {"borel", is_borel_veronese(gc.ideal)},
                {"certificate", to_json(gc.gin.certificate, ctx.pres->R())}};
  });
  if (ctx.records()) {
    ctx.emit(payload);
    return 0;
  }
  ctx.out << "(Gin(IR))^(" << ctx.spec.c << ") = (" << payload["contraction"].get<std::string>() << ")\n";
  ctx.out << "searched Veronese degrees up to " << payload["veronese_bound"] << ", borel " << payload["borel"] << "\n";
  return 0;
}

int cmd_betti(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  auto payload = ctx.cached(ctx.cache_inputs("betti"), [&] { return to_json(module_betti(ctx, ideal)); });
  auto table = betti_from_json(payload);
  if (ctx.records()) {
    ctx.emit(Json{{"betti", payload}});
  } else {
    ctx.out << "Betti table of R^(" << ctx.spec.c << ")/I (window j <= " << table.jmax << "):\n" << format_betti(table);
  }
  return table.all_complete() ? 0 : 2;
}

std::string witness_text(const CwlVerdict& v) {
  if (!v.witness) return "";
  std::string s = " witness beta_{" + std::to_string(v.witness->i) + "," + std::to_string(v.witness->j) + "}(I) = " +
                  std::to_string(v.witness->value);
  if (v.method == CwlMethod::GinCriterion) s += " vs " + std::to_string(v.witness->other) + " for the Gin contraction";
  if (v.witness_component) s += " in component " + std::to_string(*v.witness_component);
  return s;
}

int cmd_cwl(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  auto direct = check_cwl_direct(ideal, ctx.spec.imax, ctx.spec.seed);
  auto gin = check_cwl_gin(ideal, ctx.spec.imax, ctx.spec.seed, ctx.spec.bound);
  bool agree = direct.verdict == gin.verdict;
  if (ctx.records()) {
    ctx.emit(Json{{"verdict", to_string(direct.verdict)},
                  {"methods_agree", agree},
                  {"direct", to_json(direct)},
                  {"gin_criterion", to_json(gin)}});
  } else {
    ctx.out << "verdict: " << to_string(direct.verdict) << "\n";
    ctx.out << "  direct:        " << to_string(direct.verdict) << witness_text(direct) << "\n";
    ctx.out << "  gin-criterion: " << to_string(gin.verdict) << witness_text(gin) << "\n";
    ctx.out << "  min(I) = " << (direct.min_degree ? std::to_string(*direct.min_degree) : "-")
            << ", max(I) = " << (direct.max_degree ? std::to_string(*direct.max_degree) : "-") << "\n";
    if (!agree) ctx.out << "  note: the two methods disagree\n";
    ctx.out << "Betti table of R^(c)/I:\n" << format_betti(*gin.table);
    ctx.out << "Betti table of R^(c)/(Gin contraction) = (" << format_ideal(*gin.gin_ideal) << "):\n"
            << format_betti(*gin.gin_table);
  }
  bool inconclusive = direct.verdict == Verdict::Inconclusive || gin.verdict == Verdict::Inconclusive;
  return inconclusive ? 2 : 0;
}

KoszulHomology koszul(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  auto forms = generic_linear_forms(*ctx.pres, ctx.pres->d, ctx.spec.seed, ctx.spec.bound);
  return KoszulHomology(quotient_module(ideal), forms, ctx.spec.imax, ctx.spec.jmax, ctx.spec.seed);
}

int cmd_koszul(const Context& ctx) {
  auto kh = koszul(ctx);
  const auto& t = kh.table();
  bool stable = true;
  for (int p = 0; p <= t.d; ++p) {
    for (int i = 1; i <= t.imax; ++i) stable = stable && t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)].stabilized;
    if (p >= 1) stable = stable && t.alpha[static_cast<std::size_t>(p)].stabilized;
  }
  if (ctx.records()) {
    ctx.emit(Json{{"koszul", to_json(t)}});
    return stable ? 0 : 2;
  }
  ctx.out << "H_i(p) = Tor_i(R^(c)/(y_1..y_p), M), degrees 0.." << t.jmax << " ('*' = not zero at the top)\n";
  for (int p = 0; p <= t.d; ++p) {
    ctx.out << "p=" << p;
    if (p >= 1) {
      const auto& a = t.alpha[static_cast<std::size_t>(p)];
      ctx.out << "  alpha=" << a.total << (a.stabilized ? "" : "*") << "  y_p injective=" << (t.injective[static_cast<std::size_t>(p)] ? "yes" : "no");
    }
    ctx.out << "\n";
    for (int i = 0; i <= t.imax; ++i) {
      const auto& h = t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
      ctx.out << "  h_" << i << " = " << h.total << (h.stabilized ? "" : "*") << "  dims:";
      for (long v : h.dims) ctx.out << " " << v;
      ctx.out << "\n";
    }
  }
  auto show = [&](const char* label, const std::optional<std::array<int, 3>>& f) {
    ctx.out << label;
    if (f) {
      ctx.out << "fails first at p=" << (*f)[0] << " i=" << (*f)[1] << " j=" << (*f)[2] << "\n";
    } else {
      ctx.out << "holds\n";
    }
  };
  show("recursion (stated form): ", t.stated_recursion_failure());
  show("recursion (exact-sequence form): ", t.exact_recursion_failure());
  return stable ? 0 : 2;
}

int cmd_proper(const Context& ctx) {
  auto rep = koszul(ctx).proper_sequence_check();
  if (ctx.records()) {
    ctx.emit(Json{{"proper_sequence", to_json(rep)}});
    return 0;
  }
  ctx.out << "proper sequence: " << (rep.proper ? "yes" : "no");
  if (rep.failure) {
    ctx.out << " (y_" << rep.failure->second + 1 << " H_" << rep.failure->first << "(" << rep.failure->second
            << ") != 0 in degree " << *rep.failure_degree << ")";
  }
  ctx.out << "\n";
  return 0;
}

int cmd_props(const Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  const auto& s = ctx.spec;
  auto ineq = gin_betti_inequality_check(ideal, s.imax, s.seed, s.bound);
  Json inequality{{"holds", ineq.holds}, {"strict", ineq.strict}, {"complete", ineq.complete}};
  inequality["violation"] = ineq.violation ? to_json(*ineq.violation) : Json(nullptr);
  inequality["strict_entry"] = ineq.strict_entry ? to_json(*ineq.strict_entry) : Json(nullptr);

  Json identity;
  try {
    auto r = component_betti_identity_check(ideal, s.imax, s.seed);
    Json cells = Json::array();
    for (const auto& c : r.cells) {
      cells.push_back(Json{{"i", c.i}, {"j", c.j}, {"graded", c.graded}, {"component", c.component}, {"shifted", c.shifted}, {"holds", c.holds()}});
    }
    identity = Json{{"holds", r.holds}, {"cells", cells}};
  } catch (const PreconditionError& e) {
    identity = Json{{"refused", e.what()}};
  }

  auto suff = proper_sequence_sufficiency(ideal, s.imax, s.seed, s.bound);
  Json sufficiency{{"proper", to_json(suff.proper)}, {"condition_met", suff.condition_met}, {"consistent", suff.consistent}};
  sufficiency["gin_verdict"] = suff.verdict ? Json(to_string(suff.verdict->verdict)) : Json(nullptr);

  auto ann = annihilation_check(ideal, s.imax, s.seed);
  Json annihilation{{"literal", ann.literal}, {"strengthened", ann.strengthened}};
  annihilation["failure"] = ann.failure ? Json{{"a", ann.failure->first}, {"b", ann.failure->second}} : Json(nullptr);
  annihilation["precondition_met"] = check_cwl_direct(ideal, s.imax, s.seed).verdict == Verdict::ComponentwiseLinear;

  auto mb = koszul(ctx).max_betti_check();

  if (ctx.records()) {
    ctx.emit(Json{{"gin_inequality", inequality}, {"betti_identity", identity}, {"proper_sufficiency", sufficiency},
                  {"annihilation", annihilation}, {"max_betti", to_json(mb)}});
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    ctx.out << "beta(R^(c)/I) <= beta(R^(c)/Gin contraction): " << yn(ineq.holds) << (ineq.strict ? " (strict somewhere)" : "") << "\n";
    if (identity.contains("refused")) {
      ctx.out << "Betti identity for componentwise linear ideals: refused (" << identity["refused"].get<std::string>() << ")\n";
    } else {
      ctx.out << "Betti identity for componentwise linear ideals: " << yn(identity["holds"].get<bool>()) << "\n";
    }
    ctx.out << "proper sequence: " << yn(suff.condition_met);
    if (suff.verdict) ctx.out << ", gin-criterion verdict " << to_string(suff.verdict->verdict);
    ctx.out << "\n";
    ctx.out << "m^(c) Tor_i(K, M) = 0: " << yn(ann.literal) << "; m^(c) H_a(b) = 0 for all b: " << yn(ann.strengthened) << "\n";
    ctx.out << "upper bounds h_i(p) <= sum binom(p-j, i-1) alpha_j: " << yn(mb.bounds_hold)
            << "; maximal Betti numbers: " << yn(mb.maximal_betti) << "\n";
    for (const auto& c : mb.cells) {
      ctx.out << "  i=" << c.i << " p=" << c.p << ": h=" << c.h << " bound=" << c.bound << (c.equal ? " equal" : "")
              << " maps_vanish=" << yn(c.maps_vanish) << " annihilated=" << yn(c.annihilated) << "\n";
    }
  }
  return ineq.complete ? 0 : 2;
}

}  // namespace

int run_command(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const Context&)>> table{
      {"present", cmd_present},   {"hilbert", cmd_hilbert},    {"gin", cmd_gin},
      {"contract", cmd_contract}, {"betti", cmd_betti},        {"cwl-check", cmd_cwl},
      {"koszul-table", cmd_koszul}, {"proper-seq", cmd_proper}, {"prop-checks", cmd_props}};
  try {
    auto it = table.find(spec.command);
    if (it == table.end()) throw PreconditionError("unknown command '" + spec.command + "'");
    if (spec.n < 1 || spec.c < 1) throw PreconditionError("n and c must be positive");
    if (spec.imax < 0 || (spec.jmax && *spec.jmax < 0)) throw PreconditionError("bounds must be nonnegative");
    if (spec.ideal_text && spec.ideal_file) throw PreconditionError("give --ideal or --ideal-file, not both");
    auto pres = build_presentation(spec.n, spec.c);
    std::optional<GradedIdeal> ideal;
    if (spec.ideal_text) ideal = minimalize(parse_ideal(*spec.ideal_text, pres));
    if (spec.ideal_file) ideal = minimalize(parse_ideal(read_file(*spec.ideal_file), pres));
    std::optional<Cache> cache;
    if (spec.use_cache) cache.emplace(spec.cache_dir ? std::filesystem::path(*spec.cache_dir) : Cache::default_directory());
    Context ctx{spec, pres, ideal, cache, out};
    return it->second(ctx);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace vcwl
