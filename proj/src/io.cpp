#include "vcwl/io.hpp"

#include <algorithm>
#include <sstream>

#include "vcwl/error.hpp"

namespace vcwl {

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

}  // namespace

GradedIdeal parse_ideal(std::string_view text, std::shared_ptr<const VeronesePresentation> pres) {
  auto vars = scan_variables(text);
  std::optional<char> kind;
  for (const auto& [ch, pos] : vars) {
    if (!kind) kind = ch;
    if (ch != *kind) throw ParseError("mixed x and t variables", pos);
  }
  const bool in_x = kind == 'x';
  const Ring ring = in_x ? pres->R() : pres->S();

  std::vector<Polynomial> gens;
  if (std::all_of(text.begin(), text.end(), is_space)) return veronese_ideal(std::move(pres), gens);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && is_space(piece[lead])) ++lead;
    if (lead == piece.size()) throw ParseError("empty generator", start + lead);
    {
      auto f = parse_polynomial(piece, ring, start);
      if (!f.is_zero()) {
        auto deg = f.homogeneous_degree();
        if (!deg) throw ParseError("generator is not homogeneous", start + lead);
        if (in_x) {
          if (*deg % pres->c != 0) {
            throw ParseError("x-degree " + std::to_string(*deg) + " is not divisible by c = " + std::to_string(pres->c),
                             start + lead);
          }
          f = pres->lift(f);
        }
        gens.push_back(f);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return veronese_ideal(std::move(pres), gens);
}

std::string format_ideal(const GradedIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (const auto& g : ideal.generators) {
    if (!s.empty()) s += ", ";
    s += g.to_string();
  }
  return s;
}

Json to_json(const VeronesePresentation& pres) {
  Json images = Json::array();
  for (int i = 0; i < pres.d; ++i) {
    images.push_back(pres.S().var_name(i) + " -> " + monomial_to_string(pres.images[static_cast<std::size_t>(i)], pres.R()));
  }
  Json kernel = Json::array();
  for (const auto& q : pres.kernel) kernel.push_back(q.to_string());
  return Json{{"n", pres.n}, {"c", pres.c}, {"d", pres.d}, {"map", images}, {"kernel", kernel}};
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (int i = 0; i <= table.imax; ++i) {
    for (int j = 0; j <= table.jmax; ++j) {
      if (long v = table.at(i, j)) entries.push_back(Json::array({i, j, v}));
    }
  }
  Json complete = Json::array();
  for (bool b : table.complete) complete.push_back(b);
  return Json{{"imax", table.imax}, {"jmax", table.jmax}, {"entries", entries}, {"complete", complete}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t;
  t.imax = j.at("imax").get<int>();
  t.jmax = j.at("jmax").get<int>();
  t.values.assign(static_cast<std::size_t>(t.imax + 1), std::vector<long>(static_cast<std::size_t>(t.jmax + 1), 0));
  for (const auto& e : j.at("entries")) {
    t.values.at(e.at(0).get<std::size_t>()).at(e.at(1).get<std::size_t>()) = e.at(2).get<long>();
  }
  for (const auto& b : j.at("complete")) t.complete.push_back(b.get<bool>());
  if (static_cast<int>(t.complete.size()) != t.imax + 1) throw Error("malformed Betti record");
  return t;
}

Json to_json(const GinCertificate& cert, const Ring& ring) {
  Json gens = Json::array();
  for (const auto& m : cert.ideal) gens.push_back(monomial_to_string(m, ring));
  Json seeds = Json::array();
  for (auto s : cert.seeds) seeds.push_back(s);
  return Json{{"generators", gens}, {"draws", cert.draws}, {"seeds", seeds}, {"agree", cert.agree},
              {"escalated", cert.escalated}, {"bound", cert.bound}};
}

Json to_json(const BettiWitness& w) {
  return Json{{"i", w.i}, {"j", w.j}, {"beta", w.value}, {"compared", w.other}};
}

Json to_json(const CwlVerdict& v) {
  Json out{{"verdict", to_string(v.verdict)}, {"method", to_string(v.method)}, {"imax", v.imax}, {"jmax", v.jmax}};
  out["min_degree"] = v.min_degree ? Json(*v.min_degree) : Json(nullptr);
  out["max_degree"] = v.max_degree ? Json(*v.max_degree) : Json(nullptr);
  out["witness_component"] = v.witness_component ? Json(*v.witness_component) : Json(nullptr);
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (v.table) out["betti"] = to_json(*v.table);
  if (v.gin_table) out["gin_betti"] = to_json(*v.gin_table);
  if (v.gin_ideal) out["gin_contraction"] = format_ideal(*v.gin_ideal);
  if (v.certificate && v.gin_ideal) out["gin_certificate"] = to_json(*v.certificate, v.gin_ideal->pres->R());
  return out;
}

Json to_json(const KoszulHomologyTable& t) {
  Json cols = Json::array();
  for (int p = 0; p <= t.d; ++p) {
    Json col{{"p", p}};
    Json h = Json::array();
    for (int i = 0; i <= t.imax; ++i) {
      const auto& g = t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
      h.push_back(Json{{"i", i}, {"dims", g.dims}, {"total", g.total}, {"stabilized", g.stabilized}});
    }
    col["h"] = h;
    if (p >= 1) {
      const auto& a = t.alpha[static_cast<std::size_t>(p)];
      col["alpha"] = Json{{"dims", a.dims}, {"total", a.total}, {"stabilized", a.stabilized}};
      col["image_phi"] = t.image[static_cast<std::size_t>(p)];
      col["injective"] = static_cast<bool>(t.injective[static_cast<std::size_t>(p)]);
      col["residual"] = t.residual[static_cast<std::size_t>(p)];
      col["residual_first_variant"] = t.residual_first[static_cast<std::size_t>(p)];
    }
    cols.push_back(col);
  }
  auto fail = [](const std::optional<std::array<int, 3>>& f) {
    return f ? Json{{"p", (*f)[0]}, {"i", (*f)[1]}, {"j", (*f)[2]}} : Json(nullptr);
  };
  return Json{{"d", t.d},
              {"imax", t.imax},
              {"jmax", t.jmax},
              {"columns", cols},
              {"stated_recursion_failure", fail(t.stated_recursion_failure())},
              {"exact_recursion_failure", fail(t.exact_recursion_failure())}};
}

Json to_json(const MaxBettiReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    cells.push_back(Json{{"i", c.i},
                         {"p", c.p},
                         {"h", c.h},
                         {"bound", c.bound},
                         {"holds", c.holds},
                         {"equal", c.equal},
                         {"maps_vanish", c.maps_vanish},
                         {"annihilated", c.annihilated},
                         {"stabilized", c.stabilized}});
  }
  return Json{{"bounds_hold", r.bounds_hold},
              {"equivalence_holds", r.equivalence_holds},
              {"maximal_betti", r.maximal_betti},
              {"annihilation", r.annihilation},
              {"cells", cells}};
}

Json to_json(const ProperSequenceReport& r) {
  Json out{{"proper", r.proper}};
  out["failure"] = r.failure ? Json{{"i", r.failure->first}, {"p", r.failure->second}, {"degree", *r.failure_degree}}
                             : Json(nullptr);
  return out;
}

Json to_json(const HilbertFunction& h) { return Json{{"first", h.first}, {"values", h.values}}; }

std::string format_betti(const BettiTable& table) {
  int top = 0;
  for (int i = 0; i <= table.imax; ++i) {
    for (int j = 0; j <= table.jmax; ++j) {
      if (table.at(i, j)) top = std::max(top, j - i);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int i = 0; i <= table.imax; ++i) header.push_back(std::to_string(i) + (table.complete[static_cast<std::size_t>(i)] ? "" : "*"));
  cells.push_back(header);
  for (int r = 0; r <= top; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= table.imax; ++i) {
      long v = table.at(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& s : row) width = std::max(width, s.size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (const auto& s : row) line += std::string(width + 1 - s.size(), ' ') + s;
    os << line << "\n";
  }
  os << "total:";
  for (int i = 0; i <= table.imax; ++i) os << " " << table.total(i);
  os << "\n";
  return os.str();
}

}  // namespace vcwl
