#include "vcwl/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "vcwl/error.hpp"

namespace vcwl {

std::string Ring::var_name(int i) const {
  if (i < x_vars) return "x" + std::to_string(i + 1);
  return "t" + std::to_string(i - x_vars + 1);
}

std::string Ring::name() const {
  if (t_vars == 0) return "R[" + std::to_string(x_vars) + "]";
  if (x_vars == 0) return "S[" + std::to_string(t_vars) + "]";
  return "R[" + std::to_string(x_vars) + "]xS[" + std::to_string(t_vars) + "]";
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  return term(ring, Monomial(ring.nvars()), c);
}

Polynomial Polynomial::variable(Ring ring, int index) {
  return term(ring, Monomial::variable(ring.nvars(), index));
}

Polynomial Polynomial::term(Ring ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != ring_.nvars()) {
    throw DimensionError("monomial over " + std::to_string(m.nvars()) + " variables added to " +
                         ring_.name());
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  Rational lc = leading_term(order).second;
  Polynomial p = *this;
  p *= Rational(1) / lc;
  return p;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw DimensionError("ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::multiply(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_hint(r.terms_.end(), mt * m, ct * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, Ring target) const {
  if (static_cast<int>(images.size()) != ring_.nvars()) {
    throw DimensionError("substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (!(img.ring() == target)) throw DimensionError("substitution images in the wrong ring");
  }
  // powers[i][e] = images[i]^e, built on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (int i = 0; i < ring_.nvars(); ++i) {
      if (m[i] > 0) t = t * power(static_cast<std::size_t>(i), m[i]);
    }
    r += t;
  }
  return r;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  auto order = TermOrder::degrevlex(ring_.nvars());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::string s;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto& [m, c] = sorted[k];
    Rational a = abs(c);
    if (k == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = m.degree() == 0;
    if (a != 1 || unit) {
      s += vcwl::to_string(a);
      if (!unit) s += "*";
    }
    if (!unit) s += monomial_to_string(m, ring_);
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ring ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = parse_term();
      result.add_term(m, sign * c);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Rational> parse_term() {
    Monomial m(ring_.nvars());
    Rational c = 1;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = read_digits();
        if (!at_end() && peek() == '/') {
          ++pos_;
          std::size_t den_pos = pos_;
          std::string den = read_digits();
          if (den.empty()) fail("expected denominator");
          if (Integer(den) == 0) throw ParseError("zero denominator", offset_ + den_pos);
          num += "/" + den;
        }
        c *= parse_rational(num);
      } else if (ch == 'x' || ch == 't') {
        std::size_t var_pos = pos_;
        ++pos_;
        std::string idx = read_digits();
        if (idx.empty()) fail("expected variable index after '" + std::string(1, ch) + "'");
        long k = std::stol(idx);
        int var = -1;
        if (ch == 'x' && k >= 1 && k <= ring_.x_vars) var = static_cast<int>(k - 1);
        if (ch == 't' && k >= 1 && k <= ring_.t_vars) var = ring_.x_vars + static_cast<int>(k - 1);
        if (var < 0) {
          throw ParseError("variable " + std::string(1, ch) + idx + " not in " + ring_.name(),
                           offset_ + var_pos);
        }
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          std::string p = read_digits();
          if (p.empty()) fail("expected exponent after '^'");
          e = std::stoi(p);
        }
        m.set(var, m[var] + e);
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
      }
    }
    if (!any) fail("expected a term");
    return {m, c};
  }

  std::string_view text_;
  Ring ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Ring ring, std::size_t offset) {
  return Parser(text, ring, offset).parse();
}

std::vector<std::pair<char, std::size_t>> scan_variables(std::string_view text) {
  std::vector<std::pair<char, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] == 'x' || text[i] == 't') && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      out.emplace_back(text[i], i);
    }
  }
  return out;
}

}  // namespace vcwl
