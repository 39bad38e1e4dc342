#include "vcwl/monomial.hpp"

#include <algorithm>

#include "vcwl/error.hpp"

namespace vcwl {

Monomial::Monomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw DimensionError("monomial variable count out of range: " + std::to_string(nvars));
  }
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(static_cast<int>(exponents.size())) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= nvars_) throw DimensionError("variable index out of range");
  if (e < 0 || e > 0xffff) throw DimensionError("exponent out of range");
  auto& slot = exps_[static_cast<std::size_t>(i)];
  degree_ += e - slot;
  slot = static_cast<std::uint16_t>(e);
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

void Monomial::check_same(const Monomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("monomials over " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same(other);
  for (int i = 0; i < nvars_; ++i) exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (other.exps_[i] > exps_[i]) throw DimensionError("monomial quotient is not exact");
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  check_same(other);
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) r.set(i, std::min(exps_[i], other.exps_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same(other);
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ <=> b.nvars_;
  for (int i = 0; i < a.nvars_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(nvars_) * 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < nvars_; ++i) {
    h ^= exps_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate(int nvars, int pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(pos, e);
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

}  // namespace vcwl
