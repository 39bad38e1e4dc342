#include "vcwl/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "vcwl/error.hpp"

namespace vcwl {

TermOrder::TermOrder(OrderKind kind, int nvars) : kind_(kind), nvars_(nvars), priority_(nvars) {
  std::iota(priority_.begin(), priority_.end(), 0);
}

TermOrder TermOrder::lex(int nvars) { return TermOrder(OrderKind::lex, nvars); }

TermOrder TermOrder::degrevlex(int nvars) { return TermOrder(OrderKind::degrevlex, nvars); }

TermOrder TermOrder::elimination(int nvars, int block, OrderKind first, OrderKind second) {
  auto ok = [](OrderKind k) { return k == OrderKind::lex || k == OrderKind::degrevlex; };
  if (!ok(first) || !ok(second)) throw Error("elimination blocks must use lex or degrevlex");
  if (block < 0 || block > nvars) throw DimensionError("elimination block out of range");
  TermOrder o(OrderKind::elimination, nvars);
  o.block_ = block;
  o.first_ = first;
  o.second_ = second;
  return o;
}

TermOrder TermOrder::veronese_compatible(std::vector<Monomial> images) {
  TermOrder o(OrderKind::veronese, static_cast<int>(images.size()));
  o.images_ = std::make_shared<const std::vector<Monomial>>(std::move(images));
  return o;
}

TermOrder TermOrder::with_priority(std::vector<int> priority) const {
  std::vector<int> check = priority;
  std::sort(check.begin(), check.end());
  std::vector<int> ident(static_cast<std::size_t>(nvars_));
  std::iota(ident.begin(), ident.end(), 0);
  if (check != ident) throw Error("priority is not a permutation of the variables");
  TermOrder o = *this;
  o.priority_ = std::move(priority);
  return o;
}

std::strong_ordering TermOrder::compare_range(OrderKind kind, const Monomial& a, const Monomial& b,
                                              int from, int to) const {
  if (kind == OrderKind::degrevlex) {
    int da = 0;
    int db = 0;
    for (int p = from; p < to; ++p) {
      da += a[priority_[p]];
      db += b[priority_[p]];
    }
    if (da != db) return da <=> db;
    for (int p = to - 1; p >= from; --p) {
      int v = priority_[p];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (int p = from; p < to; ++p) {
    int v = priority_[p];
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw DimensionError("term order over " + std::to_string(nvars_) +
                         " variables applied to monomials over " + std::to_string(a.nvars()) +
                         " and " + std::to_string(b.nvars()));
  }
  switch (kind_) {
    case OrderKind::lex:
    case OrderKind::degrevlex:
      return compare_range(kind_, a, b, 0, nvars_);
    case OrderKind::elimination: {
      auto c = compare_range(first_, a, b, 0, block_);
      if (c != 0) return c;
      return compare_range(second_, a, b, block_, nvars_);
    }
    case OrderKind::veronese: {
      const auto& img = *images_;
      int n = img.front().nvars();
      Monomial ia(n);
      Monomial ib(n);
      for (int j = 0; j < n; ++j) {
        int ea = 0;
        int eb = 0;
        for (int i = 0; i < nvars_; ++i) {
          ea += a[i] * img[i][j];
          eb += b[i] * img[i][j];
        }
        ia.set(j, ea);
        ib.set(j, eb);
      }
      auto c = TermOrder::degrevlex(n).compare(ia, ib);
      if (c != 0) return c;
      return compare_range(OrderKind::lex, a, b, 0, nvars_);
    }
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const {
  auto kind_name = [](OrderKind k) {
    switch (k) {
      case OrderKind::lex: return std::string("lex");
      case OrderKind::degrevlex: return std::string("degrevlex");
      case OrderKind::elimination: return std::string("elimination");
      case OrderKind::veronese: return std::string("veronese");
    }
    return std::string();
  };
  std::string s = kind_name(kind_);
  if (kind_ == OrderKind::elimination) {
    s += "(" + std::to_string(block_) + "," + kind_name(first_) + "," + kind_name(second_) + ")";
  }
  std::vector<int> ident(priority_.size());
  std::iota(ident.begin(), ident.end(), 0);
  if (priority_ != ident) {
    s += "[";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority_[i] + 1);
    }
    s += "]";
  }
  return s;
}

bool operator==(const TermOrder& a, const TermOrder& b) {
  if (a.kind_ != b.kind_ || a.nvars_ != b.nvars_ || a.block_ != b.block_ || a.first_ != b.first_ ||
      a.second_ != b.second_ || a.priority_ != b.priority_) {
    return false;
  }
  if (a.images_ == b.images_) return true;
  return a.images_ && b.images_ && *a.images_ == *b.images_;
}

}  // namespace vcwl
