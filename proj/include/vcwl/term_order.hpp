#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "vcwl/monomial.hpp"

namespace vcwl {

enum class OrderKind { lex, degrevlex, elimination, veronese };

/// A monomial order over a fixed number of variables.
///
/// Variables are ranked by a priority permutation: priority()[0] is the
/// largest variable. The default priority is x1 > x2 > ... .
///
/// elimination: the first `block` variables in priority order form a
/// dominant block, compared by `first`; ties fall through to the remaining
/// variables compared by `second`. Only lex and degrevlex are allowed as
/// block orders.
///
/// veronese: monomials in t1..td are compared through their images
/// t_i -> x^{a_i} under degrevlex in the x-variables, ties broken by lex
/// in the t-variables.
class TermOrder {
 public:
  static TermOrder lex(int nvars);
  static TermOrder degrevlex(int nvars);
  static TermOrder elimination(int nvars, int block, OrderKind first = OrderKind::degrevlex,
                               OrderKind second = OrderKind::degrevlex);
  static TermOrder veronese_compatible(std::vector<Monomial> images);

  TermOrder with_priority(std::vector<int> priority) const;

  OrderKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int block() const { return block_; }
  const std::vector<int>& priority() const { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  friend bool operator==(const TermOrder& a, const TermOrder& b);

 private:
  TermOrder(OrderKind kind, int nvars);

  std::strong_ordering compare_range(OrderKind kind, const Monomial& a, const Monomial& b,
                                     int from, int to) const;

  OrderKind kind_ = OrderKind::degrevlex;
  int nvars_ = 0;
  int block_ = 0;
  OrderKind first_ = OrderKind::degrevlex;
  OrderKind second_ = OrderKind::degrevlex;
  std::vector<int> priority_;
  std::shared_ptr<const std::vector<Monomial>> images_;
};

}  // namespace vcwl
