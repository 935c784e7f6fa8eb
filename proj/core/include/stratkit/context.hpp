#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stratkit/errors.hpp"

namespace stratkit {

enum class OrderKind : uint8_t { lex, grevlex };

/// Monomial order of a ring. Either a plain lex/grevlex order, or a block
/// order that compares the first `split` variables (with `front`) before the
/// rest (with `back`); block orders with the dropped variables in front are
/// what elimination uses.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int split = 0;  // 0 means no block structure
  OrderKind front = OrderKind::grevlex;
  OrderKind back = OrderKind::grevlex;

  static MonomialOrder lex() { return {OrderKind::lex, 0, {}, {}}; }
  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0, {}, {}}; }
  static MonomialOrder block(int split, OrderKind front = OrderKind::grevlex,
                             OrderKind back = OrderKind::grevlex) {
    MonomialOrder o;
    o.kind = front;  // unused when split > 0, kept coherent anyway
    o.split = split;
    o.front = front;
    o.back = back;
    return o;
  }

  bool is_block() const { return split > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.split != b.split) return false;
    if (a.split > 0) return a.front == b.front && a.back == b.back;
    return a.kind == b.kind;
  }

  std::string str() const {
    auto name = [](OrderKind k) {
      return k == OrderKind::lex ? std::string("lex") : std::string("grevlex");
    };
    if (split > 0)
      return "block(" + std::to_string(split) + "," + name(front) + "," +
             name(back) + ")";
    return name(kind);
  }
};

/// An ordered list of distinct variable names plus the active monomial order.
/// Contexts are immutable and shared by handle; polynomials over the same
/// ring should share one instance, but equality is structural.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, MonomialOrder order)
      : names_(std::move(names)), order_(order) {
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw DomainError("empty variable name");
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw DomainError("duplicate variable name: " + names_[i]);
    }
    if (order_.split < 0 || order_.split >= (int)names_.size() + 1) {
      if (order_.is_block()) throw DomainError("block split out of range");
    }
  }

  int arity() const { return (int)names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return (int)i;
    return -1;
  }
  bool has(const std::string& name) const { return index_of(name) >= 0; }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using Ctx = std::shared_ptr<const VariableContext>;

inline Ctx make_context(std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<VariableContext>(std::move(names), order);
}

inline bool same_ring(const Ctx& a, const Ctx& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const Ctx& a, const Ctx& b, const char* where) {
  if (!same_ring(a, b))
    throw ContextMismatchError(std::string(where) +
                               ": operands live in different rings");
}

}  // namespace stratkit
