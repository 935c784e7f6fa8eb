#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "stratkit/context.hpp"

namespace stratkit {

/// Exponent vector of fixed length (the ring arity).
struct Monomial {
  std::vector<uint32_t> e;

  Monomial() = default;
  explicit Monomial(int arity) : e(arity, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

  int arity() const { return (int)e.size(); }
  long degree() const {
    return std::accumulate(e.begin(), e.end(), 0L);
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // Requires divides(o) in the o/this direction checked by the caller.
  Monomial div(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

namespace detail {

// lex over e[lo..hi): first differing exponent decides.
inline int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

// grevlex over e[lo..hi): higher total degree wins; ties broken by the
// *smallest* trailing exponent being larger meaning smaller monomial.
inline int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

inline int cmp_plain(OrderKind k, const Monomial& a, const Monomial& b, int lo,
                     int hi) {
  return k == OrderKind::lex ? cmp_lex(a, b, lo, hi)
                             : cmp_grevlex(a, b, lo, hi);
}

}  // namespace detail

/// Three-way comparison under `order`; negative means a < b.
inline int compare(const MonomialOrder& order, const Monomial& a,
                   const Monomial& b) {
  const int n = a.arity();
  if (order.is_block()) {
    int c = detail::cmp_plain(order.front, a, b, 0, order.split);
    if (c) return c;
    return detail::cmp_plain(order.back, a, b, order.split, n);
  }
  return detail::cmp_plain(order.kind, a, b, 0, n);
}

}  // namespace stratkit
