#pragma once

// Exact computation of m(G) = sum over a in G of 1/o(a), psi(G) = sum of
// o(a), and the full element-order distribution of a finite abelian group.
//
// m_group is the production path (product over Sylow components);
// m_group_via_distribution sums the convolved distribution instead, and
// m_bruteforce enumerates every element. The three routes are cross-checked
// in the tests; m_group additionally asserts against the distribution path in
// debug builds.

#include <ordersum/abelian.hpp>
#include <ordersum/errors.hpp>
#include <ordersum/numtheory.hpp>
#include <ordersum/rational.hpp>

#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ordersum {

inline constexpr Nat kDefaultOracleCap = 100'000;

// Map from element order to the number of elements of exactly that order.
class OrderDistribution {
 public:
  explicit OrderDistribution(std::map<Int, Int> entries) : entries_(std::move(entries)) {}

  const std::map<Int, Int>& entries() const { return entries_; }

  // Sum of counts = group order.
  Int total() const {
    Int s = 0;
    for (const auto& [d, c] : entries_) s += c;
    return s;
  }

  // Sum of count/order = m(G).
  Rational reciprocal_sum() const {
    Rational s(0);
    for (const auto& [d, c] : entries_) s += Rational(c, d);
    return s;
  }

  // Sum of order*count = psi(G).
  Int weighted_sum() const {
    Int s = 0;
    for (const auto& [d, c] : entries_) s += d * c;
    return s;
  }

  // "{1:1,2:3,4:4}", orders ascending.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, c] : entries_) {
      if (!first) s += ',';
      first = false;
      s += d.get_str();
      s += ':';
      s += c.get_str();
    }
    s += '}';
    return s;
  }

 private:
  std::map<Int, Int> entries_;
};

// m(Z_n) = prod over prime powers of (1 + r_i (p_i - 1)/p_i); 1 for n = 1.
inline Rational m_cyclic(const Factorization& f) {
  Rational m(1);
  for (const auto& [p, r] : f.factors) m *= Rational(1) + Rational(Int(p - 1) * r, Int(p));
  return m;
}

namespace detail {

// Elements of the abelian p-group with partition lam whose order divides p^j:
// p^{sum_i min(a_i, j)}.
inline Int dividing_count(Nat p, const Partition& lam, unsigned j) {
  unsigned long e = 0;
  for (unsigned a : lam.parts) e += std::min(a, j);
  return int_pow(p, e);
}

// (p^j, count of elements of order exactly p^j) for j = 0..max part.
inline std::vector<std::pair<Int, Int>> local_order_counts(Nat p, const Partition& lam) {
  std::vector<std::pair<Int, Int>> local;
  local.emplace_back(1, 1);
  Int prev = 1;
  const unsigned top = lam.parts.empty() ? 0 : lam.parts.front();
  for (unsigned j = 1; j <= top; ++j) {
    Int nj = dividing_count(p, lam, j);
    local.emplace_back(int_pow(p, j), nj - prev);
    prev = std::move(nj);
  }
  return local;
}

}  // namespace detail

// Closed form; handles group orders well beyond enumeration range (1e12+).
inline OrderDistribution order_distribution(const AbelianGroup& g) {
  std::map<Int, Int> full{{Int(1), Int(1)}};
  for (const auto& [p, lam] : g.components()) {
    const auto local = detail::local_order_counts(p, lam);
    std::map<Int, Int> next;
    for (const auto& [d, c] : full)
      for (const auto& [e, k] : local) next[d * e] += c * k;
    full = std::move(next);
  }
  return OrderDistribution(std::move(full));
}

inline Rational m_group_via_distribution(const AbelianGroup& g) {
  return order_distribution(g).reciprocal_sum();
}

// Production path: product of the per-Sylow-component values.
inline Rational m_group(const AbelianGroup& g) {
  Rational m(1);
  for (const auto& [p, lam] : g.components()) {
    Rational mp(0);
    for (const auto& [d, c] : detail::local_order_counts(p, lam)) mp += Rational(c, d);
    m *= mp;
  }
  assert(m == m_group_via_distribution(g));
  return m;
}

inline Int psi_group(const AbelianGroup& g) { return order_distribution(g).weighted_sum(); }

// Independent oracle: enumerates every element as a tuple over the cyclic
// factors, takes the order as the lcm of the component orders (the order of
// v in Z_m is m / gcd(v, m)) and sums the reciprocals exactly.
inline Rational m_bruteforce(const AbelianGroup& g, Nat element_cap = kDefaultOracleCap) {
  std::vector<Nat> moduli;
  Nat total = 1;
  for (const auto& [p, lam] : g.components()) {
    for (unsigned a : lam.parts) {
      Nat m = 1;
      for (unsigned i = 0; i < a; ++i) {
        if (m > element_cap / p)
          throw CapExceededError("brute-force element cap exceeded (group order > " +
                                     std::to_string(element_cap) + ")",
                                 0);
        m *= p;
      }
      if (total > element_cap / m)
        throw CapExceededError("brute-force element cap exceeded (group order > " +
                                   std::to_string(element_cap) + ")",
                               0);
      total *= m;
      moduli.push_back(m);
    }
  }

  std::vector<Nat> v(moduli.size(), 0);
  Rational sum(0);
  while (true) {
    Nat order = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
      order = std::lcm(order, moduli[i] / std::gcd(v[i], moduli[i]));
    sum += Rational(Int(1), Int(order));

    std::size_t i = 0;
    while (i < v.size() && ++v[i] == moduli[i]) v[i++] = 0;
    if (i == v.size()) break;
  }
  return sum;
}

}  // namespace ordersum
