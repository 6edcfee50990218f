#pragma once

// Integer primitives: factorization, Euler's totient, 2-adic splitting and
// integer partitions. All operations are pure and deterministic.

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ordersum {

using Nat = std::uint64_t;

struct PrimePower {
  Nat prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
  Nat n = 1;
  std::vector<PrimePower> factors;

  // q and p in the bound formulas; require n >= 2.
  Nat smallest_prime() const { return factors.front().prime; }
  Nat largest_prime() const { return factors.back().prime; }

  bool operator==(const Factorization&) const = default;
};

// Deterministic trial division; ample for the supported range (n up to ~1e12).
inline Factorization factorize(Nat n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  Nat m = n;
  for (Nat d = 2; d <= m / d; d += (d == 2) ? 1 : 2) {
    if (m % d != 0) continue;
    unsigned r = 0;
    while (m % d == 0) {
      m /= d;
      ++r;
    }
    f.factors.push_back({d, r});
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

// phi(n) = prod (p_i - 1) p_i^{r_i - 1}; phi(1) = 1.
inline Nat euler_phi(const Factorization& f) {
  Nat phi = 1;
  for (const auto& [p, r] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < r; ++i) phi *= p;
  }
  return phi;
}

struct TwoAdicSplit {
  unsigned t = 0;
  Nat l = 1;  // odd
  bool operator==(const TwoAdicSplit&) const = default;
};

// n = 2^t * l with l odd.
inline TwoAdicSplit two_adic_split(Nat n) {
  if (n == 0) throw std::domain_error("two_adic_split: n must be >= 1");
  const unsigned t = static_cast<unsigned>(std::countr_zero(n));
  return {t, n >> t};
}

// Non-increasing positive parts; indexes an isomorphism class of abelian
// p-groups (the part list is the tower of exponents of the cyclic factors).
struct Partition {
  std::vector<unsigned> parts;

  unsigned sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
  bool operator==(const Partition&) const = default;
};

// All partitions of k in reverse-lexicographic order, so partitions(4) is
// [4], [3,1], [2,2], [2,1,1], [1,1,1,1]. partitions(0) is {[]}.
inline std::vector<Partition> partitions(unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rem, unsigned bound) -> void {
    if (rem == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (unsigned first = std::min(rem, bound); first >= 1; --first) {
      cur.push_back(first);
      self(self, rem - first, first);
      cur.pop_back();
    }
  };
  rec(rec, k, k == 0 ? 1 : k);
  return out;
}

// p(k) without materializing the list; used for enumeration cap checks.
inline Nat partition_count(unsigned k) {
  std::vector<Nat> dp(k + 1, 0);
  dp[0] = 1;
  for (unsigned part = 1; part <= k; ++part)
    for (unsigned j = part; j <= k; ++j) dp[j] += dp[j - part];
  return dp[k];
}

}  // namespace ordersum
