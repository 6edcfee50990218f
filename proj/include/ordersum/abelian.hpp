#pragma once

// Finite abelian groups in canonical primary decomposition: one partition per
// prime dividing the order, primes ascending, parts non-increasing. Two
// values compare equal exactly when the groups are isomorphic. The trivial
// group has an empty component list and counts as cyclic.
//
// The canonical textual signature is "2:[2,1];3:[1]" (trivial group: "1");
// the invariant-factor display form is "Z12 x Z2" (largest factor first).

#include <ordersum/errors.hpp>
#include <ordersum/numtheory.hpp>
#include <ordersum/rational.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordersum {

inline constexpr Nat kDefaultClassCap = 1'000'000;

struct PrimaryComponent {
  Nat prime = 0;
  Partition partition;
  bool operator==(const PrimaryComponent&) const = default;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group

  // Normalizes: merges repeated primes (multiset union of parts), sorts parts
  // non-increasing and primes ascending. Parts must be >= 1, primes >= 2.
  static AbelianGroup from_components(std::vector<PrimaryComponent> comps) {
    std::map<Nat, std::vector<unsigned>> merged;
    for (auto& c : comps) {
      if (c.prime < 2) throw std::invalid_argument("AbelianGroup: prime must be >= 2");
      for (unsigned part : c.partition.parts) {
        if (part == 0) throw std::invalid_argument("AbelianGroup: parts must be >= 1");
        merged[c.prime].push_back(part);
      }
    }
    std::vector<PrimaryComponent> out;
    for (auto& [p, parts] : merged) {
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.push_back({p, Partition{std::move(parts)}});
    }
    return AbelianGroup(std::move(out));
  }

  const std::vector<PrimaryComponent>& components() const { return components_; }
  bool trivial() const { return components_.empty(); }

  bool operator==(const AbelianGroup&) const = default;

 private:
  explicit AbelianGroup(std::vector<PrimaryComponent> comps) : components_(std::move(comps)) {}

  std::vector<PrimaryComponent> components_;
};

inline AbelianGroup cyclic_group(Nat n) {
  std::vector<PrimaryComponent> comps;
  for (const auto& [p, r] : factorize(n).factors) comps.push_back({p, Partition{{r}}});
  return AbelianGroup::from_components(std::move(comps));
}

// Direct product of the given cyclic groups, e.g. {6,2} -> 2:[1,1];3:[1].
// Each order must be >= 2; the empty list gives the trivial group.
inline AbelianGroup from_cyclic_factors(const std::vector<Nat>& orders) {
  std::vector<PrimaryComponent> comps;
  for (Nat m : orders) {
    if (m < 2) throw std::invalid_argument("from_cyclic_factors: each order must be >= 2");
    for (const auto& [p, r] : factorize(m).factors) comps.push_back({p, Partition{{r}}});
  }
  return AbelianGroup::from_components(std::move(comps));
}

inline bool is_cyclic(const AbelianGroup& g) {
  for (const auto& c : g.components())
    if (c.partition.parts.size() != 1) return false;
  return true;
}

inline AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<PrimaryComponent> comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return AbelianGroup::from_components(std::move(comps));
}

inline Int group_order(const AbelianGroup& g) {
  Int order = 1;
  for (const auto& [p, lam] : g.components()) order *= int_pow(p, lam.sum());
  return order;
}

// Number of isomorphism classes of abelian groups of order n, saturating at
// the Nat maximum on overflow.
inline Nat abelian_class_count(Nat n) {
  Nat count = 1;
  for (const auto& [p, r] : factorize(n).factors) {
    (void)p;
    const Nat pk = partition_count(r);
    if (count > std::numeric_limits<Nat>::max() / pk) return std::numeric_limits<Nat>::max();
    count *= pk;
  }
  return count;
}

// One representative per isomorphism class of abelian groups of order n, in
// lexicographic order of the per-prime partition indices (each prime's
// partitions in reverse-lexicographic order, last prime varying fastest).
// The cyclic group is always first.
inline std::vector<AbelianGroup> enumerate_abelian_groups(Nat n, Nat class_cap = kDefaultClassCap) {
  if (n == 0) throw std::domain_error("enumerate_abelian_groups: n must be >= 1");
  const Nat count = abelian_class_count(n);
  if (count > class_cap)
    throw CapExceededError("abelian class cap exceeded at n=" + std::to_string(n) + " (" +
                               std::to_string(count) + " classes, cap " + std::to_string(class_cap) + ")",
                           n);
  const Factorization f = factorize(n);
  std::vector<std::vector<Partition>> per_prime;
  per_prime.reserve(f.factors.size());
  for (const auto& [p, r] : f.factors) {
    (void)p;
    per_prime.push_back(partitions(r));
  }

  std::vector<AbelianGroup> out;
  out.reserve(count);
  std::vector<std::size_t> idx(f.factors.size(), 0);
  while (true) {
    std::vector<PrimaryComponent> comps;
    comps.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      comps.push_back({f.factors[i].prime, per_prime[i][idx[i]]});
    out.push_back(AbelianGroup::from_components(std::move(comps)));

    std::size_t i = idx.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++idx[i] < per_prime[i].size()) {
        advanced = true;
        break;
      }
      idx[i] = 0;
    }
    if (!advanced) return out;
  }
}

// Canonical textual signature, primes ascending: "2:[2,1];3:[1]"; "1" for the
// trivial group. Used in reports and as a persistence key.
inline std::string signature(const AbelianGroup& g) {
  if (g.trivial()) return "1";
  std::string s;
  for (const auto& [p, lam] : g.components()) {
    if (!s.empty()) s += ';';
    s += std::to_string(p);
    s += ":[";
    for (std::size_t i = 0; i < lam.parts.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(lam.parts[i]);
    }
    s += ']';
  }
  return s;
}

// Display form via invariant factors, largest first: "Z12 x Z2"; "Z1" for the
// trivial group.
inline std::string invariant_factor_form(const AbelianGroup& g) {
  if (g.trivial()) return "Z1";
  std::size_t width = 0;
  for (const auto& c : g.components()) width = std::max(width, c.partition.parts.size());
  std::string s;
  for (std::size_t j = 0; j < width; ++j) {
    Int d = 1;
    for (const auto& [p, lam] : g.components())
      if (j < lam.parts.size()) d *= int_pow(p, lam.parts[j]);
    if (j > 0) s += " x ";
    s += "Z";
    s += d.get_str();
  }
  return s;
}

}  // namespace ordersum
