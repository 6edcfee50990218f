#include <ordersum/order_sum.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "oracles.hpp"

using namespace ordersum;

namespace {

// Moduli of the cyclic factors in the primary decomposition; feeds the
// element-by-element test oracle.
std::vector<Nat> cyclic_moduli(const AbelianGroup& g) {
  std::vector<Nat> moduli;
  for (const auto& [p, lam] : g.components())
    for (unsigned a : lam.parts) {
      Nat m = 1;
      for (unsigned i = 0; i < a; ++i) m *= p;
      moduli.push_back(m);
    }
  return moduli;
}

std::vector<AbelianGroup> all_groups_up_to(Nat max_order) {
  std::vector<AbelianGroup> out;
  for (Nat n = 1; n <= max_order; ++n)
    for (const auto& g : enumerate_abelian_groups(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("m_cyclic: fixed cases") {
  CHECK(m_cyclic(factorize(1)) == Rational(1));
  CHECK(m_cyclic(factorize(4)) == Rational(2));
  CHECK(m_cyclic(factorize(12)) == Rational(10, 3));
  CHECK(m_cyclic(factorize(9)) == Rational(7, 3));
  // m(Z_{q^2}) = 1 + 2(q-1)/q
  for (Nat q : {2, 3, 5, 7, 11, 13})
    CHECK(m_cyclic(factorize(q * q)) == Rational(1) + Rational(Int(2 * (q - 1)), Int(q)));
}

TEST_CASE("order_distribution: fixed cases") {
  CHECK(order_distribution(AbelianGroup{}).str() == "{1:1}");
  CHECK(order_distribution(from_cyclic_factors({4, 2})).str() == "{1:1,2:3,4:4}");
  CHECK(order_distribution(cyclic_group(6)).str() == "{1:1,2:1,3:2,6:2}");
}

TEST_CASE("order_distribution: matches element enumeration up to order 128") {
  for (const auto& g : all_groups_up_to(128)) {
    const auto expected = testoracle::order_histogram(cyclic_moduli(g));
    const OrderDistribution dist = order_distribution(g);
    const auto& got = dist.entries();
    REQUIRE(got.size() == expected.size());
    for (const auto& [d, c] : expected) {
      const Int key(static_cast<unsigned long>(d));
      REQUIRE(got.contains(key));
      REQUIRE(got.at(key) == Int(static_cast<unsigned long>(c)));
    }
  }
}

TEST_CASE("order_distribution: closed form far beyond enumeration range") {
  // order 2^13 * 3^6 * 5^5 * 7^3 = 6401203200000 > 1e12
  const AbelianGroup g = AbelianGroup::from_components({{2, Partition{{13}}},
                                                        {3, Partition{{6}}},
                                                        {5, Partition{{5}}},
                                                        {7, Partition{{3}}}});
  const OrderDistribution dist = order_distribution(g);
  CHECK(dist.total() == group_order(g));
  CHECK(group_order(g) == Int("6401203200000"));
  CHECK(dist.reciprocal_sum() == m_group(g));
  CHECK(dist.entries().count(Int(1)) == 1);
  CHECK(dist.entries().at(Int(1)) == 1);
  // every order divides the exponent (the largest key)
  const Int exponent = dist.entries().rbegin()->first;
  for (const auto& [d, c] : dist.entries()) CHECK(exponent % d == 0);
}

TEST_CASE("m_group: fixed cases") {
  CHECK(m_group(from_cyclic_factors({2, 2})) == Rational(5, 2));
  CHECK(m_group(from_cyclic_factors({4, 2})) == Rational(7, 2));
  CHECK(m_group(AbelianGroup{}) == Rational(1));
  // m(Z_q x Z_q) = 1 + (q^2 - 1)/q
  for (Nat q : {2, 3, 5, 7})
    CHECK(m_group(from_cyclic_factors({q, q})) == Rational(1) + Rational(Int(q * q - 1), Int(q)));
}

TEST_CASE("m_group: agrees with m_cyclic on cyclic groups up to 2000") {
  for (Nat n = 1; n <= 2000; ++n)
    if (m_group(cyclic_group(n)) != m_cyclic(factorize(n))) FAIL("mismatch at n=" << n);
  SUCCEED();
}

TEST_CASE("m_group: Sylow product equals distribution sum up to order 256") {
  for (const auto& g : all_groups_up_to(256))
    if (m_group(g) != m_group_via_distribution(g)) FAIL("mismatch for " << signature(g));
  SUCCEED();
}

TEST_CASE("psi_group: fixed cases") {
  CHECK(psi_group(AbelianGroup{}) == 1);
  CHECK(psi_group(cyclic_group(4)) == 11);
  CHECK(psi_group(from_cyclic_factors({2, 2})) == 7);
  CHECK(psi_group(from_cyclic_factors({6, 2})) == 49);
  CHECK(psi_group(cyclic_group(12)) == 77);
}

TEST_CASE("m_bruteforce: fixed cases and cap") {
  CHECK(m_bruteforce(cyclic_group(1)) == Rational(1));
  CHECK(m_bruteforce(from_cyclic_factors({2, 2})) == Rational(5, 2));
  CHECK(m_bruteforce(from_cyclic_factors({4, 2})) == Rational(7, 2));
  CHECK_THROWS_AS(m_bruteforce(cyclic_group(1 << 17)), CapExceededError);
  CHECK_THROWS_AS(m_bruteforce(cyclic_group(100), 99), CapExceededError);
}

TEST_CASE("m_group equals m_bruteforce for every class up to order 160") {
  for (const auto& g : all_groups_up_to(160))
    if (m_group(g) != m_bruteforce(g)) FAIL("oracle mismatch for " << signature(g));
  SUCCEED();
}

TEST_CASE("multiplicativity: coprime orders exact, non-coprime strictly above") {
  const auto groups = all_groups_up_to(64);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      const Rational product = m_group(a) * m_group(b);
      const Rational combined = m_group(direct_product(a, b));
      const Int ga = group_order(a);
      const Int gb = group_order(b);
      if (gcd(ga, gb) == 1) {
        if (combined != product) FAIL("coprime equality fails: " << signature(a) << " x " << signature(b));
      } else {
        if (combined <= product) FAIL("strict inequality fails: " << signature(a) << " x " << signature(b));
      }
    }
  SUCCEED();
}

TEST_CASE("direct-factor monotonicity: m(A) <= m(AxB), equality iff B trivial") {
  const auto groups = all_groups_up_to(48);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      const Rational lhs = m_group(a);
      const Rational rhs = m_group(direct_product(a, b));
      if (b.trivial()) {
        if (lhs != rhs) FAIL("trivial factor changed m for " << signature(a));
      } else {
        if (lhs >= rhs) FAIL("monotonicity fails: " << signature(a) << " x " << signature(b));
      }
    }
  SUCCEED();
}

TEST_CASE("distribution sanity and m bounds up to order 256") {
  for (const auto& g : all_groups_up_to(256)) {
    const OrderDistribution dist = order_distribution(g);
    const Int order = group_order(g);
    REQUIRE(dist.total() == order);
    REQUIRE(dist.reciprocal_sum() == m_group(g));
    REQUIRE(dist.weighted_sum() == psi_group(g));
    // 1 <= m(G) <= |G|, each equality exactly for the trivial group
    const Rational m = m_group(g);
    REQUIRE(m >= Rational(1));
    REQUIRE(m <= Rational(order));
    if (g.trivial()) {
      REQUIRE(m == Rational(1));
    } else {
      REQUIRE(m > Rational(1));
      REQUIRE(m < Rational(order));
    }
  }
}
