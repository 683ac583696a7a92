#include <doctest.h>

#include <numeric>

#include "hitchin/errors.hpp"
#include "hitchin/perm_groups.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

Permutation cycles(int n, const std::vector<std::vector<int>>& c) { return Permutation::from_cycles(n, c); }

bool brute_imprimitive(const std::vector<Permutation>& gens, int n) {
  for (int k = 2; k < n; ++k) {
    if (n % k) continue;
    for (const auto& partition : oracle::equal_partitions(n, k))
      if (std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return oracle::preserves(g, partition); }))
        return true;
  }
  return false;
}

// Blocks for sigma = (0 .. l1-1)(l1 .. l1+l2-1) in S_r following the
// disjoint-cycle recipe: stride blocks of size gcd when the lengths share a
// factor, otherwise blocks of size l1 padded with fixed points.
std::vector<std::vector<int>> disjoint_cycle_blocks(int r, int l1, int l2) {
  const int q = std::gcd(l1, l2);
  std::vector<int> fixed;
  for (int x = l1 + l2; x < r; ++x) fixed.push_back(x);
  std::vector<std::vector<int>> blocks;
  auto chunk = [&](std::vector<int> pool, int size) {
    for (std::size_t i = 0; i < pool.size(); i += static_cast<std::size_t>(size))
      blocks.emplace_back(pool.begin() + static_cast<long>(i), pool.begin() + static_cast<long>(i) + size);
  };
  if (q > 1) {
    for (const auto& [start, len] : {std::pair{0, l1}, std::pair{l1, l2}}) {
      const int stride = len / q;
      for (int i = 0; i < stride; ++i) {
        std::vector<int> block;
        for (int j = i; j < len; j += stride) block.push_back(start + j);
        blocks.push_back(block);
      }
    }
    chunk(fixed, q);
  } else {
    std::vector<int> first(static_cast<std::size_t>(l1));
    std::iota(first.begin(), first.end(), 0);
    blocks.push_back(first);
    std::vector<int> second;
    for (int x = l1; x < l1 + l2; ++x) second.push_back(x);
    second.insert(second.end(), fixed.begin(), fixed.begin() + (l1 - l2));
    blocks.push_back(second);
    chunk(std::vector<int>(fixed.begin() + (l1 - l2), fixed.end()), l1);
  }
  return blocks;
}

}  // namespace

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0}), InputError);
  CHECK_THROWS_AS(Permutation({1, 2}), InputError);
  const Permutation a = cycles(4, {{0, 1}});
  const Permutation b = cycles(4, {{1, 2}});
  CHECK((a * b)(1) == 2);  // b first, then a
  CHECK((a * b)(2) == 0);
  CHECK(Permutation::cycle(5).order() == 5);
  CHECK(cycles(6, {{0, 1}, {2, 3, 4}}).cycle_type() == std::vector<int>{3, 2, 1});
  CHECK(cycles(6, {{0, 1}, {2, 3, 4}}).order() == 6);
  CHECK((Permutation::cycle(7) * Permutation::cycle(7).inverse()).is_identity());
}

TEST_CASE("group closure") {
  CHECK(group_elements(PermGroup({cycles(4, {{0, 1, 2, 3}})}), 100).size() == 4);
  CHECK(group_elements(PermGroup({cycles(3, {{0, 1}}), cycles(3, {{1, 2}})}), 100).size() == 6);
  CHECK(group_elements(PermGroup({cycles(5, {{0, 1}, {2, 3, 4}})}), 100).size() == 6);
  CHECK_THROWS_AS(group_elements(PermGroup({cycles(5, {{0, 1}}), Permutation::cycle(5)}), 50), DomainError);
  CHECK_THROWS_AS(PermGroup(0, {}), InputError);
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(PermGroup({cycles(4, {{0, 1, 2, 3}})})));
  CHECK_FALSE(is_transitive(PermGroup({cycles(4, {{0, 1}, {2, 3}})})));
  CHECK_FALSE(is_transitive(PermGroup({cycles(6, {{0, 1}, {2, 3, 4}})})));
  std::vector<int> o = orbit(PermGroup({cycles(6, {{0, 1}, {2, 3, 4}})}), 3);
  std::sort(o.begin(), o.end());
  CHECK(o == std::vector<int>{2, 3, 4});
}

TEST_CASE("minimal blocks examples") {
  const PermGroup c4({cycles(4, {{0, 1, 2, 3}})});
  const auto blocks = minimal_blocks(c4, 0, 2);
  REQUIRE(blocks);
  CHECK(blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_FALSE(minimal_blocks(c4, 0, 1));

  CHECK_FALSE(minimal_blocks(PermGroup({cycles(3, {{0, 1, 2}})}), 0, 1));
  const PermGroup s4({cycles(4, {{0, 1}}), Permutation::cycle(4)});
  for (int b = 1; b < 4; ++b) CHECK_FALSE(minimal_blocks(s4, 0, b));

  CHECK_THROWS_AS(minimal_blocks(PermGroup({cycles(6, {{0, 1}, {2, 3, 4}})}), 0, 1), DomainError);
  CHECK_THROWS_AS(minimal_blocks(c4, 1, 1), InputError);
}

TEST_CASE("imprimitivity examples") {
  const ImprimitivityVerdict six = is_imprimitive(PermGroup({Permutation::cycle(6)}));
  CHECK(six.imprimitive);
  REQUIRE(six.witness);
  CHECK((six.witness->block_size() == 2 || six.witness->block_size() == 3));
  CHECK_FALSE(is_imprimitive(PermGroup({Permutation::cycle(5)})).imprimitive);
  CHECK_THROWS_AS(is_imprimitive(PermGroup({cycles(6, {{0, 1}, {2, 3, 4}})})), DomainError);
  for (int r = 2; r <= 12; ++r) CHECK(is_imprimitive(PermGroup({Permutation::cycle(r)})).imprimitive == !oracle::is_prime(r));
}

TEST_CASE("minimal blocks agree with brute force on small groups") {
  oracle::Rng rng(401);
  std::vector<std::vector<Permutation>> corpus{
      {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}})},  // dihedral of the square
      {cycles(6, {{0, 1, 2}, {3, 4, 5}}), cycles(6, {{0, 3}, {1, 4}, {2, 5}})},
      {cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cycles(8, {{1, 7}, {2, 6}, {3, 5}})},
      {cycles(6, {{0, 1}}), Permutation::cycle(6)},
  };
  for (int i = 0; i < 40; ++i) {
    const int n = rng.integer(3, 8);
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng.engine());
    std::shuffle(b.begin(), b.end(), rng.engine());
    corpus.push_back({Permutation(a), Permutation(b)});
  }
  int checked = 0;
  for (const auto& gens : corpus) {
    const PermGroup g(gens);
    if (!is_transitive(g)) continue;
    for (int b = 1; b < g.degree(); ++b) {
      const auto blocks = minimal_blocks(g, 0, b);
      const auto brute = oracle::brute_minimal_blocks(gens, g.degree(), 0, b);
      if (brute.empty()) {
        CHECK_FALSE(blocks);
      } else {
        REQUIRE(blocks);
        CHECK(blocks->blocks == brute);
        CHECK(is_block_system(g, blocks->blocks));
      }
      ++checked;
    }
    CHECK(is_imprimitive(g).imprimitive == brute_imprimitive(gens, g.degree()));
  }
  CHECK(checked > 20);
}

TEST_CASE("block system validation") {
  const PermGroup c6({Permutation::cycle(6)});
  CHECK(is_block_system(c6, {{0, 3}, {1, 4}, {2, 5}}));
  CHECK(is_block_system(c6, {{0, 2, 4}, {1, 3, 5}}));
  CHECK_FALSE(is_block_system(c6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK_FALSE(is_block_system(c6, {{0, 1, 2, 3, 4, 5}}));
  CHECK_FALSE(is_block_system(c6, {{0, 3}, {1, 4}}));
}

TEST_CASE("disjoint-cycle generators of order r preserve the constructed blocks") {
  int cases = 0, shared_factor = 0;
  for (int r = 4; r <= 12; ++r) {
    if (oracle::is_prime(r)) continue;
    for (int l1 = 2; l1 <= r; ++l1)
      for (int l2 = 2; l2 <= l1; ++l2) {
        if (std::lcm(l1, l2) != r || l1 + l2 > r) continue;
        std::vector<int> c1(static_cast<std::size_t>(l1)), c2(static_cast<std::size_t>(l2));
        std::iota(c1.begin(), c1.end(), 0);
        std::iota(c2.begin(), c2.end(), l1);
        const Permutation sigma = cycles(r, {c1, c2});
        const PermGroup g(r, {sigma});
        REQUIRE(group_elements(g, 1000).size() == static_cast<std::size_t>(r));
        const auto blocks = disjoint_cycle_blocks(r, l1, l2);
        CHECK(is_block_system(g, blocks));
        CHECK(oracle::preserves(sigma, blocks));
        CHECK(r % static_cast<int>(blocks.front().size()) == 0);
        ++cases;
        shared_factor += std::gcd(l1, l2) > 1;
      }
  }
  CHECK(cases == 4);  // (r; l1, l2) = (6; 3,2), (10; 5,2), (12; 4,3), (12; 6,4)
  CHECK(shared_factor == 1);
}

TEST_CASE("cyclic transitive classification") {
  const CyclicClassification c4 = cyclic_transitive_classification(PermGroup({cycles(4, {{0, 1, 2, 3}})}), 4);
  CHECK(c4.is_cyclic_order_r_transitive);
  CHECK(c4.is_r_cycle_generated);
  const CyclicClassification v4 = cyclic_transitive_classification(PermGroup({cycles(4, {{0, 1}, {2, 3}})}), 4);
  CHECK_FALSE(v4.is_cyclic_order_r_transitive);
  CHECK_FALSE(v4.is_r_cycle_generated);
  CHECK_THROWS_AS(cyclic_transitive_classification(PermGroup({Permutation::cycle(4)}), 5), InputError);
}

TEST_CASE("transitive cyclic groups of order r are generated by r-cycles") {
  for (int r = 1; r <= 6; ++r)
    for (const Permutation& sigma : oracle::symmetric_group(r)) {
      const PermGroup g(r, {sigma});
      const CyclicClassification c = cyclic_transitive_classification(g, r);
      const bool r_cycle = sigma.cycle_type() == std::vector<int>{r};
      CHECK(c.is_cyclic_order_r_transitive == r_cycle);
      if (c.is_cyclic_order_r_transitive) CHECK(c.is_r_cycle_generated);
    }
}

TEST_CASE("cyclic cover factorization") {
  const CoverFactorization four = cyclic_cover_factorizable(4);
  CHECK(four.factorizable);
  CHECK(four.factorizations == std::vector<std::pair<int, int>>{{2, 2}});
  const CoverFactorization five = cyclic_cover_factorizable(5);
  CHECK_FALSE(five.factorizable);
  CHECK(five.factorizations.empty());
  CHECK_FALSE(five.witness);
  const CoverFactorization six = cyclic_cover_factorizable(6);
  CHECK(six.factorizations == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}});
  REQUIRE(six.witness);
  CHECK(is_block_system(PermGroup({Permutation::cycle(6)}), six.witness->blocks));
  CHECK_THROWS_AS(cyclic_cover_factorizable(1), InputError);
  for (int r = 2; r <= 40; ++r) CHECK(cyclic_cover_factorizable(r).factorizable == !oracle::is_prime(r));
}
