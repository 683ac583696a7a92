#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace hitchin {

/// Bijection of {0, ..., n-1} stored as its image array.
class Permutation {
 public:
  /// Throws InputError if `images` is not a permutation.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Product of the given disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// (0 1 ... n-1)
  static Permutation cycle(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Orbit lengths, descending, fixed points included.
  std::vector<int> cycle_type() const;
  long long order() const;

  /// (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

 private:
  std::vector<int> images_;
};

/// Subgroup of S_n given by generators.
class PermGroup {
 public:
  /// Throws InputError when a generator has the wrong degree.
  PermGroup(int degree, std::vector<Permutation> generators);
  explicit PermGroup(std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  int degree_;
  std::vector<Permutation> gens_;
};

/// Partition of the symbols into equal blocks; each block sorted, blocks
/// ordered by their smallest element.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks == b.blocks; }
};

/// Every element of the group, by breadth-first closure. Throws
/// DomainError("group too large") once more than `bound` elements appear.
std::vector<Permutation> group_elements(const PermGroup& g, std::size_t bound);

/// Orbit of `x`, sorted.
std::vector<int> orbit(const PermGroup& g, int x);
bool is_transitive(const PermGroup& g);

/// Equal-sized partition, nontrivial (1 < size < n), mapped to itself by every generator.
bool is_block_system(const PermGroup& g, const std::vector<std::vector<int>>& blocks);

/// Finest block system with a and b in one block (Atkinson's union-find
/// closure). nullopt when that system is the single block. Throws
/// DomainError for an intransitive group and InputError for a == b.
std::optional<BlockSystem> minimal_blocks(const PermGroup& g, int a, int b);

struct ImprimitivityVerdict {
  bool imprimitive;
  std::optional<BlockSystem> witness;
};

/// Scans minimal_blocks(0, b) for b = 1..n-1. Throws DomainError
/// ("imprimitivity undefined") for an intransitive group.
ImprimitivityVerdict is_imprimitive(const PermGroup& g);

struct CyclicClassification {
  bool is_cyclic_order_r_transitive;
  bool is_r_cycle_generated;
};

/// Checks whether the group is a transitive cyclic group of order r and
/// whether it is generated by an r-cycle; the first forces the second
/// (std::logic_error otherwise). Requires degree r.
CyclicClassification cyclic_transitive_classification(const PermGroup& g, int r);

struct CoverFactorization {
  bool factorizable;
  /// (m, p) with m, p >= 2 and m p = r: m the degree of the first map, p of the second.
  std::vector<std::pair<int, int>> factorizations;
  /// Block system of the cyclic Galois group when imprimitive.
  std::optional<BlockSystem> witness;
};

/// Factorizability of a cyclic r:1 cover through the imprimitivity of its
/// Galois group <(0 1 ... r-1)>. Throws InputError for r < 2.
CoverFactorization cyclic_cover_factorizable(int r);

}  // namespace hitchin
