#include "hitchin/perm_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hitchin/errors.hpp"

namespace hitchin {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw InputError("image array is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    std::vector<int> images = identity(n).images_;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n) throw InputError("cycle symbol out of range");
      images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
    result = Permutation(std::move(images)) * result;
  }
  return result;
}

Permutation Permutation::cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

long long Permutation::order() const {
  long long o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<long long>(len));
  return o;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
  std::vector<int> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b.images_[i]);
  return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << "[";
  for (std::size_t i = 0; i < p.images_.size(); ++i) os << (i ? " " : "") << p.images_[i];
  return os << "]";
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw InputError("permutation group needs degree >= 1");
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw InputError("generators must all have the group's degree");
}

PermGroup::PermGroup(std::vector<Permutation> generators)
    : PermGroup(generators.empty() ? 0 : generators.front().degree(), generators) {}

std::vector<Permutation> group_elements(const PermGroup& g, std::size_t bound) {
  std::set<Permutation> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> elements{Permutation::identity(g.degree())};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const Permutation current = elements[frontier.front()];
    frontier.pop_front();
    for (const auto& gen : g.generators()) {
      Permutation next = gen * current;
      if (seen.insert(next).second) {
        if (elements.size() >= bound) throw DomainError("group too large");
        elements.push_back(std::move(next));
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

std::vector<int> orbit(const PermGroup& g, int x) {
  std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
  std::vector<int> out{x};
  seen[static_cast<std::size_t>(x)] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& gen : g.generators()) {
      const int y = gen(out[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& g) { return static_cast<int>(orbit(g, 0).size()) == g.degree(); }

bool is_block_system(const PermGroup& g, const std::vector<std::vector<int>>& blocks) {
  const int n = g.degree();
  if (blocks.empty()) return false;
  const std::size_t size = blocks.front().size();
  if (size <= 1 || static_cast<int>(size) >= n) return false;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != size) return false;
    for (int x : blocks[b]) {
      if (x < 0 || x >= n || block_of[static_cast<std::size_t>(x)] != -1) return false;
      block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return false;
  // equal sizes, so landing in a single block means mapping onto it
  for (const auto& gen : g.generators())
    for (const auto& block : blocks) {
      const int target = block_of[static_cast<std::size_t>(gen(block.front()))];
      for (int x : block)
        if (block_of[static_cast<std::size_t>(gen(x))] != target) return false;
    }
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  /// False when already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::optional<BlockSystem> minimal_blocks(const PermGroup& g, int a, int b) {
  const int n = g.degree();
  if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("symbol out of range");
  if (a == b) throw InputError("minimal blocks need two distinct symbols");
  if (!is_transitive(g)) throw DomainError("minimal blocks need a transitive group");

  UnionFind classes(n);
  std::deque<std::pair<int, int>> pending;
  classes.unite(a, b);
  pending.emplace_back(a, b);
  while (!pending.empty()) {
    const auto [x, y] = pending.front();
    pending.pop_front();
    for (const auto& gen : g.generators()) {
      const int gx = gen(x);
      const int gy = gen(y);
      if (classes.unite(gx, gy)) pending.emplace_back(gx, gy);
    }
  }

  std::vector<std::vector<int>> grouped(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) grouped[static_cast<std::size_t>(classes.find(x))].push_back(x);
  BlockSystem system;
  for (auto& block : grouped)
    if (!block.empty()) system.blocks.push_back(std::move(block));
  if (system.blocks.size() == 1) return std::nullopt;
  if (!is_block_system(g, system.blocks)) throw std::logic_error("union-find closure did not produce a block system");
  return system;
}

ImprimitivityVerdict is_imprimitive(const PermGroup& g) {
  if (!is_transitive(g)) throw DomainError("imprimitivity undefined for an intransitive group");
  for (int b = 1; b < g.degree(); ++b)
    if (auto blocks = minimal_blocks(g, 0, b)) return {true, std::move(blocks)};
  return {false, std::nullopt};
}

CyclicClassification cyclic_transitive_classification(const PermGroup& g, int r) {
  if (g.degree() != r) throw InputError("classification needs a group of degree r");
  // a cyclic group of order r has exactly r elements; stop early past that
  std::vector<Permutation> elements;
  try {
    elements = group_elements(g, static_cast<std::size_t>(r));
  } catch (const DomainError&) {
    return {false, false};
  }
  const bool order_r = static_cast<int>(elements.size()) == r;
  const bool cyclic = order_r && std::any_of(elements.begin(), elements.end(), [r](const Permutation& p) {
                        return p.order() == r;
                      });
  const bool transitive = is_transitive(g);
  const bool r_cycle = order_r && std::any_of(elements.begin(), elements.end(), [r](const Permutation& p) {
                         return p.cycle_type() == std::vector<int>{r};
                       });
  CyclicClassification c{cyclic && transitive, r_cycle};
  if (c.is_cyclic_order_r_transitive && !c.is_r_cycle_generated)
    throw std::logic_error("transitive cyclic group of order r without an r-cycle");
  return c;
}

CoverFactorization cyclic_cover_factorizable(int r) {
  if (r < 2) throw InputError("cover degree must be at least 2");
  CoverFactorization out{false, {}, std::nullopt};
  for (int m = 2; m <= r / 2; ++m)
    if (r % m == 0) out.factorizations.emplace_back(m, r / m);

  const PermGroup galois(r, {Permutation::cycle(r)});
  ImprimitivityVerdict verdict = is_imprimitive(galois);
  out.factorizable = verdict.imprimitive;
  out.witness = std::move(verdict.witness);
  if (out.factorizable == out.factorizations.empty())
    throw std::logic_error("imprimitivity of the cyclic group disagrees with the divisors of r");
  return out;
}

}  // namespace hitchin
