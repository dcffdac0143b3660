#include "oligo/block_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oligo/error.hpp"

namespace oligo
{

namespace
{

struct UnionFind
{
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n))
  {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }

  SetPartition partition()
  {
    int const n = static_cast<int>(parent.size());
    std::map<int, std::vector<Point>> classes;
    for (int x = 0; x < n; ++x)
      classes[find(x)].push_back(x);
    std::vector<std::vector<Point>> blocks;
    for (auto &[root, members] : classes)
      blocks.push_back(std::move(members));
    return SetPartition(n, std::move(blocks));
  }

  std::vector<int> parent;
};

} // namespace

BlockSystem::BlockSystem(FiniteGroup group, SetPartition partition)
: group_(std::move(group)),
  partition_(std::move(partition))
{
  if (!is_block_system(group_, partition_))
    throw DomainError("partition " + partition_.str() + " is not a block system");
}

bool is_block_system(FiniteGroup const &group, SetPartition const &partition)
{
  if (partition.domain() != group.degree())
    throw DomainError("partition domain does not match the group degree");
  for (auto const &g : group.generators())
    for (auto const &block : partition.blocks()) {
      int const target = partition.block_of(g(block.front()));
      for (Point x : block)
        if (partition.block_of(g(x)) != target)
          return false;
    }
  return true;
}

SetPartition meet(SetPartition const &a, SetPartition const &b)
{
  if (a.domain() != b.domain())
    throw DomainError("meet of partitions over different domains");
  std::map<std::pair<int, int>, std::vector<Point>> cells;
  for (Point x = 0; x < a.domain(); ++x)
    cells[{a.block_of(x), b.block_of(x)}].push_back(x);
  std::vector<std::vector<Point>> blocks;
  for (auto &[key, members] : cells)
    blocks.push_back(std::move(members));
  return SetPartition(a.domain(), std::move(blocks));
}

SetPartition join(SetPartition const &a, SetPartition const &b)
{
  if (a.domain() != b.domain())
    throw DomainError("join of partitions over different domains");
  UnionFind uf(a.domain());
  for (auto const *p : {&a, &b})
    for (auto const &block : p->blocks())
      for (Point x : block)
        uf.unite(block.front(), x);
  return uf.partition();
}

SetPartition minimal_partition(FiniteGroup const &group,
                               std::vector<std::pair<Point, Point>> const &pairs)
{
  UnionFind uf(group.degree());
  std::vector<std::pair<Point, Point>> queue;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b))
      queue.emplace_back(a, b);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto const [x, y] = queue[k];
    for (auto const &g : group.generators())
      if (uf.unite(g(x), g(y)))
        queue.emplace_back(g(x), g(y));
  }
  return uf.partition();
}

std::vector<Point> minimal_block(FiniteGroup const &group, Point a, Point b)
{
  if (a < 0 || b < 0 || a >= group.degree() || b >= group.degree())
    throw DomainError("minimal_block: point outside the domain");
  for (auto const &orbit : orbits_points(group)) {
    bool const has_a = std::binary_search(orbit.begin(), orbit.end(), a);
    bool const has_b = std::binary_search(orbit.begin(), orbit.end(), b);
    if (has_a != has_b)
      throw PreconditionError("minimal_block: points lie in different orbits");
  }
  auto p = minimal_partition(group, {{a, b}});
  return p.block(p.block_of(a));
}

std::vector<BlockSystem> all_block_systems(FiniteGroup const &group, Limits const &limits)
{
  int const n = group.degree();
  if (n > limits.max_block_system_degree)
    throw SizeLimitError("all_block_systems: degree " + std::to_string(n) +
                         " above cap " + std::to_string(limits.max_block_system_degree));

  // Every G-stable equivalence is the join of the minimal partitions of the
  // pairs it contains, so join-closing the atoms is complete.
  std::set<SetPartition> atoms;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      atoms.insert(minimal_partition(group, {{a, b}}));

  std::set<SetPartition> found{SetPartition::singletons(n)};
  std::vector<SetPartition> frontier(atoms.begin(), atoms.end());
  found.insert(atoms.begin(), atoms.end());
  std::size_t const cap = 200'000;
  while (!frontier.empty()) {
    std::vector<SetPartition> next;
    for (auto const &p : frontier)
      for (auto const &atom : atoms) {
        auto j = join(p, atom);
        if (found.insert(j).second) {
          next.push_back(std::move(j));
          if (found.size() > cap)
            throw SizeLimitError("all_block_systems: too many block systems");
        }
      }
    frontier = std::move(next);
  }

  std::vector<SetPartition> ordered(found.begin(), found.end());
  std::sort(ordered.begin(), ordered.end(), [](auto const &x, auto const &y) {
    if (x.size() != y.size())
      return x.size() > y.size();
    return x.blocks() < y.blocks();
  });
  std::vector<BlockSystem> result;
  for (auto &p : ordered)
    result.emplace_back(group, std::move(p));
  return result;
}

} // namespace oligo
