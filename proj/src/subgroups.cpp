#include "oligo/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "oligo/error.hpp"

namespace oligo
{

namespace
{

/// Elements of a small group with a multiplication table; subgroups are
/// bit masks over element indices.
struct ElementTable
{
  explicit ElementTable(FiniteGroup const &group, Limits const &limits)
  : degree(group.degree()),
    elements(group.elements(limits))
  {
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], static_cast<int>(i));
    std::size_t const n = elements.size();
    product.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        product[i * n + j] = index.at(elements[i] * elements[j]);
    words = (n + 63) / 64;
  }

  using Mask = std::vector<std::uint64_t>;

  Mask empty_mask() const { return Mask(words, 0); }
  static bool test(Mask const &m, int i) { return (m[i / 64] >> (i % 64)) & 1u; }
  static void set(Mask &m, int i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

  Mask closure(std::vector<int> const &gens) const
  {
    std::size_t const n = elements.size();
    Mask m = empty_mask();
    int const identity = index.at(Permutation(degree));
    std::vector<int> queue{identity};
    set(m, identity);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int g : gens) {
        int const p = product[static_cast<std::size_t>(queue[k]) * n + g];
        if (!test(m, p)) {
          set(m, p);
          queue.push_back(p);
        }
      }
    return m;
  }

  std::vector<int> members(Mask const &m) const
  {
    std::vector<int> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (test(m, static_cast<int>(i)))
        out.push_back(static_cast<int>(i));
    return out;
  }

  /// Small generating set for the subgroup given by a mask.
  std::vector<int> generators_of(Mask const &m) const
  {
    std::vector<int> gens;
    Mask span = closure(gens);
    for (int e : members(m)) {
      if (test(span, e))
        continue;
      gens.push_back(e);
      span = closure(gens);
    }
    return gens;
  }

  FiniteGroup group_of(Mask const &m) const
  {
    std::vector<Permutation> gens;
    for (int e : generators_of(m))
      gens.push_back(elements[e]);
    return FiniteGroup(degree, std::move(gens));
  }

  /// All subgroup masks (closed under joins with cyclic subgroups).
  std::vector<Mask> subgroups(bool up_to_conjugacy) const
  {
    std::size_t const n = elements.size();
    std::vector<int> inverse(n);
    for (std::size_t i = 0; i < n; ++i)
      inverse[i] = index.at(elements[i].inverse());

    auto canonical = [&](Mask const &m) {
      if (!up_to_conjugacy)
        return m;
      auto const mem = members(m);
      Mask best = m;
      for (std::size_t c = 0; c < n; ++c) {
        Mask conj = empty_mask();
        for (int e : mem)
          set(conj, product[product[c * n + e] * n + inverse[c]]);
        if (conj < best)
          best = conj;
      }
      return best;
    };

    std::set<Mask> seen;
    std::map<Mask, Mask> canon_cache;
    std::vector<Mask> queue{closure({})};
    seen.insert(queue.front());
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto const base_gens = generators_of(queue[k]);
      for (std::size_t g = 0; g < n; ++g) {
        if (test(queue[k], static_cast<int>(g)))
          continue;
        auto gens = base_gens;
        gens.push_back(static_cast<int>(g));
        Mask joined = closure(gens);
        auto it = canon_cache.find(joined);
        if (it == canon_cache.end())
          it = canon_cache.emplace(joined, canonical(joined)).first;
        if (seen.insert(it->second).second)
          queue.push_back(it->second);
      }
    }
    return queue;
  }

  int degree;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, int, PermutationHash> index;
  std::vector<int> product;
  std::size_t words;
};

std::vector<FiniteGroup> ordered_groups(ElementTable const &table,
                                        std::vector<ElementTable::Mask> const &masks)
{
  std::vector<std::pair<std::pair<std::size_t, std::vector<int>>, FiniteGroup>> keyed;
  for (auto const &m : masks) {
    auto mem = table.members(m);
    keyed.push_back({{mem.size(), mem}, table.group_of(m)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  std::vector<FiniteGroup> out;
  for (auto &k : keyed)
    out.push_back(std::move(k.second));
  return out;
}

} // namespace

std::vector<FiniteGroup> all_subgroups(FiniteGroup const &group, Limits const &limits)
{
  if (group.order() > 5040)
    throw SizeLimitError("all_subgroups: group order above 5040");
  ElementTable table(group, limits);
  return ordered_groups(table, table.subgroups(false));
}

std::vector<FiniteGroup> symmetric_subgroup_classes(int n)
{
  if (n < 0 || n > 6)
    throw SizeLimitError("symmetric_subgroup_classes: degree above 6");
  if (n == 0)
    return {FiniteGroup::trivial(0)};
  ElementTable table(FiniteGroup::symmetric(n), Limits::defaults());
  return ordered_groups(table, table.subgroups(true));
}

} // namespace oligo
