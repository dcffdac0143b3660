// Deliberately simple reference computations used to cross-check the library.
// Nothing here goes through stabilizer chains, canonizers or Molien sums.
#ifndef OLIGO_TESTS_NAIVE_HPP
#define OLIGO_TESTS_NAIVE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oligo/finite_group.hpp"

namespace naive
{

using Perm = std::vector<int>;

inline Perm compose(Perm const &a, Perm const &b) // a after b
{
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

inline std::vector<Perm> to_perms(oligo::FiniteGroup const &g)
{
  std::vector<Perm> out;
  for (auto const &p : g.generators())
    out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

/// All elements by breadth-first closure under the generators.
inline std::set<Perm> closure(std::vector<Perm> const &gens, int degree)
{
  Perm id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (auto const &g : gens) {
      Perm q = compose(g, p);
      if (seen.insert(q).second)
        todo.push_back(q);
    }
  }
  return seen;
}

inline std::set<Perm> closure(oligo::FiniteGroup const &g)
{
  return closure(to_perms(g), g.degree());
}

inline std::uint64_t image_mask(Perm const &p, std::uint64_t mask)
{
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (mask >> x & 1U)
      out |= std::uint64_t{1} << p[x];
  return out;
}

/// Orbits of n-subsets for n = 0..nmax, by exhausting all subsets.
inline std::vector<long> profile(std::set<Perm> const &elements, int degree, int nmax)
{
  std::vector<long> counts(static_cast<std::size_t>(nmax) + 1, 0);
  std::set<std::uint64_t> seen;
  std::uint64_t const total = std::uint64_t{1} << degree;
  for (std::uint64_t m = 0; m < total; ++m) {
    int const n = __builtin_popcountll(m);
    if (n > nmax || seen.count(m))
      continue;
    ++counts[static_cast<std::size_t>(n)];
    for (auto const &p : elements)
      seen.insert(image_mask(p, m));
  }
  return counts;
}

inline std::vector<long> profile(oligo::FiniteGroup const &g, int nmax)
{
  return profile(closure(g), g.degree(), nmax);
}

/// Power series of num / prod (1 - z^d) up to z^n, long arithmetic.
inline std::vector<long> expand(std::vector<long> num, std::vector<int> const &degrees, int n)
{
  num.resize(static_cast<std::size_t>(n) + 1, 0);
  for (int d : degrees)
    for (int i = d; i <= n; ++i)
      num[i] += num[i - d];
  return num;
}

inline std::vector<long> as_long(std::vector<oligo::BigInt> const &v)
{
  std::vector<long> out;
  for (auto const &x : v)
    out.push_back(static_cast<long>(x));
  return out;
}

/// A random permutation of degree n.
inline oligo::Permutation random_perm(std::mt19937 &rng, int n)
{
  std::vector<oligo::Point> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return oligo::Permutation(images);
}

/// Random subgroup of S_n: a few generators, each a random permutation or a
/// product of random disjoint transpositions, so that small and intransitive
/// groups show up too.
inline oligo::FiniteGroup random_group(std::mt19937 &rng, int n)
{
  std::uniform_int_distribution<int> count(1, 2), kind(0, 2);
  std::vector<oligo::Permutation> gens;
  for (int i = count(rng); i > 0; --i) {
    if (kind(rng) == 0 || n < 2) {
      gens.push_back(random_perm(rng, n));
      continue;
    }
    std::vector<oligo::Point> pts(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      pts[x] = x;
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<oligo::Point> images(pts.size());
    for (int x = 0; x < n; ++x)
      images[x] = x;
    int const swaps = std::uniform_int_distribution<int>(1, n / 2)(rng);
    for (int s = 0; s < swaps; ++s)
      std::swap(images[pts[2 * s]], images[pts[2 * s + 1]]);
    gens.emplace_back(images);
  }
  return oligo::FiniteGroup(n, gens);
}

/// All set partitions of {0..n-1}, as block-index vectors.
inline std::vector<std::vector<int>> set_partitions(int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto &self, int i, int blocks) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0)
    out.push_back({});
  else
    rec(rec, 0, 0);
  return out;
}

inline bool stable(std::vector<Perm> const &gens, std::vector<int> const &label)
{
  for (auto const &g : gens) {
    std::vector<int> to(label.size(), -1);
    for (std::size_t x = 0; x < label.size(); ++x) {
      int &t = to[static_cast<std::size_t>(label[x])];
      int const l = label[static_cast<std::size_t>(g[x])];
      if (t == -1)
        t = l;
      else if (t != l)
        return false;
    }
  }
  return true;
}

} // namespace naive

#endif
