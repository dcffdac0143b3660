#include "oligo/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "oligo/error.hpp"
#include "oligo/polynomial.hpp"
#include "oligo/series.hpp"

namespace oligo
{

namespace
{

BigInt factorial(int n)
{
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::vector<Point> iota_points(int from, int to)
{
  std::vector<Point> v(static_cast<std::size_t>(std::max(0, to - from)));
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::size_t local_index(std::vector<Point> const &sorted, Point x)
{
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x)
    throw DomainError("point " + std::to_string(x) + " outside the expected block");
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Setwise stabilizer of one block of a block system, by pointwise
/// stabilizing the block in the action extended by the block action.
FiniteGroup block_stabilizer(FiniteGroup const &group, SetPartition const &partition,
                             std::size_t block)
{
  int const n = group.degree();
  int const m = static_cast<int>(partition.size());
  std::vector<Permutation> ext;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(n + m));
    for (int x = 0; x < n; ++x)
      images[x] = g(x);
    for (int b = 0; b < m; ++b)
      images[n + b] = n + partition.block_of(g(partition.block(b).front()));
    ext.emplace_back(std::move(images));
  }
  FiniteGroup const big(n + m, std::move(ext));
  return restriction(pointwise_stabilizer(big, {n + static_cast<Point>(block)}),
                     iota_points(0, n));
}

/// Restriction onto an ordered list of points: points[i] becomes i.
FiniteGroup restrict_ordered(FiniteGroup const &group, std::vector<Point> const &points)
{
  std::vector<Point> where(static_cast<std::size_t>(group.degree()), -1);
  for (std::size_t i = 0; i < points.size(); ++i)
    where[points[i]] = static_cast<Point>(i);
  std::vector<Permutation> gens;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      images[i] = where[g(points[i])];
      if (images[i] < 0)
        throw DomainError("restriction to a set that is not stable");
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup(static_cast<int>(points.size()), std::move(gens));
}

void require_symmetric_on_blocks(InducedAction const &ia, std::size_t blocks)
{
  if (ia.image.order() != factorial(static_cast<int>(blocks)))
    throw PreconditionError("action on the blocks is not the full symmetric group");
}

} // namespace

// --- truncation -------------------------------------------------------------

SetPartition Truncation::copy_partition() const
{
  std::vector<std::vector<Point>> blocks;
  for (auto const &per_block : copies)
    for (auto const &c : per_block)
      blocks.push_back(c);
  for (Point x : kernel)
    blocks.push_back({x});
  return SetPartition(group.degree(), std::move(blocks));
}

namespace
{

struct Layout
{
  std::vector<std::vector<std::vector<Point>>> copies;
  std::vector<Point> kernel;
  int degree = 0;
};

Layout layout(DecoratedGroup const &delta, int k, Limits const &limits)
{
  if (k < 1)
    throw DomainError("truncate: k must be at least 1");
  Layout out;
  out.copies.resize(delta.blocks().size());
  int next = 0;
  for (std::size_t j = 0; j < delta.blocks().size(); ++j) {
    auto const &dec = delta.decoration(j);
    if (dec.kind == HHKind::TrivialKernel)
      continue;
    int const s = is_rev(dec.kind) ? 1 : static_cast<int>(delta.blocks().block(j).size());
    for (int i = 0; i < k; ++i) {
      out.copies[j].push_back(iota_points(next, next + s));
      next += s;
    }
  }
  if (auto kb = delta.kernel_block()) {
    auto const size = static_cast<int>(delta.blocks().block(*kb).size());
    out.kernel = iota_points(next, next + size);
    next += size;
  }
  out.degree = next;
  if (out.degree > limits.max_truncation_degree)
    throw SizeLimitError("truncation degree " + std::to_string(out.degree) + " above cap " +
                         std::to_string(limits.max_truncation_degree));
  return out;
}

/// Generators of prod_j H_j wr S_k on the layout.
std::vector<Permutation> minimal_subgroup_generators(DecoratedGroup const &delta, Layout const &L)
{
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < L.copies.size(); ++j) {
    auto const &copies = L.copies[j];
    if (copies.empty())
      continue;
    auto const &dec = delta.decoration(j);
    if (!is_rev(dec.kind))
      for (auto const &h : dec.H.generators()) {
        std::vector<Point> images(static_cast<std::size_t>(L.degree));
        std::iota(images.begin(), images.end(), 0);
        for (std::size_t a = 0; a < copies[0].size(); ++a)
          images[copies[0][a]] = copies[0][static_cast<std::size_t>(h(static_cast<Point>(a)))];
        gens.emplace_back(std::move(images));
      }
    int const k = static_cast<int>(copies.size());
    auto copy_map = [&](auto const &target) {
      std::vector<Point> images(static_cast<std::size_t>(L.degree));
      std::iota(images.begin(), images.end(), 0);
      for (int i = 0; i < k; ++i)
        for (std::size_t a = 0; a < copies[i].size(); ++a)
          images[copies[i][a]] = copies[target(i)][a];
      return Permutation(std::move(images));
    };
    if (k >= 2) {
      gens.push_back(copy_map([k](int i) { return (i + 1) % k; }));
      gens.push_back(copy_map([](int i) { return i < 2 ? 1 - i : i; }));
    }
  }
  return gens;
}

} // namespace

Truncation truncate(DecoratedGroup const &delta, int k, Limits const &limits)
{
  require_valid(delta);
  Layout L = layout(delta, k, limits);
  std::vector<Permutation> gens = minimal_subgroup_generators(delta, L);

  auto const &blocks = delta.blocks();
  auto const kb = delta.kernel_block();
  for (auto const &f : delta.F().generators()) {
    std::vector<Point> images(static_cast<std::size_t>(L.degree));
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      auto const &block = blocks.block(j);
      auto const target = static_cast<std::size_t>(blocks.block_of(f(block.front())));
      if (kb && j == *kb) {
        for (std::size_t a = 0; a < block.size(); ++a)
          images[L.kernel[a]] = L.kernel[local_index(blocks.block(target), f(block[a]))];
        continue;
      }
      bool const rev = is_rev(delta.decoration(j).kind);
      for (int i = 0; i < k; ++i)
        for (std::size_t a = 0; a < L.copies[j][i].size(); ++a) {
          std::size_t const b = rev ? 0 : local_index(blocks.block(target), f(block[a]));
          images[L.copies[j][i][a]] = L.copies[target][i][b];
        }
    }
    gens.emplace_back(std::move(images));
  }

  Truncation t;
  t.group = FiniteGroup(L.degree, std::move(gens));
  t.k = k;
  t.copies = std::move(L.copies);
  t.kernel = std::move(L.kernel);
  return t;
}

FiniteGroup truncate_minimal_subgroup(DecoratedGroup const &delta, int k, Limits const &limits)
{
  require_valid(delta);
  Layout const L = layout(delta, k, limits);
  return FiniteGroup(L.degree, minimal_subgroup_generators(delta, L));
}

// --- brute force profiles ---------------------------------------------------

std::vector<BigInt> brute_profile_burnside(FiniteGroup const &group, int nmax,
                                           Limits const &limits)
{
  if (nmax < 0)
    throw DomainError("brute_profile: negative nmax");
  BigInt const order = group.order();
  if (order > BigInt(limits.max_elements))
    throw SizeLimitError("brute_profile: |G| = " + order.str() + " above the element cap");

  int const n = group.degree();
  std::map<std::vector<int>, std::uint64_t> types;
  std::vector<char> seen(static_cast<std::size_t>(n));
  group.chain().for_each_element([&](Permutation const &g) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> type;
    for (int x = 0; x < n; ++x) {
      if (seen[x])
        continue;
      int len = 0;
      for (int y = x; !seen[y]; y = g(y)) {
        seen[y] = 1;
        ++len;
      }
      if (len <= nmax)
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    ++types[type];
  });

  std::vector<BigInt> total(static_cast<std::size_t>(nmax) + 1, 0);
  for (auto const &[type, count] : types) {
    std::vector<BigInt> p(static_cast<std::size_t>(nmax) + 1, 0);
    p[0] = 1;
    for (int len : type)
      for (int d = nmax; d >= len; --d)
        p[d] += p[d - len];
    for (int d = 0; d <= nmax; ++d)
      total[d] += p[d] * count;
  }
  for (auto &c : total) {
    if (c % order != 0)
      throw FalsifiedPropertyError("Burnside sum not divisible by |G|");
    c /= order;
  }
  return total;
}

std::vector<BigInt> brute_profile_orbits(FiniteGroup const &group, int nmax)
{
  if (nmax < 0)
    throw DomainError("brute_profile: negative nmax");
  auto const reps = subset_orbit_representatives(group, nmax);
  std::vector<BigInt> out(static_cast<std::size_t>(nmax) + 1, 0);
  for (std::size_t n = 0; n < reps.size(); ++n)
    out[n] = reps[n].size();
  return out;
}

std::vector<BigInt> brute_profile(FiniteGroup const &group, int nmax, Limits const &limits)
{
  if (group.order() <= BigInt(limits.max_elements))
    return brute_profile_burnside(group, nmax, limits);
  return brute_profile_orbits(group, nmax);
}

VerificationReport verify_profile(DecoratedGroup const &delta, int k, int nmax,
                                  Limits const &limits)
{
  if (k < nmax)
    throw PreconditionError("verify_profile: k must be at least n");
  auto const start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.k = k;
  r.n = nmax;
  r.series_prefix = profile_values(delta, nmax, limits);
  r.oracle_prefix = brute_profile(truncate(delta, k, limits).group, nmax, limits);
  r.match = r.series_prefix == r.oracle_prefix;
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return r;
}

// --- towers -----------------------------------------------------------------

std::vector<FiniteGroup> tower(FiniteGroup const &group, SetPartition const &blocks, int t)
{
  InducedAction const ia = induced_action(group, blocks);
  require_symmetric_on_blocks(ia, blocks.size());
  if (t < 0 || static_cast<std::size_t>(t) + 1 > blocks.size())
    throw PreconditionError("tower: t + 1 exceeds the number of blocks");

  std::vector<FiniteGroup> out;
  std::vector<Point> fixed;
  for (int i = 0; i <= t; ++i) {
    if (i > 0)
      fixed.insert(fixed.end(), blocks.block(static_cast<std::size_t>(i)).begin(),
                   blocks.block(static_cast<std::size_t>(i)).end());
    out.push_back(restriction(pointwise_stabilizer(ia.kernel, fixed), blocks.block(0)));
  }
  return out;
}

bool verify_subdirect_decomposition(FiniteGroup const &group, SetPartition const &blocks,
                                    int l1, int l2)
{
  InducedAction const ia = induced_action(group, blocks);
  require_symmetric_on_blocks(ia, blocks.size());
  if (l1 < 1 || l2 < 1 || static_cast<std::size_t>(l1 + l2) > blocks.size())
    throw PreconditionError("verify_subdirect_decomposition: need 1 <= l1, l2 and l1 + l2 <= blocks");

  std::vector<Point> e1, e2;
  for (int b = 0; b < l1 + l2; ++b) {
    auto const &blk = blocks.block(static_cast<std::size_t>(b));
    (b < l1 ? e1 : e2).insert((b < l1 ? e1 : e2).end(), blk.begin(), blk.end());
  }
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::vector<Point> order = e1;
  order.insert(order.end(), e2.begin(), e2.end());

  FiniteGroup const s = restrict_ordered(ia.kernel, order);
  int const d1 = static_cast<int>(e1.size());
  int const d = static_cast<int>(order.size());
  auto const first = iota_points(0, d1);
  auto const second = iota_points(d1, d);

  FiniteGroup const g1 = restriction(s, first);
  FiniteGroup const g2 = restriction(s, second);
  FiniteGroup const n1 = restriction(pointwise_stabilizer(s, second), first);
  FiniteGroup const n2 = restriction(pointwise_stabilizer(s, first), second);
  std::vector<std::pair<Permutation, Permutation>> match;
  for (auto const &g : s.generators())
    match.emplace_back(restrict_permutation(g, first), restrict_permutation(g, second));
  try {
    return subdirect(g1, g2, n1, n2, match) == s;
  } catch (CorrespondenceError const &) {
    return false;
  }
}

Superblock superblock(Truncation const &trunc, std::size_t block)
{
  if (block >= trunc.copies.size() || trunc.copies[block].empty())
    throw DomainError("superblock: not a non-kernel block");
  std::vector<std::vector<Point>> parts;
  std::vector<Point> points;
  for (std::size_t j = 0; j < trunc.copies.size(); ++j) {
    if (trunc.copies[j].empty())
      continue;
    std::vector<Point> all;
    for (auto const &c : trunc.copies[j])
      all.insert(all.end(), c.begin(), c.end());
    parts.push_back(all);
    if (j == block)
      points = all;
  }
  for (Point x : trunc.kernel)
    parts.push_back({x});
  int const n = trunc.group.degree();
  SetPartition const supers(n, parts);
  FiniteGroup const stab = block_stabilizer(
    trunc.group, supers, static_cast<std::size_t>(supers.block_of(points.front())));

  std::vector<std::vector<Point>> local;
  for (auto const &c : trunc.copies[block]) {
    std::vector<Point> b;
    for (Point x : c)
      b.push_back(static_cast<Point>(local_index(points, x)));
    local.push_back(std::move(b));
  }
  return {restriction(stab, points), SetPartition(static_cast<int>(points.size()), local)};
}

// --- recognition ------------------------------------------------------------

namespace
{

/// blocks[x][i] = block i of superblock x, in global points.
using Superblocks = std::vector<std::vector<std::vector<Point>>>;

/// Finds the replicated block system on one orbit, or returns empty when the
/// orbit shows no k-fold replication.
Superblocks replicated_system(FiniteGroup const &group, std::vector<Point> const &orbit, int k,
                              Limits const &limits)
{
  FiniteGroup const local = restriction(group, orbit);
  BigInt const kf = factorial(k);
  Superblocks best;
  std::size_t best_size = 0;

  for (auto const &system : all_block_systems(local, limits)) {
    auto const &P = system.partition();
    std::size_t const nb = P.size();
    if (nb % static_cast<std::size_t>(k) != 0 || orbit.size() / nb <= best_size)
      continue;
    int const r = static_cast<int>(nb) / k;
    InducedAction const ia = induced_action(local, P);

    std::optional<SetPartition> supers;
    if (r == 1) {
      if (ia.image.order() == kf)
        supers = SetPartition::whole(static_cast<int>(nb));
    } else {
      BigInt kr = 1;
      for (int i = 0; i < r; ++i)
        kr *= kf;
      for (auto const &q : all_block_systems(ia.image, limits)) {
        auto const &Q = q.partition();
        if (Q.size() != static_cast<std::size_t>(r) || Q.block(0).size() != static_cast<std::size_t>(k))
          continue;
        if (induced_action(ia.image, Q).kernel.order() == kr) {
          supers = Q;
          break;
        }
      }
    }
    if (!supers)
      continue;

    best.clear();
    best_size = orbit.size() / nb;
    for (auto const &q : supers->blocks()) {
      std::vector<std::vector<Point>> sb;
      for (Point b : q) {
        std::vector<Point> blk;
        for (Point x : P.block(static_cast<std::size_t>(b)))
          blk.push_back(orbit[static_cast<std::size_t>(x)]);
        sb.push_back(std::move(blk));
      }
      std::sort(sb.begin(), sb.end());
      best.push_back(std::move(sb));
    }
  }
  return best;
}

/// Copies of one block of Delta may span several point orbits. Blocks from
/// different orbits belong to the same copy when the stabilizer of each, in
/// the action on blocks, fixes the other.
Superblocks merge_twins(FiniteGroup const &group, Superblocks supers,
                        std::vector<Point> const &kernel)
{
  std::vector<std::vector<Point>> parts;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t x = 0; x < supers.size(); ++x)
    for (std::size_t i = 0; i < supers[x].size(); ++i) {
      parts.push_back(supers[x][i]);
      where.emplace_back(x, i);
    }
  std::size_t const atoms = parts.size();
  for (Point p : kernel)
    parts.push_back({p});
  SetPartition const P(group.degree(), parts);
  InducedAction const ia = induced_action(group, P);

  // index in P of each atomic block
  std::vector<int> pidx(atoms);
  for (std::size_t a = 0; a < atoms; ++a)
    pidx[a] = P.block_of(parts[a].front());
  std::vector<std::vector<bool>> fixes(atoms, std::vector<bool>(atoms, false));
  for (std::size_t a = 0; a < atoms; ++a) {
    FiniteGroup const st = pointwise_stabilizer(ia.image, {pidx[a]});
    for (std::size_t b = 0; b < atoms; ++b) {
      bool fixed = true;
      for (auto const &g : st.generators())
        fixed = fixed && g(pidx[b]) == pidx[b];
      fixes[a][b] = fixed;
    }
  }

  std::vector<std::size_t> parent(atoms);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t a = 0; a < atoms; ++a)
    for (std::size_t b = a + 1; b < atoms; ++b)
      if (where[a].first != where[b].first && fixes[a][b] && fixes[b][a])
        parent[find(a)] = find(b);

  // merged superblock -> merged copies
  std::map<std::size_t, std::map<std::size_t, std::vector<Point>>> merged;
  std::vector<std::size_t> sroot(supers.size());
  std::iota(sroot.begin(), sroot.end(), 0);
  std::function<std::size_t(std::size_t)> sfind = [&](std::size_t x) {
    return sroot[x] == x ? x : sroot[x] = sfind(sroot[x]);
  };
  for (std::size_t a = 0; a < atoms; ++a)
    for (std::size_t b = 0; b < atoms; ++b)
      if (find(a) == find(b))
        sroot[sfind(where[a].first)] = sfind(where[b].first);
  for (std::size_t a = 0; a < atoms; ++a) {
    auto &blk = merged[sfind(where[a].first)][find(a)];
    blk.insert(blk.end(), parts[a].begin(), parts[a].end());
  }

  Superblocks out;
  for (auto &[root, copies] : merged) {
    std::vector<std::vector<Point>> sb;
    for (auto &[c, blk] : copies) {
      std::sort(blk.begin(), blk.end());
      sb.push_back(std::move(blk));
    }
    std::sort(sb.begin(), sb.end());
    out.push_back(std::move(sb));
  }
  std::sort(out.begin(), out.end());
  for (auto const &sb : out) {
    if (sb.size() != supers.front().size())
      throw RecognitionError("recognize: twinned blocks do not pair the copies");
    for (auto const &b : sb)
      if (b.size() != sb[0].size())
        throw RecognitionError("recognize: twinned blocks of one superblock differ in size");
  }
  return out;
}

struct Label
{
  int superblock;
  int copy;
  int row;
};

} // namespace

DecoratedGroup recognize(FiniteGroup const &group, int k, Limits const &limits)
{
  if (k < 4)
    throw PreconditionError("recognize: k must be at least 4");
  Limits lim = limits;
  lim.max_block_system_degree = std::max(lim.max_block_system_degree, group.degree());
  int const n = group.degree();

  Superblocks supers;
  std::vector<Point> kernel;
  for (auto const &orbit : orbits_points(group)) {
    auto found = replicated_system(group, orbit, k, lim);
    if (found.empty())
      kernel.insert(kernel.end(), orbit.begin(), orbit.end());
    for (auto &sb : found)
      supers.push_back(std::move(sb));
  }
  std::sort(kernel.begin(), kernel.end());
  if (!supers.empty())
    supers = merge_twins(group, std::move(supers), kernel);

  std::vector<std::vector<Point>> super_parts;
  for (auto const &sb : supers) {
    std::vector<Point> all;
    for (auto const &b : sb)
      all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    super_parts.push_back(std::move(all));
  }
  std::vector<std::vector<Point>> parts = super_parts;
  for (Point x : kernel)
    parts.push_back({x});
  SetPartition const super_partition(n, parts);

  std::vector<Label> labels(static_cast<std::size_t>(n), Label{-1, -1, -1});
  std::vector<FiniteGroup> H;
  int const t = std::min(k - 1, 3);

  for (std::size_t x = 0; x < supers.size(); ++x) {
    auto const &points = super_parts[x];
    std::size_t const index =
      static_cast<std::size_t>(super_partition.block_of(points.front()));
    FiniteGroup const gx = restriction(block_stabilizer(group, super_partition, index), points);
    std::vector<std::vector<Point>> local_blocks;
    for (auto const &b : supers[x]) {
      std::vector<Point> lb;
      for (Point p : b)
        lb.push_back(static_cast<Point>(local_index(points, p)));
      local_blocks.push_back(std::move(lb));
    }
    SetPartition const lp(static_cast<int>(points.size()), local_blocks);

    auto const tw = tower(gx, lp, t);
    if (!(tw[static_cast<std::size_t>(t) - 1] == tw[static_cast<std::size_t>(t)]))
      throw RecognitionError("recognize: tower does not stabilise by level " + std::to_string(t));
    H.push_back(tw.back());

    auto const &b0 = lp.block(0);
    for (std::size_t a = 0; a < b0.size(); ++a)
      labels[points[b0[a]]] = {static_cast<int>(x), 0, static_cast<int>(a)};
    for (std::size_t i = 1; i < lp.size(); ++i) {
      std::vector<Point> outside;
      for (Point p = 0; p < gx.degree(); ++p) {
        int const owner = lp.block_of(p);
        if (owner != 0 && owner != static_cast<int>(i))
          outside.push_back(p);
      }
      FiniteGroup const L = pointwise_stabilizer(gx, outside);
      std::optional<Permutation> swap;
      for (auto const &e : L.elements(lim))
        if (e.order() == 2 && lp.block_of(e(b0.front())) == static_cast<int>(i)) {
          swap = e;
          break;
        }
      if (!swap)
        throw RecognitionError("recognize: ladder search found no swap of blocks 0 and " +
                               std::to_string(i));
      for (std::size_t a = 0; a < b0.size(); ++a)
        labels[points[(*swap)(b0[a])]] = {static_cast<int>(x), static_cast<int>(i),
                                         static_cast<int>(a)};
    }
  }

  std::vector<int> offset;
  int degree = 0;
  for (auto const &sb : supers) {
    offset.push_back(degree);
    degree += static_cast<int>(sb[0].size());
  }
  int const kernel_offset = degree;
  degree += static_cast<int>(kernel.size());

  std::vector<Permutation> gens;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(degree));
    for (std::size_t x = 0; x < supers.size(); ++x)
      for (std::size_t a = 0; a < supers[x][0].size(); ++a) {
        Label const l = labels[g(supers[x][0][a])];
        images[offset[x] + static_cast<int>(a)] = offset[l.superblock] + l.row;
      }
    for (std::size_t a = 0; a < kernel.size(); ++a)
      images[kernel_offset + static_cast<int>(a)] =
        kernel_offset + static_cast<int>(local_index(kernel, g(kernel[a])));
    gens.emplace_back(std::move(images));
  }
  std::vector<std::vector<Point>> blocks;
  std::vector<Decoration> decs;
  for (std::size_t x = 0; x < supers.size(); ++x) {
    auto const s = static_cast<int>(supers[x][0].size());
    for (auto const &h : H[x].generators())
      gens.push_back(h.shifted(offset[x], degree));
    blocks.push_back(iota_points(offset[x], offset[x] + s));
    decs.push_back({H[x], HHKind::SymInf});
  }
  if (!kernel.empty()) {
    blocks.push_back(iota_points(kernel_offset, degree));
    decs.push_back({FiniteGroup::trivial(static_cast<int>(kernel.size())), HHKind::TrivialKernel});
  }

  try {
    DecoratedGroup delta(FiniteGroup(degree, std::move(gens)), SetPartition(degree, blocks),
                         std::move(decs));
    require_valid(delta);
    return delta;
  } catch (PreconditionError const &e) {
    throw RecognitionError(std::string("recognize: recovered data is not valid: ") + e.what());
  }
}

} // namespace oligo
