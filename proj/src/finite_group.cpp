#include "oligo/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "oligo/error.hpp"

namespace oligo
{

Limits const &Limits::defaults()
{
  static Limits const limits = [] {
    Limits l;
    if (char const *env = std::getenv("OLIGO_MAX_ORDER")) {
      char *end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0)
        l.max_elements = v;
    }
    return l;
  }();
  return limits;
}

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> generators)
: degree_(degree),
  cache_(std::make_shared<Cache>())
{
  if (degree < 0)
    throw DomainError("negative group degree");
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw DomainError("generator " + g.str() + " has degree " +
                        std::to_string(g.degree()) + ", expected " +
                        std::to_string(degree));
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

FiniteGroup FiniteGroup::trivial(int degree)
{
  return FiniteGroup(degree, {});
}

FiniteGroup FiniteGroup::symmetric(int n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles({cycle}, n));
    gens.push_back(Permutation::from_cycles({{0, 1}}, n));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup FiniteGroup::cyclic(int n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles({cycle}, n));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup FiniteGroup::dihedral(int n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles({cycle}, n));
    std::vector<std::vector<Point>> reflection;
    for (int i = 1; i < n - i; ++i)
      reflection.push_back({i, n - i});
    gens.push_back(Permutation::from_cycles(reflection, n));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup FiniteGroup::from_cycles(std::vector<std::string> const &generators, int degree)
{
  std::vector<Permutation> perms;
  for (auto const &s : generators)
    perms.push_back(Permutation::parse(s));
  for (auto const &p : perms)
    degree = std::max(degree, p.degree());
  for (auto &p : perms)
    p = p.extended(degree);
  return FiniteGroup(degree, std::move(perms));
}

StabilizerChain const &FiniteGroup::chain() const
{
  std::call_once(cache_->once, [this] {
    cache_->chain = StabilizerChain(degree_, generators_);
  });
  return cache_->chain;
}

std::uint64_t FiniteGroup::small_order() const
{
  BigInt o = order();
  if (o > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw SizeLimitError("group order does not fit in 64 bits");
  return o.convert_to<std::uint64_t>();
}

bool FiniteGroup::is_trivial() const
{
  return generators_.empty();
}

bool FiniteGroup::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    return false;
  if (g.is_identity())
    return true;
  return chain().contains(g);
}

bool FiniteGroup::contains(FiniteGroup const &sub) const
{
  if (sub.degree() != degree_)
    return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Permutation const &g) { return contains(g); });
}

std::vector<Permutation> FiniteGroup::elements(Limits const &limits) const
{
  if (order() > BigInt(limits.max_elements))
    throw SizeLimitError("group of order " + order().str() +
                         " exceeds the element cap " +
                         std::to_string(limits.max_elements));
  std::vector<Permutation> out;
  out.reserve(small_order());
  chain().for_each_element([&](Permutation const &g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::operator==(FiniteGroup const &other) const
{
  return degree_ == other.degree_ && order() == other.order() && contains(other);
}

std::string FiniteGroup::str() const
{
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i)
      out += ", ";
    out += generators_[i].str();
  }
  return out + "> on " + std::to_string(degree_) + " points";
}

// --- canonical images -------------------------------------------------------

SubsetCanonizer::SubsetCanonizer(FiniteGroup group)
: group_(std::move(group))
{}

SubsetCanonizer::Level const &SubsetCanonizer::level(std::vector<Point> const &prefix)
{
  auto it = levels_.find(prefix);
  if (it != levels_.end())
    return *it->second;

  auto lvl = std::make_unique<Level>();
  if (prefix.empty()) {
    lvl->gens = group_.generators();
  } else {
    std::vector<Point> parent(prefix.begin(), prefix.end() - 1);
    auto const &up = level(parent);
    StabilizerChain chain(group_.degree(), up.gens, {prefix.back()});
    lvl->gens = chain.generators(1);
  }

  int const n = group_.degree();
  lvl->orbit_min.assign(static_cast<std::size_t>(n), -1);
  lvl->to_min.assign(static_cast<std::size_t>(n), Permutation());
  for (Point root = 0; root < n; ++root) {
    if (lvl->orbit_min[root] >= 0)
      continue;
    // BFS from the least point; inverse transversal elements map x -> root.
    std::vector<Point> queue{root};
    std::vector<Permutation> from_root{Permutation(n)};
    lvl->orbit_min[root] = root;
    lvl->to_min[root] = Permutation(n);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const &g : lvl->gens) {
        Point const y = g(queue[k]);
        if (lvl->orbit_min[y] >= 0)
          continue;
        Permutation u = g * from_root[k];
        lvl->orbit_min[y] = root;
        lvl->to_min[y] = u.inverse();
        queue.push_back(y);
        from_root.push_back(std::move(u));
      }
    }
  }
  auto const &ref = *lvl;
  levels_.emplace(prefix, std::move(lvl));
  return ref;
}

std::vector<Point> SubsetCanonizer::canonical(std::vector<Point> set)
{
  std::sort(set.begin(), set.end());
  std::set<std::vector<Point>> candidates{set};
  std::vector<Point> prefix;
  for (std::size_t step = 0; step < set.size(); ++step) {
    Level const &L = level(prefix);
    Point best = group_.degree();
    for (auto const &T : candidates)
      for (Point t : T)
        if (std::find(prefix.begin(), prefix.end(), t) == prefix.end())
          best = std::min(best, L.orbit_min[t]);

    std::set<std::vector<Point>> next;
    for (auto const &T : candidates)
      for (Point t : T)
        if (L.orbit_min[t] == best &&
            std::find(prefix.begin(), prefix.end(), t) == prefix.end())
          next.insert(L.to_min[t].image_of(T));
    prefix.push_back(best);
    candidates = std::move(next);
  }
  return prefix;
}

// --- orbits and ages --------------------------------------------------------

BigInt group_order(FiniteGroup const &group)
{
  return group.order();
}

std::vector<std::vector<Point>> orbits_points(FiniteGroup const &group)
{
  int const n = group.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Point>> result;
  for (Point root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<Point> orbit{root};
    seen[root] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto const &g : group.generators()) {
        Point const y = g(orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<std::vector<Point>> subset_orbit(FiniteGroup const &group,
                                             std::vector<Point> set,
                                             Limits const &limits)
{
  std::sort(set.begin(), set.end());
  std::set<std::vector<Point>> seen{set};
  std::vector<std::vector<Point>> orbit{set};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &g : group.generators()) {
      auto img = g.image_of(orbit[k]);
      if (seen.insert(img).second) {
        orbit.push_back(std::move(img));
        if (orbit.size() > limits.max_elements)
          throw SizeLimitError("subset orbit exceeds the element cap");
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<std::vector<Point>>> subset_orbit_representatives(
  FiniteGroup const &group, int nmax)
{
  nmax = std::min(nmax, group.degree());
  SubsetCanonizer canon(group);
  std::vector<std::vector<std::vector<Point>>> reps(static_cast<std::size_t>(nmax) + 1);
  reps[0].push_back({});
  for (int n = 1; n <= nmax; ++n) {
    std::set<std::vector<Point>> found;
    for (auto const &r : reps[n - 1]) {
      for (Point p = 0; p < group.degree(); ++p) {
        if (std::binary_search(r.begin(), r.end(), p))
          continue;
        auto s = r;
        s.insert(std::upper_bound(s.begin(), s.end(), p), p);
        found.insert(canon.canonical(std::move(s)));
      }
    }
    reps[n].assign(found.begin(), found.end());
  }
  return reps;
}

std::vector<std::vector<SubsetOrbitSummary>> age(FiniteGroup const &group, int nmax,
                                                 Limits const &limits)
{
  if (nmax > group.degree())
    throw PreconditionError("age: nmax exceeds the degree");
  auto reps = subset_orbit_representatives(group, nmax);
  std::vector<std::vector<SubsetOrbitSummary>> result;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<SubsetOrbitSummary> level;
    for (auto const &r : reps[n]) {
      SubsetOrbitSummary s;
      s.n = n;
      s.representative = r;
      s.orbit_size = group.order() / setwise_stabilizer(group, r).order();
      level.push_back(std::move(s));
    }
    result.push_back(std::move(level));
  }
  (void)limits;
  return result;
}

// --- subgroups --------------------------------------------------------------

namespace
{

/// Drops generators already generated by the earlier ones.
FiniteGroup reduced_group(int degree, std::vector<Permutation> const &candidates)
{
  std::vector<Permutation> kept;
  StabilizerChain chain(degree, kept);
  for (auto const &g : candidates) {
    if (g.is_identity() || chain.contains(g))
      continue;
    kept.push_back(g);
    chain = StabilizerChain(degree, kept);
  }
  return FiniteGroup(degree, std::move(kept));
}

void check_points(FiniteGroup const &group, std::vector<Point> const &points)
{
  for (Point x : points)
    if (x < 0 || x >= group.degree())
      throw DomainError("point " + std::to_string(x) + " outside the group's domain");
}

} // namespace

FiniteGroup pointwise_stabilizer(FiniteGroup const &group, std::vector<Point> const &points)
{
  check_points(group, points);
  std::vector<Point> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  StabilizerChain chain(group.degree(), group.generators(), distinct);
  return FiniteGroup(group.degree(), chain.generators(distinct.size()));
}

FiniteGroup setwise_stabilizer(FiniteGroup const &group, std::vector<Point> const &points)
{
  check_points(group, points);
  std::vector<Point> set = points;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());

  int const n = group.degree();
  StabilizerChain chain(n, group.generators(), set);
  std::size_t const depth = set.size();

  // Depth-first over the first |S| levels, keeping only partial products that
  // send each base point into S; every surviving branch is one coset of the
  // pointwise stabilizer inside the setwise stabilizer.
  std::vector<Permutation> reps;
  std::function<void(std::size_t, Permutation const &)> walk =
    [&](std::size_t lvl, Permutation const &partial) {
      if (lvl == depth) {
        reps.push_back(partial);
        return;
      }
      for (Point x : chain.orbit(lvl)) {
        Permutation next = partial * *chain.transversal(lvl, x);
        if (std::binary_search(set.begin(), set.end(), next(chain.base_point(lvl))))
          walk(lvl + 1, next);
      }
    };
  walk(0, Permutation(n));

  std::vector<Permutation> gens = chain.generators(depth);
  gens.insert(gens.end(), reps.begin(), reps.end());
  return reduced_group(n, gens);
}

Permutation restrict_permutation(Permutation const &g, std::vector<Point> const &points)
{
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> images(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), g(sorted[i]));
    if (it == sorted.end() || *it != g(sorted[i]))
      throw DomainError("restriction to a set that is not stable");
    images[i] = static_cast<Point>(it - sorted.begin());
  }
  return Permutation(std::move(images));
}

FiniteGroup restriction(FiniteGroup const &group, std::vector<Point> const &points)
{
  check_points(group, points);
  std::vector<Permutation> gens;
  for (auto const &g : group.generators())
    gens.push_back(restrict_permutation(g, points));
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return FiniteGroup(static_cast<int>(sorted.size()), std::move(gens));
}

bool is_normal(FiniteGroup const &sub, FiniteGroup const &group)
{
  if (sub.degree() != group.degree() || !group.contains(sub))
    throw ContainmentError("is_normal: " + sub.str() + " is not a subgroup of " +
                           group.str());
  for (auto const &g : group.generators()) {
    Permutation const gi = g.inverse();
    for (auto const &h : sub.generators())
      if (!sub.contains(g * h * gi))
        return false;
  }
  return true;
}

InducedAction induced_action(FiniteGroup const &group, SetPartition const &blocks)
{
  if (blocks.domain() != group.degree())
    throw DomainError("partition domain does not match the group degree");
  int const n = group.degree();
  int const m = static_cast<int>(blocks.size());

  InducedAction result;
  std::vector<Permutation> extended;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) {
      auto const &block = blocks.block(b);
      int const target = blocks.block_of(g(block.front()));
      for (Point x : block)
        if (blocks.block_of(g(x)) != target)
          throw DomainError("partition " + blocks.str() + " is not a block system");
      images[b] = target;
    }
    Permutation img(images);
    result.generator_images.push_back(img);

    std::vector<Point> ext(static_cast<std::size_t>(n + m));
    for (int x = 0; x < n; ++x)
      ext[x] = g(x);
    for (int b = 0; b < m; ++b)
      ext[n + b] = n + images[b];
    extended.push_back(Permutation(std::move(ext)));
  }
  result.image = FiniteGroup(m, result.generator_images);

  std::vector<Point> block_points;
  for (int b = 0; b < m; ++b)
    block_points.push_back(n + b);
  StabilizerChain chain(n + m, extended, block_points);
  std::vector<Permutation> kernel;
  std::vector<Point> domain(static_cast<std::size_t>(n));
  std::iota(domain.begin(), domain.end(), 0);
  for (auto const &k : chain.generators(block_points.size()))
    kernel.push_back(restrict_permutation(k, domain));
  result.kernel = FiniteGroup(n, std::move(kernel));
  return result;
}

FiniteGroup direct_product(FiniteGroup const &g1, FiniteGroup const &g2)
{
  int const total = g1.degree() + g2.degree();
  std::vector<Permutation> gens;
  for (auto const &g : g1.generators())
    gens.push_back(g.shifted(0, total));
  for (auto const &g : g2.generators())
    gens.push_back(g.shifted(g1.degree(), total));
  return FiniteGroup(total, std::move(gens));
}

FiniteGroup subdirect(FiniteGroup const &g1, FiniteGroup const &g2,
                      FiniteGroup const &n1, FiniteGroup const &n2,
                      std::vector<std::pair<Permutation, Permutation>> const &match)
{
  if (!is_normal(n1, g1) || !is_normal(n2, g2))
    throw PreconditionError("subdirect: N1 and N2 must be normal in G1 and G2");

  int const d1 = g1.degree();
  int const total = d1 + g2.degree();
  std::vector<Permutation> gens;
  for (auto const &[a, b] : match) {
    if (!g1.contains(a) || !g2.contains(b))
      throw CorrespondenceError("subdirect: matched pair outside G1 x G2");
    std::vector<Point> images(static_cast<std::size_t>(total));
    for (int x = 0; x < d1; ++x)
      images[x] = a(x);
    for (int x = 0; x < g2.degree(); ++x)
      images[d1 + x] = d1 + b(x);
    gens.push_back(Permutation(std::move(images)));
  }
  for (auto const &a : n1.generators())
    gens.push_back(a.shifted(0, total));
  for (auto const &b : n2.generators())
    gens.push_back(b.shifted(d1, total));
  FiniteGroup result(total, std::move(gens));

  BigInt const expected = g1.order() * n2.order();
  if (expected != g2.order() * n1.order())
    throw CorrespondenceError("subdirect: G1/N1 and G2/N2 have different orders");
  std::vector<Point> first(static_cast<std::size_t>(d1)), second(static_cast<std::size_t>(g2.degree()));
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), d1);
  if (result.order() != expected || !(restriction(result, first) == g1) ||
      !(restriction(result, second) == g2))
    throw CorrespondenceError("subdirect: the matching is not an isomorphism of quotients");
  return result;
}

SetPartition copy_partition(int block_size, int copies)
{
  std::vector<std::vector<Point>> blocks;
  for (int i = 0; i < copies; ++i) {
    std::vector<Point> b;
    for (int u = 0; u < block_size; ++u)
      b.push_back(i * block_size + u);
    blocks.push_back(std::move(b));
  }
  return SetPartition(block_size * copies, std::move(blocks));
}

FiniteGroup wreath_product(FiniteGroup const &inner, FiniteGroup const &outer)
{
  int const m = inner.degree();
  int const k = outer.degree();
  int const total = m * k;
  std::vector<Permutation> gens;
  if (k > 0)
    for (auto const &h : inner.generators())
      gens.push_back(h.shifted(0, total));
  for (auto const &p : outer.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(total));
    for (int i = 0; i < k; ++i)
      for (int u = 0; u < m; ++u)
        images[i * m + u] = p(i) * m + u;
    gens.push_back(Permutation(std::move(images)));
  }
  // H on copy 0 plus a transitive P reaches every copy; for intransitive P
  // add H on one copy per P-orbit.
  for (auto const &orb : orbits_points(outer)) {
    if (orb.front() == 0)
      continue;
    for (auto const &h : inner.generators())
      gens.push_back(h.shifted(orb.front() * m, total));
  }
  return FiniteGroup(total, std::move(gens));
}

FiniteGroup block_product(FiniteGroup const &inner, FiniteGroup const &outer)
{
  int const m = inner.degree();
  int const k = outer.degree();
  int const total = m * k;
  std::vector<Permutation> gens;
  for (auto const &h : inner.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(total));
    for (int i = 0; i < k; ++i)
      for (int u = 0; u < m; ++u)
        images[i * m + u] = i * m + h(u);
    gens.push_back(Permutation(std::move(images)));
  }
  for (auto const &p : outer.generators()) {
    std::vector<Point> images(static_cast<std::size_t>(total));
    for (int i = 0; i < k; ++i)
      for (int u = 0; u < m; ++u)
        images[i * m + u] = p(i) * m + u;
    gens.push_back(Permutation(std::move(images)));
  }
  return FiniteGroup(total, std::move(gens));
}

FiniteGroup relabel(FiniteGroup const &group, Permutation const &relabelling)
{
  Permutation const inv = relabelling.inverse();
  std::vector<Permutation> gens;
  for (auto const &g : group.generators())
    gens.push_back(relabelling * g * inv);
  return FiniteGroup(group.degree(), std::move(gens));
}

bool permutation_isomorphic(FiniteGroup const &a, FiniteGroup const &b)
{
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  int const n = a.degree();
  if (n > 10)
    throw SizeLimitError("permutation_isomorphic: degree above 10");

  auto signature = [](FiniteGroup const &g) {
    std::vector<std::size_t> sig(static_cast<std::size_t>(g.degree()));
    for (auto const &orb : orbits_points(g))
      for (Point x : orb)
        sig[x] = orb.size();
    return sig;
  };
  auto const sa = signature(a);
  auto const sb = signature(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y)
      return false;
  }

  std::vector<Point> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x == n) {
      Permutation pi(image);
      Permutation const inv = pi.inverse();
      for (auto const &g : a.generators())
        if (!b.contains(pi * g * inv))
          return false;
      return true;
    }
    for (Point y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y])
        continue;
      used[y] = true;
      image[x] = y;
      if (assign(x + 1))
        return true;
      used[y] = false;
    }
    return false;
  };
  return assign(0);
}

} // namespace oligo
