#include "oligo/decorated.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "oligo/block_system.hpp"
#include "oligo/error.hpp"
#include "oligo/subgroups.hpp"

namespace oligo
{

// --- kinds ------------------------------------------------------------------

std::string_view to_string(HHKind kind)
{
  switch (kind) {
  case HHKind::SymInf: return "SymInf";
  case HHKind::AutQ: return "AutQ";
  case HHKind::RevQ: return "RevQ";
  case HHKind::AutQZ: return "AutQZ";
  case HHKind::RevQZ: return "RevQZ";
  case HHKind::TrivialKernel: return "TrivialKernel";
  }
  return "?";
}

HHKind parse_kind(std::string_view name)
{
  for (HHKind k : {HHKind::SymInf, HHKind::AutQ, HHKind::RevQ, HHKind::AutQZ,
                   HHKind::RevQZ, HHKind::TrivialKernel})
    if (name == to_string(k))
      return k;
  if (name == "Sinf")
    return HHKind::SymInf;
  throw ParseError("unknown highly homogeneous kind '" + std::string(name) + "'", 0);
}

bool is_rev(HHKind kind)
{
  return kind == HHKind::RevQ || kind == HHKind::RevQZ;
}

HHKind aut_counterpart(HHKind kind)
{
  if (kind == HHKind::RevQ)
    return HHKind::AutQ;
  if (kind == HHKind::RevQZ)
    return HHKind::AutQZ;
  return kind;
}

// --- the data type ----------------------------------------------------------

DecoratedGroup::DecoratedGroup()
: F_(FiniteGroup::trivial(0)),
  blocks_(0, {})
{}

DecoratedGroup::DecoratedGroup(FiniteGroup F, SetPartition blocks,
                               std::vector<Decoration> decorations)
: F_(std::move(F)),
  blocks_(std::move(blocks)),
  decorations_(std::move(decorations))
{
  if (blocks_.domain() != F_.degree())
    throw DomainError("block partition does not cover F's domain");
  if (!is_block_system(F_, blocks_))
    throw PreconditionError("partition " + blocks_.str() + " is not a block system for F");
  if (decorations_.size() != blocks_.size())
    throw DomainError("one decoration per block is required");
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    if (decorations_[j].H.degree() != static_cast<int>(blocks_.block(j).size()))
      throw DomainError("decoration group degree differs from block size on block " +
                        std::to_string(j));
}

std::optional<std::size_t> DecoratedGroup::kernel_block() const
{
  for (std::size_t j = 0; j < decorations_.size(); ++j)
    if (decorations_[j].kind == HHKind::TrivialKernel)
      return j;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> DecoratedGroup::block_orbits() const
{
  std::vector<int> seen(blocks_.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (seen[j] >= 0)
      continue;
    std::vector<std::size_t> orbit{j};
    seen[j] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto const &f : F_.generators()) {
        auto const t = static_cast<std::size_t>(
          blocks_.block_of(f(blocks_.block(orbit[k]).front())));
        if (seen[t] < 0) {
          seen[t] = 1;
          orbit.push_back(t);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

FiniteGroup transport(FiniteGroup const &local, std::vector<Point> const &from,
                      std::vector<Point> const &to, Permutation const &f)
{
  int const m = static_cast<int>(from.size());
  std::vector<Point> phi(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    auto it = std::lower_bound(to.begin(), to.end(), f(from[a]));
    if (it == to.end() || *it != f(from[a]))
      throw DomainError("transport: f does not map the block onto its target");
    phi[a] = static_cast<Point>(it - to.begin());
  }
  return relabel(local, Permutation(std::move(phi)));
}

// --- validation -------------------------------------------------------------

namespace
{

std::vector<Point> complement(std::vector<Point> const &block, int degree)
{
  std::vector<Point> out;
  for (Point x = 0; x < degree; ++x)
    if (!std::binary_search(block.begin(), block.end(), x))
      out.push_back(x);
  return out;
}

/// Restriction to B_j of the pointwise stabilizer of all other blocks.
FiniteGroup local_fixer(FiniteGroup const &F, std::vector<Point> const &block)
{
  return restriction(pointwise_stabilizer(F, complement(block, F.degree())), block);
}

} // namespace

std::vector<Violation> validate(DecoratedGroup const &delta)
{
  std::vector<Violation> out;
  auto const &blocks = delta.blocks();
  auto const &F = delta.F();
  int kernels = 0;

  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto const &block = blocks.block(j);
    auto const &dec = delta.decoration(j);
    int const size = static_cast<int>(block.size());
    int const b = static_cast<int>(j);

    switch (dec.kind) {
    case HHKind::TrivialKernel:
      ++kernels;
      if (!dec.H.is_trivial())
        out.push_back({"kernel decoration must be trivial", b, dec.H.str()});
      break;
    case HHKind::SymInf:
      break;
    case HHKind::AutQ:
    case HHKind::AutQZ:
      if (size != 1)
        out.push_back({"kind/block-size rule", b,
                       std::string(to_string(dec.kind)) + " requires a singleton block"});
      break;
    case HHKind::RevQ:
    case HHKind::RevQZ:
      if (size != 2 || !dec.H.is_trivial())
        out.push_back({"kind/block-size rule", b,
                       std::string(to_string(dec.kind)) +
                         " requires a 2-point block with trivial H"});
      break;
    }

    FiniteGroup const R = local_fixer(F, block);
    if (!R.contains(dec.H))
      out.push_back({"H not a subgroup of stabilizer restriction", b, dec.H.str()});
    else if (!is_normal(dec.H, R))
      out.push_back({"H not normal in stabilizer restriction", b, dec.H.str()});
  }
  if (kernels > 1)
    out.push_back({"at most one kernel block", -1, std::to_string(kernels) + " kernel blocks"});

  for (auto const &f : F.generators()) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      auto const t = static_cast<std::size_t>(blocks.block_of(f(blocks.block(j).front())));
      auto const &dj = delta.decoration(j);
      auto const &dt = delta.decoration(t);
      if (dj.kind != dt.kind) {
        out.push_back({"decorations differ along an F-orbit", static_cast<int>(j),
                       "kind " + std::string(to_string(dj.kind)) + " vs " +
                         std::string(to_string(dt.kind))});
        continue;
      }
      if (dj.H.degree() != dt.H.degree() ||
          !(transport(dj.H, blocks.block(j), blocks.block(t), f) == dt.H))
        out.push_back({"decorations differ along an F-orbit", static_cast<int>(j),
                       "H is not carried onto block " + std::to_string(t) + " by " + f.str()});
    }
  }
  return out;
}

void require_valid(DecoratedGroup const &delta)
{
  auto const v = validate(delta);
  if (v.empty())
    return;
  std::string msg = "invalid decorated group:";
  for (auto const &x : v)
    msg += " [" + x.constraint + " @block " + std::to_string(x.block) + ": " + x.detail + "]";
  throw PreconditionError(msg);
}

// --- constructors -----------------------------------------------------------

namespace
{

DecoratedGroup assemble(FiniteGroup F,
                        std::vector<std::pair<std::vector<Point>, Decoration>> parts)
{
  std::sort(parts.begin(), parts.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  std::vector<std::vector<Point>> blocks;
  std::vector<Decoration> decs;
  for (auto &[b, d] : parts) {
    blocks.push_back(b);
    decs.push_back(std::move(d));
  }
  int const n = F.degree();
  return DecoratedGroup(std::move(F), SetPartition(n, std::move(blocks)), std::move(decs));
}

} // namespace

DecoratedGroup empty_decorated()
{
  return DecoratedGroup();
}

DecoratedGroup hh_atom(HHKind kind)
{
  if (kind == HHKind::TrivialKernel)
    throw PreconditionError("hh_atom: use kernel_atom for the kernel");
  if (is_rev(kind))
    return DecoratedGroup(FiniteGroup::symmetric(2), SetPartition::whole(2),
                          {Decoration{FiniteGroup::trivial(2), kind}});
  return DecoratedGroup(FiniteGroup::trivial(1), SetPartition::whole(1),
                        {Decoration{FiniteGroup::trivial(1), kind}});
}

DecoratedGroup kernel_atom(FiniteGroup const &A)
{
  if (A.degree() == 0)
    return empty_decorated();
  return DecoratedGroup(A, SetPartition::whole(A.degree()),
                        {Decoration{FiniteGroup::trivial(A.degree()), HHKind::TrivialKernel}});
}

DecoratedGroup wreath_hh(FiniteGroup const &H)
{
  if (H.degree() == 0)
    throw PreconditionError("wreath_hh: H must act on at least one point");
  return DecoratedGroup(H, SetPartition::whole(H.degree()), {Decoration{H, HHKind::SymInf}});
}

DecoratedGroup hybrid(FiniteGroup const &H0, FiniteGroup const &H)
{
  if (H0.degree() != H.degree() || H0.degree() == 0)
    throw PreconditionError("hybrid: H0 and H must act on the same nonempty domain");
  if (!is_normal(H, H0))
    throw PreconditionError("hybrid: H must be normal in H0");
  return DecoratedGroup(H0, SetPartition::whole(H0.degree()), {Decoration{H, HHKind::SymInf}});
}

DecoratedGroup wreath_outer(FiniteGroup const &H, FiniteGroup const &outer)
{
  if (H.degree() == 0 || outer.degree() == 0)
    throw PreconditionError("wreath_outer: empty domain");
  FiniteGroup F = wreath_product(H, outer);
  SetPartition blocks = copy_partition(H.degree(), outer.degree());
  std::vector<Decoration> decs(blocks.size(), Decoration{H, HHKind::SymInf});
  return DecoratedGroup(std::move(F), std::move(blocks), std::move(decs));
}

DecoratedGroup replicate_hh(HHKind kind, FiniteGroup const &outer)
{
  if (kind == HHKind::TrivialKernel)
    throw PreconditionError("replicate_hh: the kernel cannot be replicated");
  if (outer.degree() == 0)
    throw PreconditionError("replicate_hh: empty outer group");
  int const m = outer.degree();
  if (is_rev(kind)) {
    // Each copy may be reversed independently: S2 wr outer on pairs.
    FiniteGroup F = wreath_product(FiniteGroup::symmetric(2), outer);
    SetPartition blocks = copy_partition(2, m);
    std::vector<Decoration> decs(blocks.size(), Decoration{FiniteGroup::trivial(2), kind});
    return DecoratedGroup(std::move(F), std::move(blocks), std::move(decs));
  }
  std::vector<Decoration> decs(static_cast<std::size_t>(m),
                               Decoration{FiniteGroup::trivial(1), kind});
  return DecoratedGroup(outer, SetPartition::singletons(m), std::move(decs));
}

DecoratedGroup direct_product(DecoratedGroup const &a, DecoratedGroup const &b)
{
  int const da = a.degree();
  FiniteGroup F = direct_product(a.F(), b.F());
  std::vector<std::pair<std::vector<Point>, Decoration>> parts;
  std::vector<Point> kernel;
  auto take = [&](DecoratedGroup const &d, int offset) {
    for (std::size_t j = 0; j < d.blocks().size(); ++j) {
      std::vector<Point> block = d.blocks().block(j);
      for (auto &x : block)
        x += offset;
      if (d.decoration(j).kind == HHKind::TrivialKernel)
        kernel.insert(kernel.end(), block.begin(), block.end());
      else
        parts.emplace_back(std::move(block), d.decoration(j));
    }
  };
  take(a, 0);
  take(b, da);
  if (!kernel.empty()) {
    int const size = static_cast<int>(kernel.size());
    parts.emplace_back(std::move(kernel),
                       Decoration{FiniteGroup::trivial(size), HHKind::TrivialKernel});
  }
  return assemble(std::move(F), std::move(parts));
}

BigInt index_of_minimal_subgroup(DecoratedGroup const &delta)
{
  BigInt h = 1;
  for (auto const &d : delta.decorations())
    h *= d.H.order();
  BigInt const f = delta.F().order();
  if (f % h != 0)
    throw FalsifiedPropertyError("prod |H_j| does not divide |F|");
  return f / h;
}

// --- isomorphism ------------------------------------------------------------

std::optional<Permutation> isomorphism(DecoratedGroup const &a, DecoratedGroup const &b,
                                       Limits const &limits)
{
  if (a.degree() != b.degree() || a.blocks().size() != b.blocks().size())
    return std::nullopt;
  if (a.F().order() > BigInt(limits.max_isomorphism_order) ||
      b.F().order() > BigInt(limits.max_isomorphism_order))
    throw SizeLimitError("isomorphic: |F| above the search cap");
  if (a.F().order() != b.F().order())
    return std::nullopt;

  using Key = std::tuple<std::size_t, HHKind, BigInt>;
  auto key = [](DecoratedGroup const &d, std::size_t j) {
    return Key{d.blocks().block(j).size(), d.decoration(j).kind, d.decoration(j).H.order()};
  };
  {
    std::vector<Key> ka, kb;
    for (std::size_t j = 0; j < a.blocks().size(); ++j) {
      ka.push_back(key(a, j));
      kb.push_back(key(b, j));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb)
      return std::nullopt;
  }

  int const n = a.degree();
  std::size_t const nb = a.blocks().size();
  std::vector<Point> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(nb, false);
  std::optional<Permutation> witness;

  auto check_F = [&]() {
    Permutation pi(image);
    Permutation const inv = pi.inverse();
    for (auto const &g : a.F().generators())
      if (!b.F().contains(pi * g * inv))
        return false;
    witness = pi;
    return true;
  };

  std::function<bool(std::size_t)> place_block = [&](std::size_t j) -> bool {
    if (j == nb)
      return check_F();
    auto const &src = a.blocks().block(j);
    for (std::size_t t = 0; t < nb; ++t) {
      if (used[t] || key(a, j) != key(b, t))
        continue;
      auto const &dst = b.blocks().block(t);
      used[t] = true;
      std::vector<Point> order(dst.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        // Local bijection src[i] -> dst[order[i]] must carry H_j onto H_t.
        Permutation local(order);
        if (relabel(a.decoration(j).H, local) == b.decoration(t).H) {
          for (std::size_t i = 0; i < src.size(); ++i)
            image[src[i]] = dst[order[i]];
          if (place_block(j + 1))
            return true;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      used[t] = false;
    }
    return false;
  };

  if (place_block(0))
    return witness;
  return std::nullopt;
}

bool isomorphic(DecoratedGroup const &a, DecoratedGroup const &b, Limits const &limits)
{
  return isomorphism(a, b, limits).has_value();
}

// --- lower bound ------------------------------------------------------------

long lower_bound(std::vector<OrbitDescriptor> const &descriptors)
{
  long total = 0;
  for (auto const &d : descriptors) {
    if (auto const *inf = std::get_if<InfiniteBlocks>(&d)) {
      total += inf->count;
    } else if (auto const *fin = std::get_if<FiniteBlocks>(&d)) {
      auto const reps = subset_orbit_representatives(fin->restriction,
                                                     fin->restriction.degree());
      for (std::size_t n = 1; n < reps.size(); ++n)
        total += static_cast<long>(reps[n].size());
    }
  }
  return total;
}

// --- enumeration ------------------------------------------------------------

namespace
{

struct BlockOrbitInfo
{
  std::vector<std::size_t> blocks;
  std::vector<Permutation> carry;          // carry[i] maps blocks[0] onto blocks[i]
  std::vector<Decoration> options;
};

std::vector<BlockOrbitInfo> decoration_options(FiniteGroup const &F, SetPartition const &P,
                                               Limits const &limits)
{
  std::vector<BlockOrbitInfo> out;
  std::vector<bool> seen(P.size(), false);
  for (std::size_t r = 0; r < P.size(); ++r) {
    if (seen[r])
      continue;
    BlockOrbitInfo info;
    info.blocks.push_back(r);
    info.carry.push_back(Permutation(F.degree()));
    seen[r] = true;
    for (std::size_t k = 0; k < info.blocks.size(); ++k)
      for (auto const &f : F.generators()) {
        auto const t = static_cast<std::size_t>(P.block_of(f(P.block(info.blocks[k]).front())));
        if (!seen[t]) {
          seen[t] = true;
          info.blocks.push_back(t);
          info.carry.push_back(f * info.carry[k]);
        }
      }

    auto const &block = P.block(r);
    int const size = static_cast<int>(block.size());
    FiniteGroup const R = local_fixer(F, block);
    FiniteGroup const S = restriction(setwise_stabilizer(F, block), block);
    for (auto const &H : all_subgroups(R, limits)) {
      if (!is_normal(H, R))
        continue;
      bool invariant = true;
      for (auto const &s : S.generators()) {
        Permutation const si = s.inverse();
        for (auto const &h : H.generators())
          invariant = invariant && H.contains(s * h * si);
      }
      if (invariant)
        info.options.push_back({H, HHKind::SymInf});
    }
    FiniteGroup const trivial = FiniteGroup::trivial(size);
    if (size == 1) {
      info.options.push_back({trivial, HHKind::AutQ});
      info.options.push_back({trivial, HHKind::AutQZ});
    }
    if (size == 2) {
      info.options.push_back({trivial, HHKind::RevQ});
      info.options.push_back({trivial, HHKind::RevQZ});
    }
    if (info.blocks.size() == 1)
      info.options.push_back({trivial, HHKind::TrivialKernel});
    out.push_back(std::move(info));
  }
  return out;
}

} // namespace

std::vector<DecoratedGroup> enumerate(int max_domain, std::uint64_t max_forder,
                                      Limits const &limits)
{
  if (max_domain > 6)
    throw SizeLimitError("enumerate: max_domain above 6");

  using Key = std::tuple<int, BigInt, std::vector<std::tuple<std::size_t, HHKind, BigInt>>>;
  std::map<Key, std::vector<DecoratedGroup>> buckets;
  std::vector<DecoratedGroup> result;

  for (int n = 1; n <= max_domain; ++n) {
    for (auto const &F : symmetric_subgroup_classes(n)) {
      if (F.order() > BigInt(max_forder))
        continue;
      for (auto const &system : all_block_systems(F, limits)) {
        auto const &P = system.partition();
        auto const orbits = decoration_options(F, P, limits);

        std::vector<std::size_t> choice(orbits.size(), 0);
        for (;;) {
          int kernels = 0;
          for (std::size_t o = 0; o < orbits.size(); ++o)
            if (orbits[o].options[choice[o]].kind == HHKind::TrivialKernel)
              ++kernels;
          if (kernels <= 1) {
            std::vector<Decoration> decs(P.size());
            for (std::size_t o = 0; o < orbits.size(); ++o) {
              auto const &info = orbits[o];
              auto const &opt = info.options[choice[o]];
              for (std::size_t i = 0; i < info.blocks.size(); ++i)
                decs[info.blocks[i]] = {transport(opt.H, P.block(info.blocks[0]),
                                                  P.block(info.blocks[i]), info.carry[i]),
                                        opt.kind};
            }
            DecoratedGroup delta(F, P, std::move(decs));
            if (validate(delta).empty()) {
              Key k{n, F.order(), {}};
              for (std::size_t j = 0; j < P.size(); ++j)
                std::get<2>(k).emplace_back(P.block(j).size(), delta.decoration(j).kind,
                                            delta.decoration(j).H.order());
              std::sort(std::get<2>(k).begin(), std::get<2>(k).end());
              auto &bucket = buckets[k];
              bool const known = std::any_of(bucket.begin(), bucket.end(), [&](auto const &d) {
                return isomorphic(d, delta, limits);
              });
              if (!known) {
                bucket.push_back(delta);
                result.push_back(std::move(delta));
              }
            }
          }
          std::size_t o = 0;
          while (o < orbits.size() && ++choice[o] == orbits[o].options.size())
            choice[o++] = 0;
          if (o == orbits.size())
            break;
        }
      }
    }
  }
  return result;
}

} // namespace oligo
