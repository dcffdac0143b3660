#ifndef OLIGO_ORACLE_HPP
#define OLIGO_ORACLE_HPP

#include <vector>

#include "oligo/block_system.hpp"
#include "oligo/decorated.hpp"

namespace oligo
{

/// Finite shadow of Group(Delta): every non-kernel P_j replaced by S_k.
struct Truncation
{
  FiniteGroup group;
  int k = 0;
  /// copies[j][i]: points of copy i of block j (empty for the kernel block).
  std::vector<std::vector<std::vector<Point>>> copies;
  std::vector<Point> kernel;

  /// Partition into block copies, kernel points as singletons.
  SetPartition copy_partition() const;
};

Truncation truncate(DecoratedGroup const &delta, int k, Limits const &limits = Limits::defaults());

/// Truncation of the minimal subgroup K = prod H_j wr S_k (no F, trivial on
/// the kernel), on the same points as truncate(delta, k).
FiniteGroup truncate_minimal_subgroup(DecoratedGroup const &delta, int k,
                                      Limits const &limits = Limits::defaults());

/// Orbit counts of n-subsets, n = 0..nmax. Burnside when |G| fits the element
/// cap, orbit enumeration otherwise.
std::vector<BigInt> brute_profile(FiniteGroup const &group, int nmax,
                                  Limits const &limits = Limits::defaults());
std::vector<BigInt> brute_profile_burnside(FiniteGroup const &group, int nmax,
                                           Limits const &limits = Limits::defaults());
std::vector<BigInt> brute_profile_orbits(FiniteGroup const &group, int nmax);

struct VerificationReport
{
  int k = 0;
  int n = 0;
  std::vector<BigInt> series_prefix;
  std::vector<BigInt> oracle_prefix;
  bool match = false;
  long long millis = 0;
};

VerificationReport verify_profile(DecoratedGroup const &delta, int k, int nmax,
                                  Limits const &limits = Limits::defaults());

/// H_0..H_t: restrictions to the first block of the pointwise stabilizers,
/// inside the blockwise stabilizer, of blocks 1..i.
std::vector<FiniteGroup> tower(FiniteGroup const &group, SetPartition const &blocks, int t);

bool verify_subdirect_decomposition(FiniteGroup const &group, SetPartition const &blocks,
                                    int l1, int l2);

/// Superblock i of a truncation: the group it induces and its k copy blocks.
struct Superblock
{
  FiniteGroup group;
  SetPartition blocks;
};
Superblock superblock(Truncation const &trunc, std::size_t block);

DecoratedGroup recognize(FiniteGroup const &group, int k, Limits const &limits = Limits::defaults());

} // namespace oligo

#endif // OLIGO_ORACLE_HPP
