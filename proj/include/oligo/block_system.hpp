#ifndef OLIGO_BLOCK_SYSTEM_HPP
#define OLIGO_BLOCK_SYSTEM_HPP

#include <utility>
#include <vector>

#include "oligo/finite_group.hpp"
#include "oligo/partition.hpp"

namespace oligo
{

/// A G-stable set partition. Construction checks stability.
class BlockSystem
{
public:
  BlockSystem(FiniteGroup group, SetPartition partition);

  FiniteGroup const &group() const { return group_; }
  SetPartition const &partition() const { return partition_; }

private:
  FiniteGroup group_;
  SetPartition partition_;
};

/// True iff every generator maps blocks onto blocks.
bool is_block_system(FiniteGroup const &group, SetPartition const &partition);

SetPartition meet(SetPartition const &a, SetPartition const &b);
SetPartition join(SetPartition const &a, SetPartition const &b);

/// Finest G-stable partition in which all the given pairs are merged.
SetPartition minimal_partition(FiniteGroup const &group,
                               std::vector<std::pair<Point, Point>> const &pairs);

/// Smallest block (of some block system) containing both points.
/// PreconditionError when they lie in different orbits.
std::vector<Point> minimal_block(FiniteGroup const &group, Point a, Point b);

/// Every block system of the group, block count descending then
/// lexicographic. SizeLimitError above limits.max_block_system_degree.
std::vector<BlockSystem> all_block_systems(FiniteGroup const &group,
                                           Limits const &limits = Limits::defaults());

} // namespace oligo

#endif // OLIGO_BLOCK_SYSTEM_HPP
