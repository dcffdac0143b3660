#ifndef OLIGO_SUBGROUPS_HPP
#define OLIGO_SUBGROUPS_HPP

#include <vector>

#include "oligo/finite_group.hpp"

namespace oligo
{

/// Every subgroup of a small group, by iterated joins with cyclic subgroups.
std::vector<FiniteGroup> all_subgroups(FiniteGroup const &group,
                                       Limits const &limits = Limits::defaults());

/// One representative per conjugacy class of subgroups of S_n (n <= 6),
/// ordered by group order then by sorted element list.
std::vector<FiniteGroup> symmetric_subgroup_classes(int n);

} // namespace oligo

#endif // OLIGO_SUBGROUPS_HPP
