#ifndef OLIGO_LIMITS_HPP
#define OLIGO_LIMITS_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace oligo
{

using BigInt = boost::multiprecision::cpp_int;

/// Resource caps shared by all modules.
struct Limits
{
  /// Maximum number of group elements materialised or iterated explicitly.
  std::uint64_t max_elements = 10'000'000;
  /// Maximum degree accepted by all_block_systems().
  int max_block_system_degree = 16;
  /// Maximum |F| for which isomorphic() runs its search.
  std::uint64_t max_isomorphism_order = 10'000;
  /// Maximum number of points of a truncation.
  int max_truncation_degree = 128;

  /// Defaults, with max_elements overridden by OLIGO_MAX_ORDER when set.
  static Limits const &defaults();
};

} // namespace oligo

#endif // OLIGO_LIMITS_HPP
