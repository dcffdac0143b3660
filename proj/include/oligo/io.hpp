#ifndef OLIGO_IO_HPP
#define OLIGO_IO_HPP

#include <json.hpp>

#include "oligo/block_system.hpp"
#include "oligo/decorated.hpp"
#include "oligo/oracle.hpp"
#include "oligo/series.hpp"

namespace oligo
{

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json to_json(BigInt const &value);
Json to_json(std::vector<BigInt> const &values);
Json to_json(Permutation const &p);

/// {"degree", "generators"}
Json group_to_json(FiniteGroup const &group);
FiniteGroup group_from_json(Json const &j);

/// Decorations are written for the least block of each F-orbit only.
Json to_json(DecoratedGroup const &delta);
/// Replicates decorations across F-orbits. ParseError on schema problems.
DecoratedGroup decorated_from_json(Json const &j);

Json to_json(HilbertForm const &form, RationalFunction const &reduced);
Json to_json(VerificationReport const &report);
Json to_json(std::vector<Violation> const &violations);
Json to_json(std::vector<BlockSystem> const &systems);

} // namespace oligo

#endif // OLIGO_IO_HPP
