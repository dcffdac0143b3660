#ifndef OLIGO_FINITE_GROUP_HPP
#define OLIGO_FINITE_GROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oligo/limits.hpp"
#include "oligo/partition.hpp"
#include "oligo/permutation.hpp"
#include "oligo/stabilizer_chain.hpp"

namespace oligo
{

/// A permutation group of {0..degree-1} given by generators.
///
/// Immutable. The stabilizer chain is computed on first use and shared
/// between copies.
class FiniteGroup
{
public:
  FiniteGroup() : FiniteGroup(0, {}) {}
  FiniteGroup(int degree, std::vector<Permutation> generators);

  static FiniteGroup trivial(int degree);
  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);
  /// Symmetries of the n-gon (order 2n for n >= 3).
  static FiniteGroup dihedral(int n);
  /// Generators in cycle notation, e.g. {"(0 1)(2 3)"}.
  static FiniteGroup from_cycles(std::vector<std::string> const &generators,
                                 int degree = 0);

  int degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }

  StabilizerChain const &chain() const;
  BigInt order() const { return chain().order(); }
  /// order() as an unsigned 64-bit value; SizeLimitError if it does not fit.
  std::uint64_t small_order() const;
  bool is_trivial() const;
  bool contains(Permutation const &g) const;
  /// Every generator of sub lies in *this.
  bool contains(FiniteGroup const &sub) const;

  /// All elements, sorted. SizeLimitError beyond limits.max_elements.
  std::vector<Permutation> elements(Limits const &limits = Limits::defaults()) const;

  /// Same degree and same element set.
  bool operator==(FiniteGroup const &other) const;

  std::string str() const;

private:
  struct Cache
  {
    std::once_flag once;
    StabilizerChain chain;
  };

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// One orbit of n-subsets: its lexicographically least member and its size.
struct SubsetOrbitSummary
{
  int n = 0;
  std::vector<Point> representative;
  BigInt orbit_size = 0;
};

/// Lexicographically least image of point sets under a group.
///
/// Works through pointwise stabilizers of the growing minimal prefix, so it
/// never enumerates group elements. Levels are cached per prefix.
class SubsetCanonizer
{
public:
  explicit SubsetCanonizer(FiniteGroup group);

  std::vector<Point> canonical(std::vector<Point> set);
  FiniteGroup const &group() const { return group_; }

private:
  struct Level
  {
    std::vector<Permutation> gens;
    std::vector<Point> orbit_min;
    std::vector<Permutation> to_min;
  };

  Level const &level(std::vector<Point> const &prefix);

  FiniteGroup group_;
  std::map<std::vector<Point>, std::unique_ptr<Level>> levels_;
};

BigInt group_order(FiniteGroup const &group);

/// G-orbits on points, sorted, ordered by least element.
std::vector<std::vector<Point>> orbits_points(FiniteGroup const &group);

/// Orbit of a point set, each member sorted.
std::vector<std::vector<Point>> subset_orbit(FiniteGroup const &group,
                                             std::vector<Point> set,
                                             Limits const &limits = Limits::defaults());

/// For n = 1..nmax, the orbits of n-subsets (result[n-1]).
std::vector<std::vector<SubsetOrbitSummary>> age(FiniteGroup const &group, int nmax,
                                                 Limits const &limits = Limits::defaults());

/// Canonical representatives of orbits of n-subsets, for n = 0..nmax.
std::vector<std::vector<std::vector<Point>>> subset_orbit_representatives(
  FiniteGroup const &group, int nmax);

FiniteGroup pointwise_stabilizer(FiniteGroup const &group, std::vector<Point> const &points);
FiniteGroup setwise_stabilizer(FiniteGroup const &group, std::vector<Point> const &points);
/// Restriction to a G-stable set, relabelled by the sorted order of `points`.
FiniteGroup restriction(FiniteGroup const &group, std::vector<Point> const &points);
/// Restriction of a single permutation that stabilizes `points`.
Permutation restrict_permutation(Permutation const &g, std::vector<Point> const &points);

/// True iff sub is normalised by every generator of group. ContainmentError
/// unless sub <= group.
bool is_normal(FiniteGroup const &sub, FiniteGroup const &group);

struct InducedAction
{
  FiniteGroup image;                       // acting on block indices
  std::vector<Permutation> generator_images;
  FiniteGroup kernel;                      // blockwise stabilizer S_B
};

/// Action on the blocks of a block system. DomainError if it is not one.
InducedAction induced_action(FiniteGroup const &group, SetPartition const &blocks);

/// Subgroup {(g1, g2) : match(g1 N1) = g2 N2} of G1 x G2 on the disjoint union.
/// `match` pairs (g1, g2) generate the coset correspondence.
FiniteGroup subdirect(FiniteGroup const &g1, FiniteGroup const &g2,
                      FiniteGroup const &n1, FiniteGroup const &n2,
                      std::vector<std::pair<Permutation, Permutation>> const &match);

/// G1 x G2 acting on the disjoint union (G1's points first).
FiniteGroup direct_product(FiniteGroup const &g1, FiniteGroup const &g2);
/// H wr P on deg(P) copies of H's domain; copy i occupies [i*m, (i+1)*m).
FiniteGroup wreath_product(FiniteGroup const &inner, FiniteGroup const &outer);
/// H acting identically in every copy while P permutes the copies.
FiniteGroup block_product(FiniteGroup const &inner, FiniteGroup const &outer);
/// Copy partition used by wreath_product / block_product.
SetPartition copy_partition(int block_size, int copies);

/// Conjugate in Sym(n)? Exhaustive for small degree; SizeLimitError past 10.
bool permutation_isomorphic(FiniteGroup const &a, FiniteGroup const &b);

/// Applies a relabelling (old point -> new point) to every generator.
FiniteGroup relabel(FiniteGroup const &group, Permutation const &relabelling);

} // namespace oligo

#endif // OLIGO_FINITE_GROUP_HPP
