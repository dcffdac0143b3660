#ifndef OLIGO_STABILIZER_CHAIN_HPP
#define OLIGO_STABILIZER_CHAIN_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "oligo/limits.hpp"
#include "oligo/permutation.hpp"

namespace oligo
{

/// Base and strong generating set, built by deterministic Schreier-Sims.
///
/// Level i holds the stabilizer G^(i) of base points b_0..b_{i-1}, the orbit
/// of b_i under it, and an explicit transversal u_x with u_x(b_i) = x.
class StabilizerChain
{
public:
  StabilizerChain() = default;

  /// The base starts with `base_prefix` (in order) and is extended as needed.
  StabilizerChain(int degree, std::vector<Permutation> const &generators,
                  std::vector<Point> const &base_prefix = {});

  int degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> base() const;
  Point base_point(std::size_t level) const { return levels_[level].base; }

  /// Strong generators of the stabilizer of the first `level` base points.
  /// level == length() yields the empty set (trivial group).
  std::vector<Permutation> const &generators(std::size_t level) const;

  std::vector<Point> const &orbit(std::size_t level) const
  {
    return levels_[level].orbit;
  }
  /// Transversal element u with u(base_point(level)) == x, or nullptr.
  Permutation const *transversal(std::size_t level, Point x) const;

  BigInt order() const;
  bool contains(Permutation const &g) const;

  /// Strips g through the chain; returns the residue and the level at which
  /// it dropped out (length() when it sifted through).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from_level = 0) const;

  /// Visits every element exactly once, in a deterministic order.
  void for_each_element(std::function<void(Permutation const &)> const &visit) const;

private:
  struct Level
  {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;                 // point -> index into transversal
    std::vector<Permutation> transversal;
  };

  void rebuild_orbit(Level &level) const;
  void collect_generators(std::size_t level);

  int degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  std::vector<Permutation> empty_;
};

} // namespace oligo

#endif // OLIGO_STABILIZER_CHAIN_HPP
