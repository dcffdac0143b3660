#ifndef OLIGO_DECORATED_HPP
#define OLIGO_DECORATED_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oligo/finite_group.hpp"
#include "oligo/partition.hpp"

namespace oligo
{

/// The five closed highly homogeneous groups, plus the kernel marker.
enum class HHKind
{
  SymInf,
  AutQ,
  RevQ,
  AutQZ,
  RevQZ,
  TrivialKernel,
};

std::string_view to_string(HHKind kind);
/// Throws ParseError on an unknown name.
HHKind parse_kind(std::string_view name);
bool is_rev(HHKind kind);
/// RevQ -> AutQ, RevQZ -> AutQZ, others unchanged.
HHKind aut_counterpart(HHKind kind);

/// Per-block decoration: H acts on the block's points relabelled 0..|B|-1 in
/// sorted order.
struct Decoration
{
  FiniteGroup H;
  HHKind kind = HHKind::SymInf;
};

/// A finite permutation group F on U with a block system whose blocks carry
/// decorations (H_j, P_j). This is the classification datum of a closed
/// P-oligomorphic group: the group itself is generated by prod_j H_j wr P_j
/// together with F acting diagonally.
///
/// Construction checks only structure (block system, degrees); use
/// validate() for the decoration constraints.
class DecoratedGroup
{
public:
  DecoratedGroup();
  DecoratedGroup(FiniteGroup F, SetPartition blocks, std::vector<Decoration> decorations);

  FiniteGroup const &F() const { return F_; }
  SetPartition const &blocks() const { return blocks_; }
  std::vector<Decoration> const &decorations() const { return decorations_; }
  Decoration const &decoration(std::size_t block) const { return decorations_[block]; }
  int degree() const { return F_.degree(); }
  std::optional<std::size_t> kernel_block() const;

  /// F-orbits of blocks, each sorted, ordered by least block index.
  std::vector<std::vector<std::size_t>> block_orbits() const;

private:
  FiniteGroup F_;
  SetPartition blocks_;
  std::vector<Decoration> decorations_;
};

struct Violation
{
  std::string constraint;
  int block = -1;
  std::string detail;
};

/// Empty iff every decoration constraint holds.
std::vector<Violation> validate(DecoratedGroup const &delta);
/// Throws PreconditionError listing the violations, if any.
void require_valid(DecoratedGroup const &delta);

/// Carries a block-local group from block `from` to block `to` along f
/// (which must map the first block onto the second).
FiniteGroup transport(FiniteGroup const &local, std::vector<Point> const &from,
                      std::vector<Point> const &to, Permutation const &f);

DecoratedGroup empty_decorated();
DecoratedGroup hh_atom(HHKind kind);
DecoratedGroup kernel_atom(FiniteGroup const &A);
/// H wr S_inf
DecoratedGroup wreath_hh(FiniteGroup const &H);
/// [H0, H^inf], generated by H wr S_inf and H0 on blocks S_inf.
DecoratedGroup hybrid(FiniteGroup const &H0, FiniteGroup const &H);
/// H wr (S_inf wr outer)
DecoratedGroup wreath_outer(FiniteGroup const &H, FiniteGroup const &outer);
/// deg(outer) copies of a highly homogeneous atom, permuted by outer.
DecoratedGroup replicate_hh(HHKind kind, FiniteGroup const &outer);
DecoratedGroup direct_product(DecoratedGroup const &a, DecoratedGroup const &b);

/// |F| / prod_j |H_j|: the index of the minimal finite-index normal subgroup.
BigInt index_of_minimal_subgroup(DecoratedGroup const &delta);

/// Isomorphism test; the witness maps U1 onto U2.
std::optional<Permutation> isomorphism(DecoratedGroup const &a, DecoratedGroup const &b,
                                       Limits const &limits = Limits::defaults());
bool isomorphic(DecoratedGroup const &a, DecoratedGroup const &b,
                Limits const &limits = Limits::defaults());

/// Orbit descriptors for lower_bound().
struct InfiniteBlocks
{
  int count = 0;
};
struct FiniteBlocks
{
  FiniteGroup restriction;
};
struct KernelOrbit
{};
using OrbitDescriptor = std::variant<InfiniteBlocks, FiniteBlocks, KernelOrbit>;

/// Lower bound on the algebraic dimension deduced from a block system:
/// k per orbit of k infinite blocks, |age(G_B)^+| per orbit of finite
/// blocks with restriction G_B, 0 for the kernel.
long lower_bound(std::vector<OrbitDescriptor> const &descriptors);

/// All valid decorated groups with |U| in 1..max_domain and |F| <= max_forder,
/// up to isomorphism, in a deterministic order.
std::vector<DecoratedGroup> enumerate(int max_domain, std::uint64_t max_forder,
                                      Limits const &limits = Limits::defaults());

} // namespace oligo

#endif // OLIGO_DECORATED_HPP
