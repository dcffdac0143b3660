#ifndef OLIGO_PARTITION_HPP
#define OLIGO_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "oligo/permutation.hpp"

namespace oligo
{

/// A set partition of {0..domain-1}, kept canonical: points sorted within
/// each block, blocks sorted by least element. Equality is structural.
class SetPartition
{
public:
  SetPartition() = default;

  /// Throws DomainError unless the blocks are nonempty, disjoint and cover
  /// the domain.
  SetPartition(int domain, std::vector<std::vector<Point>> blocks);

  static SetPartition singletons(int domain);
  static SetPartition whole(int domain);

  /// Accepts "{{0,2},{1,3}}"; whitespace is ignored. The domain is the
  /// number of points mentioned unless given.
  static SetPartition parse(std::string_view text, int domain = -1);

  int domain() const { return domain_; }
  std::size_t size() const { return blocks_.size(); }
  std::vector<std::vector<Point>> const &blocks() const { return blocks_; }
  std::vector<Point> const &block(std::size_t i) const { return blocks_[i]; }
  /// Index of the block containing x.
  int block_of(Point x) const { return owner_[static_cast<std::size_t>(x)]; }

  bool is_trivial_bottom() const { return static_cast<int>(blocks_.size()) == domain_; }
  bool is_trivial_top() const { return blocks_.size() <= 1; }

  /// True iff every block of *this lies inside a block of other.
  bool refines(SetPartition const &other) const;

  std::string str() const;

  bool operator==(SetPartition const &o) const
  {
    return domain_ == o.domain_ && blocks_ == o.blocks_;
  }
  auto operator<=>(SetPartition const &o) const
  {
    if (auto c = domain_ <=> o.domain_; c != 0)
      return c;
    return blocks_ <=> o.blocks_;
  }

private:
  int domain_ = 0;
  std::vector<std::vector<Point>> blocks_;
  std::vector<int> owner_;
};

} // namespace oligo

#endif // OLIGO_PARTITION_HPP
