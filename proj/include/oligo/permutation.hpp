#ifndef OLIGO_PERMUTATION_HPP
#define OLIGO_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oligo
{

using Point = int;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose right to left: (a * b)(x) == a(b(x)).
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(int degree);

  /// Throws DomainError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle notation with 0-based points, e.g. "(0 1)(2 3)".
  /// "()" is the identity. Points beyond the largest mentioned one are
  /// fixed; the degree is max(degree, largest point + 1).
  static Permutation parse(std::string_view text, int degree = 0);

  /// Builds a permutation from a list of cycles.
  static Permutation from_cycles(std::vector<std::vector<Point>> const &cycles,
                                 int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator()(Point x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(Permutation const &rhs) const;
  Permutation pow(long exponent) const;
  long order() const;

  /// Cycles of length at least 2, each starting at its least point.
  std::vector<std::vector<Point>> cycles() const;
  /// Lengths of all cycles including fixed points, ascending.
  std::vector<int> cycle_type() const;

  /// Disjoint-cycle notation; the identity prints as "()".
  std::string str() const;

  /// Image of a point set, sorted.
  std::vector<Point> image_of(std::span<Point const> points) const;

  /// The permutation extended by fixed points to a larger degree.
  Permutation extended(int degree) const;
  /// Permutation of {offset..offset+degree-1} inside a domain of size total.
  Permutation shifted(int offset, int total) const;

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace oligo

#endif // OLIGO_PERMUTATION_HPP
