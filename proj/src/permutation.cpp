#include "oligo/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "oligo/error.hpp"

namespace oligo
{

Permutation::Permutation(int degree)
: images_(static_cast<std::size_t>(degree))
{
  if (degree < 0)
    throw DomainError("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw DomainError("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::vector<std::vector<Point>> const &cycles,
                                     int degree)
{
  for (auto const &c : cycles)
    for (Point x : c)
      degree = std::max(degree, x + 1);

  std::vector<Point> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(images.size(), false);
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0)
        throw DomainError("negative point in cycle");
      if (used[c[i]])
        throw DomainError("cycles are not disjoint");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point in cycle", i);
      Point x = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        x = x * 10 + (text[i++] - '0');
      cycle.push_back(x);
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Point>(i))
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (rhs.degree() != degree())
    throw DomainError("degree mismatch in permutation product");
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = images_[rhs.images_[i]];
  return result;
}

Permutation Permutation::pow(long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

long Permutation::order() const
{
  long result = 1;
  for (int len : cycle_type())
    result = std::lcm(result, static_cast<long>(len));
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<Point>(start))
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const
{
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    int len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (auto const &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<Point> Permutation::image_of(std::span<Point const> points) const
{
  std::vector<Point> out;
  out.reserve(points.size());
  for (Point x : points)
    out.push_back(images_[x]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::extended(int degree) const
{
  if (degree < this->degree())
    throw DomainError("cannot shrink a permutation");
  Permutation result(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation Permutation::shifted(int offset, int total) const
{
  if (offset < 0 || offset + degree() > total)
    throw DomainError("shifted permutation does not fit");
  Permutation result(total);
  for (int i = 0; i < degree(); ++i)
    result.images_[offset + i] = offset + images_[i];
  return result;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace oligo
