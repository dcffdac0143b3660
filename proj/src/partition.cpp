#include "oligo/partition.hpp"

#include <algorithm>
#include <cctype>

#include "oligo/error.hpp"

namespace oligo
{

SetPartition::SetPartition(int domain, std::vector<std::vector<Point>> blocks)
: domain_(domain),
  blocks_(std::move(blocks)),
  owner_(static_cast<std::size_t>(domain), -1)
{
  for (auto &b : blocks_) {
    if (b.empty())
      throw DomainError("empty block in partition");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Point x : blocks_[i]) {
      if (x < 0 || x >= domain)
        throw DomainError("partition point out of range: " + std::to_string(x));
      if (owner_[x] >= 0)
        throw DomainError("partition blocks overlap at " + std::to_string(x));
      owner_[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < domain; ++x)
    if (owner_[x] < 0)
      throw DomainError("partition does not cover point " + std::to_string(x));
}

SetPartition SetPartition::singletons(int domain)
{
  std::vector<std::vector<Point>> blocks;
  for (int x = 0; x < domain; ++x)
    blocks.push_back({x});
  return SetPartition(domain, std::move(blocks));
}

SetPartition SetPartition::whole(int domain)
{
  std::vector<Point> all;
  for (int x = 0; x < domain; ++x)
    all.push_back(x);
  if (all.empty())
    return SetPartition(0, {});
  return SetPartition(domain, {all});
}

SetPartition SetPartition::parse(std::string_view text, int domain)
{
  std::vector<std::vector<Point>> blocks;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "' in partition", i);
    ++i;
  };

  expect('{');
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      expect('{');
      std::vector<Point> block;
      for (;;) {
        skip();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected a point in partition", i);
        Point x = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          x = x * 10 + (text[i++] - '0');
        block.push_back(x);
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      expect('}');
      blocks.push_back(std::move(block));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect('}');
  }
  skip();
  if (i != text.size())
    throw ParseError("trailing characters after partition", i);

  if (domain < 0) {
    domain = 0;
    for (auto const &b : blocks)
      domain += static_cast<int>(b.size());
  }
  return SetPartition(domain, std::move(blocks));
}

bool SetPartition::refines(SetPartition const &other) const
{
  if (domain_ != other.domain_)
    throw DomainError("partitions over different domains");
  for (auto const &b : blocks_) {
    int const target = other.block_of(b.front());
    for (Point x : b)
      if (other.block_of(x) != target)
        return false;
  }
  return true;
}

std::string SetPartition::str() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i)
      out += ',';
    out += '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j)
        out += ',';
      out += std::to_string(blocks_[i][j]);
    }
    out += '}';
  }
  return out + "}";
}

} // namespace oligo
