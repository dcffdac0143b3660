#include "oligo/stabilizer_chain.hpp"

#include <algorithm>

#include "oligo/error.hpp"

namespace oligo
{

namespace
{

bool fixes_all(Permutation const &g, std::vector<Point> const &points)
{
  return std::all_of(points.begin(), points.end(),
                     [&](Point b) { return g(b) == b; });
}

Point first_moved_point(Permutation const &g)
{
  for (int i = 0; i < g.degree(); ++i)
    if (g(i) != i)
      return i;
  return -1;
}

} // namespace

StabilizerChain::StabilizerChain(int degree,
                                 std::vector<Permutation> const &generators,
                                 std::vector<Point> const &base_prefix)
: degree_(degree)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw DomainError("generator degree does not match group degree");
    if (!g.is_identity() &&
        std::find(strong_.begin(), strong_.end(), g) == strong_.end())
      strong_.push_back(g);
  }

  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b < 0 || b >= degree)
      throw DomainError("base point out of range");
    if (std::find(base.begin(), base.end(), b) == base.end())
      base.push_back(b);
  }
  for (auto const &g : strong_)
    if (fixes_all(g, base))
      base.push_back(first_moved_point(g));

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base = base[i];
    collect_generators(i);
    rebuild_orbit(levels_[i]);
  }

  // Holt's SCHREIERSIMS: process levels bottom-up, restarting below any level
  // that received a new strong generator.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t const lvl = i - 1;
    bool extended = false;
    Level const &L = levels_[lvl];
    for (std::size_t oi = 0; !extended && oi < L.orbit.size(); ++oi) {
      Point const x = L.orbit[oi];
      Permutation const &ux = L.transversal[L.slot[x]];
      for (std::size_t si = 0; si < L.gens.size(); ++si) {
        Permutation const &s = L.gens[si];
        Point const y = s(x);
        Permutation const &uy = L.transversal[L.slot[y]];
        Permutation h = uy.inverse() * s * ux;
        if (h.is_identity())
          continue;
        auto [residue, drop] = sift(std::move(h), lvl + 1);
        if (residue.is_identity())
          continue;

        strong_.push_back(residue);
        if (drop == levels_.size()) {
          Level fresh;
          fresh.base = first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = lvl + 1; l <= drop && l < levels_.size(); ++l) {
          collect_generators(l);
          rebuild_orbit(levels_[l]);
        }
        i = drop + 1;
        extended = true;
        break;
      }
    }
    if (!extended)
      --i;
  }
}

void StabilizerChain::collect_generators(std::size_t level)
{
  std::vector<Point> prefix;
  for (std::size_t l = 0; l < level; ++l)
    prefix.push_back(levels_[l].base);
  levels_[level].gens.clear();
  for (auto const &g : strong_)
    if (fixes_all(g, prefix))
      levels_[level].gens.push_back(g);
}

void StabilizerChain::rebuild_orbit(Level &level) const
{
  level.orbit.assign(1, level.base);
  level.slot.assign(static_cast<std::size_t>(degree_), -1);
  level.transversal.assign(1, Permutation(degree_));
  level.slot[level.base] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point const x = level.orbit[k];
    for (auto const &g : level.gens) {
      Point const y = g(x);
      if (level.slot[y] >= 0)
        continue;
      level.slot[y] = static_cast<int>(level.transversal.size());
      level.transversal.push_back(g * level.transversal[level.slot[x]]);
      level.orbit.push_back(y);
    }
  }
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> out;
  for (auto const &l : levels_)
    out.push_back(l.base);
  return out;
}

std::vector<Permutation> const &StabilizerChain::generators(std::size_t level) const
{
  if (level >= levels_.size())
    return empty_;
  return levels_[level].gens;
}

Permutation const *StabilizerChain::transversal(std::size_t level, Point x) const
{
  int const s = levels_[level].slot[x];
  return s < 0 ? nullptr : &levels_[level].transversal[s];
}

BigInt StabilizerChain::order() const
{
  BigInt result = 1;
  for (auto const &l : levels_)
    result *= l.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g,
                                                          std::size_t from_level) const
{
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    Point const x = g(levels_[l].base);
    int const s = levels_[l].slot[x];
    if (s < 0)
      return {std::move(g), l};
    g = levels_[l].transversal[s].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    return false;
  return sift(g).first.is_identity();
}

void StabilizerChain::for_each_element(
  std::function<void(Permutation const &)> const &visit) const
{
  std::vector<Permutation> partial(levels_.size() + 1, Permutation(degree_));
  std::vector<std::size_t> cursor(levels_.size() + 1, 0);
  std::size_t depth = 0;
  if (levels_.empty()) {
    visit(partial[0]);
    return;
  }
  for (;;) {
    if (depth == levels_.size()) {
      visit(partial[depth]);
      if (depth == 0)
        return;
      --depth;
      continue;
    }
    auto &c = cursor[depth];
    auto const &T = levels_[depth].transversal;
    if (c == T.size()) {
      c = 0;
      if (depth == 0)
        return;
      --depth;
      continue;
    }
    partial[depth + 1] = partial[depth] * T[c];
    ++c;
    ++depth;
  }
}

} // namespace oligo
