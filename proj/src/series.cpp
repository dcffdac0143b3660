#include "oligo/series.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "oligo/error.hpp"

namespace oligo
{

FiniteGroup VariableTable::g0() const
{
  return FiniteGroup(static_cast<int>(variables.size()), g0_generators);
}

std::vector<int> VariableTable::free_degrees() const
{
  std::vector<int> out;
  for (auto const &v : variables)
    if (!v.nilpotent)
      out.push_back(v.degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace
{

std::vector<Point> to_local(std::vector<Point> const &global, std::vector<Point> const &block)
{
  std::vector<Point> out;
  for (Point x : global)
    out.push_back(static_cast<Point>(std::lower_bound(block.begin(), block.end(), x) -
                                     block.begin()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> to_global(std::vector<Point> const &local, std::vector<Point> const &block)
{
  std::vector<Point> out;
  for (Point a : local)
    out.push_back(block[static_cast<std::size_t>(a)]);
  return out;
}

} // namespace

VariableTable variables(DecoratedGroup const &delta)
{
  auto const &blocks = delta.blocks();
  VariableTable table;
  // (block, local canonical subset) -> variable index
  std::map<std::pair<int, std::vector<Point>>, int> index;
  std::vector<SubsetCanonizer> canon;
  canon.reserve(blocks.size());

  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto const &block = blocks.block(j);
    auto const &dec = delta.decoration(j);
    int const b = static_cast<int>(j);
    canon.emplace_back(dec.H);
    std::vector<std::vector<Point>> locals;
    bool nilpotent = false;
    if (dec.kind == HHKind::TrivialKernel) {
      nilpotent = true;
      for (Point a = 0; a < static_cast<int>(block.size()); ++a)
        locals.push_back({a});
    } else if (is_rev(dec.kind)) {
      // A Rev pair counts as one point of its Aut counterpart.
      locals.push_back({0});
    } else {
      auto reps = subset_orbit_representatives(dec.H, dec.H.degree());
      for (std::size_t n = 1; n < reps.size(); ++n)
        for (auto &r : reps[n])
          locals.push_back(std::move(r));
    }
    for (auto const &local : locals) {
      index[{b, local}] = static_cast<int>(table.variables.size());
      table.variables.push_back(
        {b, to_global(local, block), static_cast<int>(local.size()), nilpotent});
    }
  }

  for (auto const &f : delta.F().generators()) {
    std::vector<Point> images(table.variables.size());
    for (std::size_t v = 0; v < table.variables.size(); ++v) {
      auto const &var = table.variables[v];
      auto const &dec = delta.decoration(static_cast<std::size_t>(var.block));
      int const target = blocks.block_of(f(var.representative.front()));
      auto const &tblock = blocks.block(static_cast<std::size_t>(target));
      std::vector<Point> key;
      if (is_rev(dec.kind)) {
        key = {0};
      } else {
        std::vector<Point> moved;
        for (Point x : var.representative)
          moved.push_back(f(x));
        key = to_local(moved, tblock);
        if (dec.kind != HHKind::TrivialKernel)
          key = canon[static_cast<std::size_t>(target)].canonical(std::move(key));
      }
      auto it = index.find({target, key});
      if (it == index.end())
        throw FalsifiedPropertyError("variables: F does not permute the orbit variables");
      images[v] = it->second;
    }
    table.g0_generators.emplace_back(std::move(images));
  }
  return table;
}

namespace
{

struct Molien
{
  Polynomial numerator;                    // sum over G0 divided by |G0|
  Polynomial denominator;
  std::vector<int> degrees;
};

Molien molien(DecoratedGroup const &delta, Limits const &limits)
{
  VariableTable const table = variables(delta);
  FiniteGroup const g0 = table.g0();
  int const nv = static_cast<int>(table.variables.size());

  Molien out;
  out.denominator = Polynomial{1};
  for (auto const &orbit : orbits_points(g0)) {
    auto const &v = table.variables[static_cast<std::size_t>(orbit.front())];
    if (v.nilpotent)
      continue;
    for (int i = 1; i <= static_cast<int>(orbit.size()); ++i) {
      out.degrees.push_back(i * v.degree);
      out.denominator *= Polynomial::one_minus_power(i * v.degree);
    }
  }
  std::sort(out.degrees.begin(), out.degrees.end());

  if (g0.order() > BigInt(limits.max_elements))
    throw SizeLimitError("hilbert series: |G0| above the element cap");

  // Elements with the same weighted cycle type contribute the same term.
  using Type = std::vector<std::pair<int, bool>>;
  std::map<Type, BigInt> types;
  g0.chain().for_each_element([&](Permutation const &g) {
    Type t;
    std::vector<bool> seen(static_cast<std::size_t>(nv), false);
    for (int x = 0; x < nv; ++x) {
      if (seen[x])
        continue;
      int len = 0;
      for (int y = x; !seen[y]; y = g(y)) {
        seen[y] = true;
        ++len;
      }
      auto const &v = table.variables[static_cast<std::size_t>(x)];
      t.emplace_back(len * v.degree, v.nilpotent);
    }
    std::sort(t.begin(), t.end());
    ++types[t];
  });

  Polynomial sum;
  for (auto const &[t, count] : types) {
    Polynomial den{1}, nil{1};
    for (auto const &[e, nilpotent] : t) {
      if (nilpotent)
        nil *= Polynomial::one_plus_power(e);
      else
        den *= Polynomial::one_minus_power(e);
    }
    sum += out.denominator.exact_div(den) * nil * Polynomial::constant(count);
  }
  out.numerator = sum.exact_div(g0.order());
  return out;
}

} // namespace

HilbertForm hilbert_form(DecoratedGroup const &delta, Limits const &limits)
{
  Molien const m = molien(delta, limits);
  HilbertForm form;
  form.denominator_degrees = m.degrees;
  form.numerator = m.numerator.coefficients();
  if (form.numerator.empty())
    throw FalsifiedPropertyError("hilbert form: zero numerator");
  for (std::size_t i = 0; i < form.numerator.size(); ++i)
    if (form.numerator[i] < 0)
      throw FalsifiedPropertyError("hilbert form: numerator coefficient of z^" +
                                   std::to_string(i) + " is " + form.numerator[i].str());
  return form;
}

RationalFunction hilbert_series(DecoratedGroup const &delta, Limits const &limits)
{
  Molien const m = molien(delta, limits);
  return RationalFunction(m.numerator, m.denominator).reduce();
}

std::vector<BigInt> profile_values(DecoratedGroup const &delta, int n, Limits const &limits)
{
  if (n < 0)
    throw DomainError("profile_values: negative n");
  auto const values = hilbert_series(delta, limits).taylor(n);
  for (auto const &c : values)
    if (c < 0)
      throw FalsifiedPropertyError("profile value is negative");
  return values;
}

int algebraic_dimension(DecoratedGroup const &delta)
{
  return static_cast<int>(variables(delta).free_degrees().size());
}

int growth_rate(DecoratedGroup const &delta, Limits const &limits)
{
  return hilbert_series(delta, limits).pole_order_at_one() - 1;
}

} // namespace oligo
