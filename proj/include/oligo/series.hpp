#ifndef OLIGO_SERIES_HPP
#define OLIGO_SERIES_HPP

#include <vector>

#include "oligo/decorated.hpp"
#include "oligo/polynomial.hpp"

namespace oligo
{

struct Variable
{
  int block = 0;
  std::vector<Point> representative;       // global points, least in its H-orbit
  int degree = 0;
  bool nilpotent = false;
};

/// Orbit variables of the invariant algebra and the finite group G0 that F
/// induces on them.
struct VariableTable
{
  std::vector<Variable> variables;
  std::vector<Permutation> g0_generators;

  FiniteGroup g0() const;
  /// Degrees of the free variables (the multiset D_G).
  std::vector<int> free_degrees() const;
};

VariableTable variables(DecoratedGroup const &delta);

/// N[z] numerator over prod (1 - z^d).
struct HilbertForm
{
  std::vector<BigInt> numerator;
  std::vector<int> denominator_degrees;
};

/// Unreduced numerator over the orbit-wise denominator.
HilbertForm hilbert_form(DecoratedGroup const &delta, Limits const &limits = Limits::defaults());

RationalFunction hilbert_series(DecoratedGroup const &delta,
                                Limits const &limits = Limits::defaults());

std::vector<BigInt> profile_values(DecoratedGroup const &delta, int n,
                                   Limits const &limits = Limits::defaults());

int algebraic_dimension(DecoratedGroup const &delta);
/// -1 when the series is a polynomial.
int growth_rate(DecoratedGroup const &delta, Limits const &limits = Limits::defaults());

} // namespace oligo

#endif // OLIGO_SERIES_HPP
