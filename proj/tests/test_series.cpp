#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "naive.hpp"
#include "oligo/error.hpp"
#include "oligo/oracle.hpp"
#include "oligo/series.hpp"

using namespace oligo;

namespace
{
FiniteGroup C(int n) { return FiniteGroup::cyclic(n); }
FiniteGroup S(int n) { return FiniteGroup::symmetric(n); }
FiniteGroup Id(int n) { return FiniteGroup::trivial(n); }

Polynomial free_denominator(std::vector<int> const &degrees)
{
  Polynomial p{1};
  for (int d : degrees)
    p *= Polynomial::one_minus_power(d);
  return p;
}
} // namespace

TEST_CASE("variables")
{
  auto const w = variables(wreath_hh(C(2)));
  CHECK(w.free_degrees() == std::vector<int>{1, 2});
  CHECK(w.g0().order() == 1);

  auto const r = variables(replicate_hh(HHKind::SymInf, C(3)));
  CHECK(r.free_degrees() == std::vector<int>{1, 1, 1});
  CHECK(r.g0().order() == 3);

  auto const k = variables(kernel_atom(Id(1)));
  REQUIRE(k.variables.size() == 1);
  CHECK(k.variables[0].nilpotent);
  CHECK(k.variables[0].degree == 1);

  for (auto const &e : catalog()) {
    auto const t = variables(e.delta);
    for (auto const &g : t.g0_generators)
      for (std::size_t v = 0; v < t.variables.size(); ++v) {
        auto const &a = t.variables[v];
        auto const &b = t.variables[static_cast<std::size_t>(g(static_cast<Point>(v)))];
        CHECK(a.degree == b.degree);
        CHECK(a.nilpotent == b.nilpotent);
      }
  }
}

TEST_CASE("hilbert series examples")
{
  auto const s3 = hilbert_series(replicate_hh(HHKind::SymInf, S(3)));
  CHECK(s3.same_function(RationalFunction(Polynomial{1}, free_denominator({1, 2, 3}))));
  auto const w = hilbert_series(wreath_hh(C(2)));
  CHECK(w.same_function(RationalFunction(Polynomial{1}, free_denominator({1, 2}))));
  auto const k = hilbert_series(direct_product(kernel_atom(Id(1)), hh_atom(HHKind::SymInf)));
  CHECK(k.same_function(RationalFunction(Polynomial{1, 1}, Polynomial{1, -1})));
  CHECK(k.reduced());
}

TEST_CASE("profile values")
{
  CHECK(naive::as_long(profile_values(replicate_hh(HHKind::SymInf, S(2)), 5)) ==
        std::vector<long>{1, 1, 2, 2, 3, 3});
  CHECK(naive::as_long(profile_values(hybrid(S(2), Id(2)), 4)) ==
        std::vector<long>{1, 1, 3, 3, 6});
  CHECK(naive::as_long(profile_values(hh_atom(HHKind::AutQ), 3)) == std::vector<long>{1, 1, 1, 1});
  CHECK(naive::as_long(profile_values(kernel_atom(S(2)), 3)) == std::vector<long>{1, 1, 1, 0});
  // expansion of 1/((1-z)(1-z^2)^2), computed independently
  CHECK(naive::as_long(profile_values(hybrid(S(2), Id(2)), 12)) ==
        naive::expand({1}, {1, 2, 2}, 12));
}

TEST_CASE("dimension and growth")
{
  for (int k = 1; k <= 5; ++k)
    CHECK(algebraic_dimension(replicate_hh(HHKind::SymInf, S(k))) == k);
  auto const t = wreath_hh(FiniteGroup::from_cycles({"(0 1)", "(2 3)"}, 4));
  CHECK(algebraic_dimension(t) == 8);
  CHECK(growth_rate(t) == 7);
  CHECK(algebraic_dimension(kernel_atom(S(2))) == 0);
  CHECK(growth_rate(kernel_atom(S(2))) == -1);
  for (auto const &e : catalog()) {
    int const d = algebraic_dimension(e.delta);
    if (d > 0)
      CHECK(growth_rate(e.delta) == d - 1);
  }
}

TEST_CASE("hilbert form")
{
  auto const f = hilbert_form(replicate_hh(HHKind::SymInf, C(3)));
  CHECK(f.denominator_degrees == std::vector<int>{1, 2, 3});
  CHECK(naive::as_long(f.numerator) == std::vector<long>{1, 0, 0, 1});
  auto const s = hilbert_form(replicate_hh(HHKind::SymInf, S(3)));
  CHECK(naive::as_long(s.numerator) == std::vector<long>{1});
  auto const w = hilbert_form(wreath_hh(C(2)));
  CHECK(w.denominator_degrees == std::vector<int>{1, 2});
  for (auto const &e : catalog()) {
    auto const form = hilbert_form(e.delta);
    for (auto const &c : form.numerator)
      CHECK(c >= 0);
    // the form and the reduced series are the same function
    CHECK(hilbert_series(e.delta).same_function(
      RationalFunction(Polynomial(form.numerator), free_denominator(form.denominator_degrees))));
  }
}

TEST_CASE("series of a product is the product of series")
{
  auto const cat = catalog();
  for (std::size_t i = 0; i + 1 < cat.size(); i += 2) {
    auto const &a = cat[i].delta;
    auto const &b = cat[i + 1].delta;
    CHECK(hilbert_series(direct_product(a, b))
            .same_function(hilbert_series(a) * hilbert_series(b)));
  }
}

TEST_CASE("Rev kinds have the series of their Aut counterparts")
{
  CHECK(hilbert_series(hh_atom(HHKind::RevQ)).same_function(hilbert_series(hh_atom(HHKind::AutQ))));
  CHECK(hilbert_series(replicate_hh(HHKind::RevQZ, S(3)))
          .same_function(hilbert_series(replicate_hh(HHKind::AutQZ, S(3)))));
}

TEST_CASE("profiles are nonnegative and weakly increasing")
{
  for (auto const &e : catalog()) {
    auto const p = profile_values(e.delta, 10);
    bool has_kernel = e.delta.kernel_block().has_value();
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] >= 0);
      if (!has_kernel && i > 0)
        CHECK(p[i] >= p[i - 1]);
    }
  }
}

TEST_CASE("series against exhaustive orbit counts on small truncations")
{
  // closure plus subset exhaustion, independent of chains and Molien sums
  std::vector<DecoratedGroup> const small = {
    wreath_hh(C(2)), hybrid(S(2), Id(2)), replicate_hh(HHKind::SymInf, S(2)),
    direct_product(kernel_atom(Id(1)), hh_atom(HHKind::SymInf)), hh_atom(HHKind::RevQ),
    direct_product(kernel_atom(S(2)), hh_atom(HHKind::AutQ))};
  for (auto const &d : small) {
    auto const t = truncate(d, 5);
    CHECK(naive::as_long(profile_values(d, 5)) == naive::profile(t.group, 5));
  }
}
