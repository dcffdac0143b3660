#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "naive.hpp"
#include "oligo/error.hpp"
#include "oligo/io.hpp"
#include "oligo/series.hpp"

using namespace oligo;

namespace
{
FiniteGroup C(int n) { return FiniteGroup::cyclic(n); }
FiniteGroup S(int n) { return FiniteGroup::symmetric(n); }
FiniteGroup Id(int n) { return FiniteGroup::trivial(n); }
} // namespace

TEST_CASE("constructors produce valid data")
{
  for (auto const &e : catalog())
    CHECK_MESSAGE(validate(e.delta).empty(), e.expr);
  for (HHKind k : {HHKind::SymInf, HHKind::AutQ, HHKind::RevQ, HHKind::AutQZ, HHKind::RevQZ}) {
    CHECK(validate(hh_atom(k)).empty());
    CHECK(validate(replicate_hh(k, C(3))).empty());
  }
  CHECK(validate(kernel_atom(S(3))).empty());
  CHECK(validate(empty_decorated()).empty());
  CHECK(empty_decorated().degree() == 0);
}

TEST_CASE("constructor preconditions")
{
  CHECK_THROWS_AS(hybrid(S(3), FiniteGroup::from_cycles({"(0 1)"}, 3)), PreconditionError);
  CHECK_THROWS_AS(hybrid(C(4), FiniteGroup::from_cycles({"(0 1)"}, 4)), ContainmentError);
  CHECK_THROWS_AS(hh_atom(HHKind::TrivialKernel), PreconditionError);
  CHECK_THROWS_AS(replicate_hh(HHKind::TrivialKernel, C(2)), PreconditionError);
}

TEST_CASE("validate reports each broken constraint")
{
  SUBCASE("H not normal in the local stabilizer")
  {
    DecoratedGroup d(S(3), SetPartition::whole(3),
                     {Decoration{FiniteGroup::from_cycles({"(0 1)"}, 3), HHKind::SymInf}});
    auto const v = validate(d);
    CHECK(std::any_of(v.begin(), v.end(), [](auto const &x) {
      return x.constraint == "H not normal in stabilizer restriction";
    }));
  }
  SUBCASE("kind rule")
  {
    DecoratedGroup d(Id(2), SetPartition::whole(2), {Decoration{Id(2), HHKind::AutQ}});
    CHECK(validate(d).size() == 1);
  }
  SUBCASE("decorations differ along an orbit")
  {
    DecoratedGroup d(S(2), SetPartition::singletons(2),
                     {Decoration{Id(1), HHKind::SymInf}, Decoration{Id(1), HHKind::AutQ}});
    CHECK_FALSE(validate(d).empty());
    CHECK_THROWS_AS(require_valid(d), PreconditionError);
  }
  SUBCASE("two kernel blocks")
  {
    DecoratedGroup d(Id(2), SetPartition::singletons(2),
                     {Decoration{Id(1), HHKind::TrivialKernel},
                      Decoration{Id(1), HHKind::TrivialKernel}});
    auto const v = validate(d);
    REQUIRE(v.size() == 1);
    CHECK(v[0].block == -1);
  }
}

TEST_CASE("direct products merge kernels")
{
  auto const d = direct_product(kernel_atom(S(2)), direct_product(kernel_atom(Id(1)), wreath_hh(C(2))));
  CHECK(d.degree() == 5);
  REQUIRE(d.kernel_block());
  CHECK(d.blocks().block(*d.kernel_block()).size() == 3);
  CHECK(validate(d).empty());
  CHECK(isomorphic(direct_product(wreath_hh(C(2)), empty_decorated()), wreath_hh(C(2))));
}

TEST_CASE("index of the minimal subgroup")
{
  CHECK(index_of_minimal_subgroup(wreath_hh(C(2))) == 1);
  CHECK(index_of_minimal_subgroup(hybrid(S(2), Id(2))) == 2);
  CHECK(index_of_minimal_subgroup(wreath_outer(C(4), C(3))) == 3);
  auto const a = hybrid(C(4), FiniteGroup::from_cycles({"(0 2)(1 3)"}, 4));
  auto const b = replicate_hh(HHKind::SymInf, C(3));
  CHECK(index_of_minimal_subgroup(direct_product(a, b)) ==
        index_of_minimal_subgroup(a) * index_of_minimal_subgroup(b));
}

TEST_CASE("isomorphism")
{
  auto const cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j)
      CHECK(isomorphic(cat[i].delta, cat[j].delta) == (i == j));
  CHECK(isomorphic(wreath_hh(C(2)), hybrid(C(2), C(2))));
  CHECK_FALSE(isomorphic(wreath_hh(C(2)),
                         direct_product(hh_atom(HHKind::SymInf), hh_atom(HHKind::SymInf))));
  // same data after relabelling the points
  auto const d = hybrid(C(4), FiniteGroup::from_cycles({"(0 2)(1 3)"}, 4));
  Permutation const pi = Permutation::parse("(0 3)(1 2)", 4);
  DecoratedGroup moved(relabel(d.F(), pi), SetPartition::whole(4),
                       {Decoration{relabel(d.decoration(0).H, pi), HHKind::SymInf}});
  auto const w = isomorphism(d, moved);
  REQUIRE(w);
  CHECK(isomorphic(moved, d));
  // swapped kinds are not isomorphic
  CHECK_FALSE(isomorphic(hh_atom(HHKind::AutQ), hh_atom(HHKind::AutQZ)));
  Limits lim;
  lim.max_isomorphism_order = 10;
  CHECK_THROWS_AS(isomorphic(wreath_hh(S(4)), wreath_hh(S(4)), lim), SizeLimitError);
}

TEST_CASE("lower bounds")
{
  CHECK(lower_bound({InfiniteBlocks{1}}) == 1);
  CHECK(lower_bound({FiniteBlocks{S(2)}, FiniteBlocks{S(2)}}) == 4);
  CHECK(lower_bound({FiniteBlocks{FiniteGroup::from_cycles({"(0 1)", "(2 3)"}, 4)}}) == 8);
  CHECK(lower_bound({KernelOrbit{}}) == 0);
  CHECK(lower_bound({FiniteBlocks{C(4)}}) == 5);
  // the FiniteBlocks contribution is the number of orbits of nonempty subsets
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteGroup const g = naive::random_group(rng, 2 + trial % 5);
    auto const p = naive::profile(g, g.degree());
    long total = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
      total += p[i];
    CHECK(lower_bound({FiniteBlocks{g}}) == total);
  }
}

TEST_CASE("enumeration")
{
  auto const one = enumerate(1, 1000);
  CHECK(one.size() == 4);
  std::vector<DecoratedGroup> const expected = {hh_atom(HHKind::SymInf), hh_atom(HHKind::AutQ),
                                                hh_atom(HHKind::AutQZ), kernel_atom(Id(1))};
  for (auto const &e : expected)
    CHECK(std::any_of(one.begin(), one.end(), [&](auto const &d) { return isomorphic(d, e); }));

  auto const two = enumerate(2, 1000);
  CHECK(two.size() == enumerate(2, 1000).size());
  for (auto const &d : two)
    CHECK(validate(d).empty());
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j)
      CHECK_FALSE(isomorphic(two[i], two[j]));
  bool rev = false;
  for (auto const &d : two)
    for (auto const &dec : d.decorations())
      rev = rev || dec.kind == HHKind::RevQ;
  CHECK(rev);
  CHECK_THROWS_AS(enumerate(7, 10), SizeLimitError);
}

TEST_CASE("JSON round trip")
{
  for (auto const &e : catalog()) {
    auto const j = to_json(e.delta);
    auto const back = decorated_from_json(Json::parse(j.dump()));
    CHECK_MESSAGE(isomorphic(back, e.delta), e.expr);
    CHECK(to_json(back) == j);
  }
  // one decoration per orbit of blocks
  auto const j = to_json(wreath_outer(C(4), C(3)));
  CHECK(j["decorations"].size() == 1);
  CHECK(j["blocks"].size() == 3);
  CHECK_THROWS_AS(decorated_from_json(Json::parse(R"({"degree":2})")), ParseError);
  CHECK_THROWS_AS(decorated_from_json(Json::parse(
                    R"({"degree":2,"F_generators":[[0]],"blocks":[[0,1]],"decorations":[]})")),
                  ParseError);
}
