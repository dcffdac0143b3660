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

BigInt factorial(int n)
{
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}
} // namespace

TEST_CASE("truncation shapes")
{
  auto const t = truncate(wreath_hh(C(2)), 3);
  CHECK(t.group.degree() == 6);
  CHECK(t.group.order() == 48);
  CHECK(naive::closure(t.group).size() == 48);
  CHECK(truncate(hh_atom(HHKind::SymInf), 5).group == S(5));
  CHECK(truncate(hybrid(S(2), Id(2)), 2).group.order() == 4);
  auto const k = truncate(direct_product(kernel_atom(S(2)), wreath_hh(C(2))), 4);
  CHECK(k.group.degree() == 4 * 2 + 2);
  CHECK(k.kernel.size() == 2);
  CHECK(is_block_system(k.group, k.copy_partition()));
  Limits lim;
  lim.max_truncation_degree = 10;
  CHECK_THROWS_AS(truncate(wreath_hh(C(4)), 3, lim), SizeLimitError);
}

TEST_CASE("truncation order law")
{
  for (auto const &e : catalog()) {
    for (int k : {1, 3, 4}) {
      auto const t = truncate(e.delta, k);
      BigInt expected = index_of_minimal_subgroup(e.delta);
      for (auto const &dec : e.delta.decorations())
        if (dec.kind != HHKind::TrivialKernel) {
          for (int i = 0; i < k; ++i)
            expected *= dec.H.order();
          expected *= factorial(k);
        }
      CHECK_MESSAGE(t.group.order() == expected, e.expr << " k=" << k);
      CHECK(t.group.order() / truncate_minimal_subgroup(e.delta, k).order() ==
            index_of_minimal_subgroup(e.delta));
    }
  }
}

TEST_CASE("brute profile examples")
{
  CHECK(naive::as_long(brute_profile(S(3), 3)) == std::vector<long>{1, 1, 1, 1});
  CHECK(naive::as_long(brute_profile(C(4), 2)) == std::vector<long>{1, 1, 2});
  CHECK(naive::as_long(brute_profile(truncate(wreath_hh(C(2)), 6).group, 6)) ==
        std::vector<long>{1, 1, 2, 2, 3, 3, 4});
  CHECK(naive::as_long(brute_profile(Id(3), 5)) == std::vector<long>{1, 3, 3, 1, 0, 0});
}

TEST_CASE("backends agree beyond the element cap")
{
  Limits lim;
  lim.max_elements = 1000;
  auto const g = truncate(replicate_hh(HHKind::SymInf, S(2)), 5).group;
  CHECK_THROWS_AS(brute_profile_burnside(g, 5, lim), SizeLimitError);
  CHECK(brute_profile(g, 5, lim) == brute_profile_burnside(g, 5));
}

TEST_CASE("verify_profile examples")
{
  auto const a = verify_profile(wreath_hh(C(2)), 6, 6);
  CHECK(a.match);
  auto const b = verify_profile(replicate_hh(HHKind::SymInf, S(2)), 6, 6);
  CHECK(b.match);
  CHECK(b.oracle_prefix[6] == 4);
  auto const c = verify_profile(direct_product(kernel_atom(Id(1)), hh_atom(HHKind::SymInf)), 6, 6);
  CHECK(naive::as_long(c.oracle_prefix) == std::vector<long>{1, 2, 2, 2, 2, 2, 2});
  CHECK(c.match);
  CHECK_THROWS_AS(verify_profile(wreath_hh(C(2)), 3, 5), PreconditionError);
}

TEST_CASE("prefix stability in k")
{
  std::vector<DecoratedGroup> const ds = {wreath_hh(C(2)), hybrid(S(2), Id(2)),
                                          replicate_hh(HHKind::SymInf, C(3)),
                                          direct_product(kernel_atom(S(2)), wreath_hh(C(2)))};
  for (auto const &d : ds)
    for (int n = 1; n <= 5; ++n) {
      auto const ref = brute_profile(truncate(d, n).group, n);
      for (int k = n + 1; k <= 7; ++k)
        CHECK(brute_profile(truncate(d, k).group, n) == ref);
    }
}

TEST_CASE("towers")
{
  auto const wr = wreath_product(C(2), S(4));
  auto const blocks = copy_partition(2, 4);
  for (auto const &h : tower(wr, blocks, 3))
    CHECK(h == C(2));

  auto const box = block_product(C(2), S(4));
  auto const tb = tower(box, blocks, 3);
  CHECK(tb[0] == C(2));
  for (int i = 1; i <= 3; ++i)
    CHECK(tb[static_cast<std::size_t>(i)].is_trivial());

  auto const t = truncate(hybrid(S(2), Id(2)), 4);
  auto const sb = superblock(t, 0);
  auto const th = tower(sb.group, sb.blocks, 3);
  CHECK(th[0] == S(2));
  CHECK(th[1].is_trivial());

  // C4 permutes its four singleton blocks cyclically, not symmetrically
  CHECK_THROWS_AS(tower(C(4), SetPartition::singletons(4), 1), PreconditionError);
  CHECK_THROWS_AS(tower(wr, blocks, 4), PreconditionError);
}

TEST_CASE("subdirect reconstruction")
{
  auto const blocks = copy_partition(2, 4);
  CHECK(verify_subdirect_decomposition(wreath_product(C(2), S(4)), blocks, 2, 2));
  CHECK(verify_subdirect_decomposition(block_product(C(2), S(4)), blocks, 2, 2));
  auto const t = truncate(hybrid(S(2), Id(2)), 4);
  auto const sb = superblock(t, 0);
  CHECK(verify_subdirect_decomposition(sb.group, sb.blocks, 2, 2));
  CHECK(verify_subdirect_decomposition(sb.group, sb.blocks, 1, 3));
  CHECK_THROWS_AS(verify_subdirect_decomposition(sb.group, sb.blocks, 3, 2), PreconditionError);
}

TEST_CASE("recognition")
{
  auto const a = recognize(wreath_product(C(2), S(6)), 6);
  CHECK(isomorphic(a, wreath_hh(C(2))));
  auto const b = recognize(S(6), 6);
  CHECK(isomorphic(b, hh_atom(HHKind::SymInf)));
  auto const c = recognize(truncate(hybrid(S(2), Id(2)), 6).group, 6);
  CHECK(isomorphic(c, hybrid(S(2), Id(2))));
  // a relabelled truncation is recognised all the same
  auto const g = truncate(hybrid(C(4), FiniteGroup::from_cycles({"(0 2)(1 3)"}, 4)), 5).group;
  std::mt19937 rng(1);
  Permutation const pi = naive::random_perm(rng, g.degree());
  CHECK(isomorphic(recognize(relabel(g, pi), 5),
                   hybrid(C(4), FiniteGroup::from_cycles({"(0 2)(1 3)"}, 4))));
  CHECK_THROWS_AS(recognize(S(6), 3), PreconditionError);
}
