#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "oligo/error.hpp"
#include "oligo/finite_group.hpp"
#include "oligo/oracle.hpp"

using namespace oligo;

TEST_CASE("permutation basics")
{
  auto const a = Permutation::parse("(0 1 2)", 4);
  auto const b = Permutation::parse("(0 1)", 4);
  // right to left: (a*b)(0) = a(b(0)) = a(1) = 2
  CHECK((a * b)(0) == 2);
  CHECK((a * b)(1) == 1);
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(3).is_identity());
  CHECK(a.str() == "(0 1 2)");
  CHECK(Permutation(3).str() == "()");
  CHECK(a.cycle_type() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), DomainError);
  CHECK(Permutation::parse(a.str(), 4) == a);
}

TEST_CASE("orders of standard groups")
{
  CHECK(FiniteGroup::symmetric(5).order() == 120);
  CHECK(FiniteGroup::cyclic(7).order() == 7);
  CHECK(FiniteGroup::dihedral(5).order() == 10);
  CHECK(FiniteGroup::trivial(4).order() == 1);
  CHECK(FiniteGroup::symmetric(12).order() == BigInt(479001600));
  CHECK(wreath_product(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)).order() == 48);
  CHECK(block_product(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)).order() == 12);
  CHECK(direct_product(FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)).order() == 18);
}

TEST_CASE("chain order and membership agree with closure on random groups")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int const n = 2 + trial % 6;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const all = naive::closure(g);
    CHECK(g.order() == all.size());
    auto const elems = g.elements();
    CHECK(elems.size() == all.size());
    for (int probe = 0; probe < 10; ++probe) {
      Permutation const p = naive::random_perm(rng, n);
      std::vector<int> v(p.images().begin(), p.images().end());
      CHECK(g.contains(p) == (all.count(v) > 0));
    }
  }
}

TEST_CASE("stabilizers agree with filtering the element list")
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int const n = 3 + trial % 5;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const all = naive::closure(g);
    std::vector<Point> set{0, static_cast<Point>(n - 1)};
    std::size_t point = 0, setwise = 0;
    for (auto const &e : all) {
      if (e[0] == 0 && e[n - 1] == n - 1)
        ++point;
      int const a = e[0], b = e[n - 1];
      if ((a == 0 || a == n - 1) && (b == 0 || b == n - 1))
        ++setwise;
    }
    CHECK(pointwise_stabilizer(g, set).order() == point);
    CHECK(setwise_stabilizer(g, set).order() == setwise);
  }
}

TEST_CASE("age agrees with exhaustive subset orbits")
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int const n = 2 + trial % 7;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const expected = naive::profile(g, n);
    auto const a = age(g, n);
    for (int k = 1; k <= n; ++k) {
      CHECK(static_cast<long>(a[k - 1].size()) == expected[k]);
      BigInt sum = 0;
      for (auto const &o : a[k - 1])
        sum += o.orbit_size;
      BigInt binom = 1;
      for (int i = 0; i < k; ++i)
        binom = binom * (n - i) / (i + 1);
      CHECK(sum == binom);
    }
  }
}

TEST_CASE("age of C4")
{
  auto const a = age(FiniteGroup::cyclic(4), 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0].size() == 1);
  CHECK(a[1].size() == 2);
}

TEST_CASE("canonizer returns the least image")
{
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    int const n = 3 + trial % 6;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const all = naive::closure(g);
    SubsetCanonizer canon(g);
    for (int probe = 0; probe < 8; ++probe) {
      std::uint64_t const mask = rng() & ((std::uint64_t{1} << n) - 1);
      std::vector<Point> set;
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1U)
          set.push_back(x);
      std::vector<Point> best;
      bool first = true;
      for (auto const &e : all) {
        std::vector<Point> img;
        for (Point x : set)
          img.push_back(e[x]);
        std::sort(img.begin(), img.end());
        if (first || img < best)
          best = img;
        first = false;
      }
      CHECK(canon.canonical(set) == best);
    }
  }
}

TEST_CASE("normality")
{
  auto const s3 = FiniteGroup::symmetric(3);
  CHECK(is_normal(FiniteGroup::cyclic(3), s3));
  CHECK_FALSE(is_normal(FiniteGroup::from_cycles({"(0 1)"}, 3), s3));
  CHECK_THROWS_AS(is_normal(FiniteGroup::cyclic(4), FiniteGroup::from_cycles({"(0 2)"}, 4)),
                  ContainmentError);
}

TEST_CASE("induced action and its kernel")
{
  auto const w = wreath_product(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3));
  auto const ia = induced_action(w, copy_partition(2, 3));
  CHECK(ia.image.order() == 6);
  CHECK(ia.kernel.order() == 8);
  CHECK_THROWS_AS(induced_action(FiniteGroup::cyclic(4), SetPartition::parse("{{0,1},{2,3}}")),
                  DomainError);
}

TEST_CASE("subdirect products")
{
  auto const s3 = FiniteGroup::symmetric(3);
  auto const a3 = FiniteGroup::cyclic(3);
  auto const t = Permutation::parse("(0 1)", 3);
  auto const r = Permutation::parse("(0 1 2)", 3);
  // S3 x S3 with matching sign: order 6 * 3 = 18
  auto const g = subdirect(s3, s3, a3, a3, {{t, t}, {r, Permutation(3)}});
  CHECK(g.order() == 18);
  // full direct product when N = G
  CHECK(subdirect(s3, s3, s3, s3, {}).order() == 36);
  CHECK_THROWS_AS(subdirect(s3, s3, FiniteGroup::from_cycles({"(0 1)"}, 3), a3, {}),
                  PreconditionError);
  CHECK_THROWS_AS(subdirect(s3, s3, a3, s3, {{t, t}}), CorrespondenceError);
}

TEST_CASE("permutation isomorphism and relabelling")
{
  auto const a = FiniteGroup::from_cycles({"(0 1)(2 3)"}, 4);
  auto const b = FiniteGroup::from_cycles({"(0 2)(1 3)"}, 4);
  auto const c = FiniteGroup::from_cycles({"(0 1)"}, 4);
  CHECK(permutation_isomorphic(a, b));
  CHECK_FALSE(permutation_isomorphic(a, c));
  auto const moved = relabel(a, Permutation::parse("(1 2)", 4));
  CHECK(moved == b);
}

TEST_CASE("Burnside and orbit enumeration backends agree")
{
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    int const n = 2 + trial % 9;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const b = brute_profile_burnside(g, n);
    CHECK(b == brute_profile_orbits(g, n));
    if (g.order() <= 5040)
      CHECK(naive::as_long(b) == naive::profile(g, n));
  }
}

TEST_CASE("element cap")
{
  Limits lim;
  lim.max_elements = 100;
  CHECK_THROWS_AS(FiniteGroup::symmetric(6).elements(lim), SizeLimitError);
  CHECK(FiniteGroup::symmetric(4).elements(lim).size() == 24);
}
