#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "oligo/block_system.hpp"
#include "oligo/error.hpp"

using namespace oligo;

TEST_CASE("block systems of C4")
{
  auto const systems = all_block_systems(FiniteGroup::cyclic(4));
  REQUIRE(systems.size() == 3);
  CHECK(systems[0].partition() == SetPartition::singletons(4));
  CHECK(systems[1].partition() == SetPartition::parse("{{0,2},{1,3}}"));
  CHECK(systems[2].partition() == SetPartition::whole(4));
}

TEST_CASE("primitive groups have only the trivial systems")
{
  CHECK(all_block_systems(FiniteGroup::symmetric(5)).size() == 2);
  CHECK(all_block_systems(FiniteGroup::cyclic(7)).size() == 2);
}

TEST_CASE("all_block_systems matches exhaustive partition search")
{
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int const n = 1 + trial % 6;
    FiniteGroup const g = naive::random_group(rng, n);
    auto const gens = naive::to_perms(g);
    std::size_t expected = 0;
    for (auto const &label : naive::set_partitions(n))
      if (naive::stable(gens, label))
        ++expected;
    auto const found = all_block_systems(g);
    CHECK(found.size() == expected);
    for (auto const &s : found)
      CHECK(is_block_system(g, s.partition()));
  }
}

TEST_CASE("meet and join of block systems are block systems")
{
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteGroup const g = naive::random_group(rng, 6);
    auto const systems = all_block_systems(g);
    for (auto const &a : systems)
      for (auto const &b : systems) {
        CHECK(is_block_system(g, meet(a.partition(), b.partition())));
        CHECK(is_block_system(g, join(a.partition(), b.partition())));
      }
  }
}

TEST_CASE("meet and join on explicit partitions")
{
  auto const a = SetPartition::parse("{{0,1},{2,3},{4,5}}");
  auto const b = SetPartition::parse("{{0,2},{1,3},{4},{5}}");
  CHECK(meet(a, b) == SetPartition::singletons(6));
  CHECK(join(a, b) == SetPartition::parse("{{0,1,2,3},{4,5}}"));
}

TEST_CASE("minimal blocks")
{
  auto const c4 = FiniteGroup::cyclic(4);
  CHECK(minimal_block(c4, 0, 2) == std::vector<Point>{0, 2});
  CHECK(minimal_block(c4, 0, 1) == std::vector<Point>{0, 1, 2, 3});
  auto const w = wreath_product(FiniteGroup::cyclic(3), FiniteGroup::symmetric(2));
  CHECK(minimal_block(w, 0, 1) == std::vector<Point>{0, 1, 2});
  CHECK_THROWS_AS(minimal_block(FiniteGroup::from_cycles({"(0 1)"}, 3), 0, 2), PreconditionError);
}

TEST_CASE("invalid block system is rejected")
{
  CHECK_FALSE(is_block_system(FiniteGroup::cyclic(4), SetPartition::parse("{{0,1},{2,3}}")));
  CHECK_THROWS_AS(BlockSystem(FiniteGroup::cyclic(4), SetPartition::parse("{{0,1},{2,3}}")),
                  DomainError);
}

TEST_CASE("degree cap")
{
  Limits lim;
  lim.max_block_system_degree = 4;
  CHECK_THROWS_AS(all_block_systems(FiniteGroup::cyclic(5), lim), SizeLimitError);
}
