#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "oligo/dsl.hpp"
#include "oligo/error.hpp"

using namespace oligo;
using Node = GroupExpr::Node;

namespace
{
std::size_t error_offset(std::string const &text)
{
  try {
    parse_expr(text);
  } catch (ParseError const &e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

std::string error_message(std::string const &text)
{
  try {
    elaborate(parse_expr(text));
  } catch (ParseError const &e) {
    return e.what();
  }
  return "";
}
} // namespace

TEST_CASE("parse shapes")
{
  auto const a = parse_expr("wr(C(2))");
  CHECK(a.node == Node::Wreath);
  REQUIRE(a.children.size() == 1);
  CHECK(a.children[0].node == Node::Cyc);
  CHECK(a.children[0].n == 2);

  auto const b = parse_expr("wr(C(4), outer=C(3))");
  REQUIRE(b.children.size() == 2);
  CHECK(b.children[1].node == Node::Cyc);
  CHECK(elaborate(b).blocks().size() == 3);

  auto const c = parse_expr("rep(Sinf, S(2)) x ker(Id(1))");
  CHECK(c.node == Node::Product);
  REQUIRE(c.children.size() == 2);
  CHECK(c.children[0].node == Node::Replicate);
  CHECK(c.children[0].kind == HHKind::SymInf);
  CHECK(c.children[1].node == Node::Kernel);

  auto const d = parse_expr("  AutQ x RevQ x Sinf ");
  CHECK(d.children.size() == 3);
  CHECK(parse_expr("Group(\"(0 1)(2 3)\", \"(0 2)\")").cycles.size() == 2);
}

TEST_CASE("print is inverse to parse")
{
  for (auto const &e : catalog()) {
    auto const ast = parse_expr(e.expr);
    CHECK(parse_expr(print(ast)) == ast);
    CHECK(print(ast) == e.expr);
  }
  for (std::string s : {"AutQZ", "RevQZ x ker(D(4))", "hybrid(D(4), Id(8)) x Sinf", "wr(S(3), outer=Group(\"(0 1)\"))"})
    CHECK(print(parse_expr(s)) == s);
}

TEST_CASE("syntax errors carry offsets and expectations")
{
  CHECK(error_offset("wr(C(2)") == 7);
  CHECK(error_offset("wr(C(2)) x") == 10);
  CHECK(error_offset("foo(1)") == 0);
  CHECK(error_offset("S(x)") == 2);
  CHECK(error_offset("wr(C(2), inner=C(3))") == 9);
  CHECK(error_offset("Sinf $") == 5);
  CHECK(error_offset("Group(\"(0 1)") == 6);
  try {
    parse_expr("rep(Foo, S(2))");
    FAIL("expected an error");
  } catch (ParseError const &e) {
    CHECK(e.offset() == 4);
    CHECK(std::string(e.what()).find("'Sinf'") != std::string::npos);
  }
}

TEST_CASE("elaboration type errors")
{
  CHECK(error_message("S(3)").find("not a decorated group") != std::string::npos);
  CHECK(error_message("wr(Sinf)").find("finite permutation group") != std::string::npos);
  CHECK(error_message("ker(AutQ)").find("finite permutation group") != std::string::npos);
  CHECK(error_message("wr(C(0))").find("n >= 1") != std::string::npos);
  CHECK_THROWS_AS(parse_decorated("hybrid(S(3), Group(\"(0 1)\"))"), PreconditionError);
}

TEST_CASE("elaboration results")
{
  CHECK(isomorphic(parse_decorated("wr(C(2))"), wreath_hh(FiniteGroup::cyclic(2))));
  CHECK(parse_decorated("Sinf x Sinf x AutQ").degree() == 3);
  CHECK(parse_decorated("ker(S(2)) x ker(Id(1))").blocks().size() == 1);
}
