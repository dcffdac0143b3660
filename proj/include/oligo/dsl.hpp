#ifndef OLIGO_DSL_HPP
#define OLIGO_DSL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "oligo/decorated.hpp"

namespace oligo
{

/// Syntax tree of the group expression language, e.g.
///   wr(C(4), outer=C(3)) x ker(Group("(0 1)"))
struct GroupExpr
{
  enum class Node
  {
    Atom,
    Sym,
    Cyc,
    Dih,
    Id,
    Gens,
    Wreath,
    Hybrid,
    Replicate,
    Kernel,
    Product
  };

  Node node = Node::Atom;
  HHKind kind = HHKind::SymInf;            // Atom, Replicate
  int n = 0;                               // Sym, Cyc, Dih, Id
  std::vector<std::string> cycles;         // Gens
  std::vector<GroupExpr> children;
  std::size_t offset = 0;                  // byte offset in the source; not compared

  bool operator==(GroupExpr const &o) const
  {
    return node == o.node && kind == o.kind && n == o.n && cycles == o.cycles &&
           children == o.children;
  }
};

/// ParseError carries the byte offset and the expected tokens.
GroupExpr parse_expr(std::string_view text);
std::string print(GroupExpr const &expr);

FiniteGroup elaborate_finite(GroupExpr const &expr);
/// ParseError for type errors (a finite group where a decorated one is due
/// and vice versa); constructor errors pass through.
DecoratedGroup elaborate(GroupExpr const &expr);

inline DecoratedGroup parse_decorated(std::string_view text)
{
  return elaborate(parse_expr(text));
}

} // namespace oligo

#endif // OLIGO_DSL_HPP
