// The decorated groups exercised across the test suite.
#ifndef OLIGO_TESTS_CATALOG_HPP
#define OLIGO_TESTS_CATALOG_HPP

#include <string>
#include <vector>

#include "oligo/decorated.hpp"
#include "oligo/dsl.hpp"

struct Entry
{
  std::string expr;
  oligo::DecoratedGroup delta;
  bool symmetric_only;                     // all non-kernel kinds SymInf
};

inline std::vector<Entry> catalog()
{
  std::vector<std::pair<std::string, bool>> const src = {
    {"wr(C(2))", true},
    {"wr(C(4))", true},
    {"wr(Group(\"(0 1)\", \"(2 3)\"))", true},
    {"hybrid(S(2), Id(2))", true},
    {"hybrid(C(4), Group(\"(0 2)(1 3)\"))", true},
    {"wr(C(4), outer=C(3))", true},
    {"rep(Sinf, S(2))", true},
    {"rep(Sinf, C(3))", true},
    {"rep(AutQ, C(3))", false},
    {"ker(S(2)) x wr(C(2))", true},
  };
  std::vector<Entry> out;
  for (auto const &[e, sym] : src)
    out.push_back({e, oligo::parse_decorated(e), sym});
  return out;
}

#endif
