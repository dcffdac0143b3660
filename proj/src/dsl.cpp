#include "oligo/dsl.hpp"

#include <cctype>

#include "oligo/error.hpp"

namespace oligo
{

namespace
{

using Node = GroupExpr::Node;

struct Token
{
  enum Type
  {
    Name,
    Number,
    String,
    LParen,
    RParen,
    Comma,
    Equals,
    End
  } type;
  std::string text;
  std::size_t offset;
};

std::string describe(Token const &t)
{
  switch (t.type) {
  case Token::End: return "end of input";
  case Token::String: return "string \"" + t.text + "\"";
  default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view s)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char const c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t const start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Token::Name, std::string(s.substr(start, i - start)), start});
    } else if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
    } else if (c == '"') {
      ++i;
      while (i < s.size() && s[i] != '"')
        ++i;
      if (i == s.size())
        throw ParseError("unterminated string; expected one of {'\"'}", start);
      out.push_back({Token::String, std::string(s.substr(start + 1, i - start - 1)), start});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", i++});
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", i++});
    } else if (c == '=') {
      out.push_back({Token::Equals, "=", i++});
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] +
                         "'; expected one of {name, '(', ')', ',', '=', number, string}",
                       i);
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

char const *const atom_names[] = {"Sinf", "AutQ", "RevQ", "AutQZ", "RevQZ"};
HHKind const atom_kinds[] = {HHKind::SymInf, HHKind::AutQ, HHKind::RevQ, HHKind::AutQZ,
                             HHKind::RevQZ};
char const *const call_names[] = {"S", "C", "D", "Id", "Group", "wr", "hybrid", "rep", "ker"};

std::string names_list(bool with_calls, bool with_atoms)
{
  std::string s;
  auto add = [&](std::string const &x) { s += (s.empty() ? "" : ", ") + x; };
  if (with_calls)
    for (auto const *n : call_names)
      add(std::string("'") + n + "('");
  if (with_atoms)
    for (auto const *n : atom_names)
      add(std::string("'") + n + "'");
  return s;
}

class Parser
{
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  GroupExpr parse()
  {
    GroupExpr e = expr();
    if (peek().type != Token::End)
      fail("{'x', end of input}");
    return e;
  }

private:
  Token const &peek() const { return tokens_[pos_]; }
  Token const &next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::string const &expected) const
  {
    throw ParseError("unexpected " + describe(peek()) + "; expected one of " + expected,
                     peek().offset);
  }

  void expect(Token::Type type, char const *what)
  {
    if (peek().type != type)
      fail(std::string("{") + what + "}");
    ++pos_;
  }

  GroupExpr expr()
  {
    GroupExpr first = term();
    if (!(peek().type == Token::Name && peek().text == "x"))
      return first;
    GroupExpr product;
    product.node = Node::Product;
    product.offset = first.offset;
    product.children.push_back(std::move(first));
    while (peek().type == Token::Name && peek().text == "x") {
      ++pos_;
      product.children.push_back(term());
    }
    return product;
  }

  int number()
  {
    if (peek().type != Token::Number)
      fail("{number}");
    auto const &t = next();
    if (t.text.size() > 6)
      throw ParseError("number too large", t.offset);
    return std::stoi(t.text);
  }

  GroupExpr term()
  {
    if (peek().type != Token::Name || peek().text == "x")
      fail("{" + names_list(true, true) + "}");
    Token const name = next();
    GroupExpr e;
    e.offset = name.offset;
    for (std::size_t i = 0; i < std::size(atom_names); ++i)
      if (name.text == atom_names[i]) {
        e.node = Node::Atom;
        e.kind = atom_kinds[i];
        return e;
      }

    std::string const &f = name.text;
    bool known = false;
    for (auto const *c : call_names)
      known = known || f == c;
    if (!known) {
      pos_--;
      fail("{" + names_list(true, true) + "}");
    }
    expect(Token::LParen, "'('");
    if (f == "S" || f == "C" || f == "D" || f == "Id") {
      e.node = f == "S" ? Node::Sym : f == "C" ? Node::Cyc : f == "D" ? Node::Dih : Node::Id;
      e.n = number();
    } else if (f == "Group") {
      e.node = Node::Gens;
      if (peek().type != Token::String)
        fail("{string}");
      e.cycles.push_back(next().text);
      while (peek().type == Token::Comma) {
        ++pos_;
        if (peek().type != Token::String)
          fail("{string}");
        e.cycles.push_back(next().text);
      }
    } else if (f == "wr") {
      e.node = Node::Wreath;
      e.children.push_back(expr());
      if (peek().type == Token::Comma) {
        ++pos_;
        if (!(peek().type == Token::Name && peek().text == "outer"))
          fail("{'outer'}");
        ++pos_;
        expect(Token::Equals, "'='");
        e.children.push_back(expr());
      }
    } else if (f == "hybrid") {
      e.node = Node::Hybrid;
      e.children.push_back(expr());
      expect(Token::Comma, "','");
      e.children.push_back(expr());
    } else if (f == "rep") {
      e.node = Node::Replicate;
      bool found = false;
      if (peek().type == Token::Name)
        for (std::size_t i = 0; i < std::size(atom_names); ++i)
          if (peek().text == atom_names[i]) {
            e.kind = atom_kinds[i];
            found = true;
          }
      if (!found)
        fail("{" + names_list(false, true) + "}");
      ++pos_;
      expect(Token::Comma, "','");
      e.children.push_back(expr());
    } else { // ker
      e.node = Node::Kernel;
      e.children.push_back(expr());
    }
    expect(Token::RParen, "')'");
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string atom_name(HHKind k)
{
  for (std::size_t i = 0; i < std::size(atom_kinds); ++i)
    if (atom_kinds[i] == k)
      return atom_names[i];
  throw DomainError("no surface syntax for kind " + std::string(to_string(k)));
}

bool is_finite(Node n)
{
  return n == Node::Sym || n == Node::Cyc || n == Node::Dih || n == Node::Id || n == Node::Gens;
}

} // namespace

GroupExpr parse_expr(std::string_view text)
{
  return Parser(text).parse();
}

std::string print(GroupExpr const &e)
{
  switch (e.node) {
  case Node::Atom: return atom_name(e.kind);
  case Node::Sym: return "S(" + std::to_string(e.n) + ")";
  case Node::Cyc: return "C(" + std::to_string(e.n) + ")";
  case Node::Dih: return "D(" + std::to_string(e.n) + ")";
  case Node::Id: return "Id(" + std::to_string(e.n) + ")";
  case Node::Gens: {
    std::string s = "Group(";
    for (std::size_t i = 0; i < e.cycles.size(); ++i)
      s += (i ? ", \"" : "\"") + e.cycles[i] + "\"";
    return s + ")";
  }
  case Node::Wreath:
    return "wr(" + print(e.children[0]) +
           (e.children.size() > 1 ? ", outer=" + print(e.children[1]) : "") + ")";
  case Node::Hybrid: return "hybrid(" + print(e.children[0]) + ", " + print(e.children[1]) + ")";
  case Node::Replicate: return "rep(" + atom_name(e.kind) + ", " + print(e.children[0]) + ")";
  case Node::Kernel: return "ker(" + print(e.children[0]) + ")";
  case Node::Product: {
    std::string s;
    for (std::size_t i = 0; i < e.children.size(); ++i)
      s += (i ? " x " : "") + print(e.children[i]);
    return s;
  }
  }
  return {};
}

FiniteGroup elaborate_finite(GroupExpr const &e)
{
  switch (e.node) {
  case Node::Sym: return FiniteGroup::symmetric(e.n);
  case Node::Cyc:
    if (e.n < 1)
      throw ParseError("C(n) needs n >= 1", e.offset);
    return FiniteGroup::cyclic(e.n);
  case Node::Dih:
    if (e.n < 1)
      throw ParseError("D(n) needs n >= 1", e.offset);
    return FiniteGroup::dihedral(e.n);
  case Node::Id: return FiniteGroup::trivial(e.n);
  case Node::Gens:
    try {
      return FiniteGroup::from_cycles(e.cycles);
    } catch (DomainError const &err) {
      throw ParseError(std::string("bad cycle string: ") + err.what(), e.offset);
    }
  default:
    throw ParseError("expected a finite permutation group, got " + print(e), e.offset);
  }
}

DecoratedGroup elaborate(GroupExpr const &e)
{
  if (is_finite(e.node))
    throw ParseError("a finite group is not a decorated group; wrap it in wr(...) or ker(...)",
                     e.offset);
  switch (e.node) {
  case Node::Atom: return hh_atom(e.kind);
  case Node::Wreath:
    if (e.children.size() == 1)
      return wreath_hh(elaborate_finite(e.children[0]));
    return wreath_outer(elaborate_finite(e.children[0]), elaborate_finite(e.children[1]));
  case Node::Hybrid:
    return hybrid(elaborate_finite(e.children[0]), elaborate_finite(e.children[1]));
  case Node::Replicate: return replicate_hh(e.kind, elaborate_finite(e.children[0]));
  case Node::Kernel: return kernel_atom(elaborate_finite(e.children[0]));
  case Node::Product: {
    DecoratedGroup acc = elaborate(e.children[0]);
    for (std::size_t i = 1; i < e.children.size(); ++i)
      acc = direct_product(acc, elaborate(e.children[i]));
    return acc;
  }
  default: break;
  }
  throw ParseError("unexpected expression", e.offset);
}

} // namespace oligo
