#ifndef N2P_PARSE_HPP
#define N2P_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "n2p/errors.hpp"
#include "n2p/ideal.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {
namespace detail {

// Tiny hand-rolled lexer with line/column tracking; '#' comments run to
// end of line, whitespace is insignificant.
class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  // punctuation: consume `c` or fail
  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(line_, col_, "expected " + what);
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { advance(); return true; }
    return false;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier(const std::string& what) {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_]))
      throw ParseError(line_, col_, "expected " + what);
    std::string id;
    while (pos_ < s_.size() && ident_char(s_[pos_])) {
      id += s_[pos_];
      advance();
    }
    return id;
  }

  // keyword of the form `name:`
  void keyword(const std::string& kw) {
    skip_ws();
    int ln = line_, col = col_;
    if (pos_ >= s_.size() || !ident_start(s_[pos_]))
      throw ParseError(ln, col, "expected '" + kw + ":'");
    std::string id = identifier(kw);
    if (id != kw || !accept(':'))
      throw ParseError(ln, col, "expected '" + kw + ":'");
  }

  int integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(line_, col_, "expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(line_, col_, "exponent too large");
      advance();
    }
    return static_cast<int>(v);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace detail

// Grammar:  vars: <name>+  gens: <monomial> (, <monomial>)*
// where monomial = factor (* factor)* and factor = name | name^k.
inline MonomialIdeal parse_ideal(const std::string& text) {
  detail::Lexer lx(text);
  lx.keyword("vars");
  std::vector<std::string> names;
  bool saw_gens_kw = false;
  while (!lx.eof() && detail::Lexer::ident_start(lx.peek())) {
    std::string id = lx.identifier("variable name");
    if (id == "gens" && lx.accept(':')) { saw_gens_kw = true; break; }
    names.push_back(id);
  }
  if (!saw_gens_kw) lx.keyword("gens");
  if (names.empty())
    throw ParseError(lx.line(), lx.col(), "empty variable list");
  VariableSet vars(names);
  std::vector<Monomial> gens;
  if (!lx.eof()) {
    while (true) {
      Monomial m = Monomial::one(vars.size());
      while (true) {
        std::string name = lx.identifier("variable");
        int vi = vars.index_of(name);
        if (vi < 0) throw UnknownVariable(name);
        int k = 1;
        if (lx.accept('^')) k = lx.integer();
        m.e[static_cast<std::size_t>(vi)] += k;
        if (!lx.accept('*')) break;
      }
      if (m.is_one()) throw GeneratorIsUnit();
      gens.push_back(std::move(m));
      if (!lx.accept(',')) break;
    }
  }
  if (!lx.eof())
    throw ParseError(lx.line(), lx.col(), "trailing input after generators");
  return minimalize(std::move(gens), vars);
}

// Grammar:  vertices: <name>+  edges: a-b (, c-d)*   (edges may be empty)
inline Graph parse_graph(const std::string& text) {
  detail::Lexer lx(text);
  lx.keyword("vertices");
  std::vector<std::string> names;
  bool saw_edges_kw = false;
  while (!lx.eof() && detail::Lexer::ident_start(lx.peek())) {
    std::size_t mark = names.size();
    std::string id = lx.identifier("vertex name");
    if (id == "edges" && lx.accept(':')) {
      names.resize(mark);
      saw_edges_kw = true;
      break;
    }
    names.push_back(id);
  }
  if (!saw_edges_kw) lx.keyword("edges");
  if (names.empty())
    throw ParseError(lx.line(), lx.col(), "empty vertex list");
  VariableSet verts(names);
  std::vector<std::pair<int, int>> edges;
  if (!lx.eof()) {
    while (true) {
      std::string a = lx.identifier("vertex");
      lx.expect('-', "'-' between edge endpoints");
      std::string b = lx.identifier("vertex");
      int ia = verts.index_of(a), ib = verts.index_of(b);
      if (ia < 0) throw UnknownVariable(a);
      if (ib < 0) throw UnknownVariable(b);
      edges.emplace_back(ia, ib);  // Graph rejects loops and duplicates
      if (!lx.accept(',')) break;
    }
  }
  if (!lx.eof())
    throw ParseError(lx.line(), lx.col(), "trailing input after edges");
  return Graph(verts, std::move(edges));
}

// Canonical text form; parse_ideal(print_ideal(I)) == I and printing a
// parse of canonical text reproduces it byte for byte.
inline std::string print_ideal(const MonomialIdeal& I) {
  std::string s = "vars:";
  for (const auto& n : I.vars().names()) s += " " + n;
  s += "\ngens:";
  for (std::size_t i = 0; i < I.gens().size(); ++i)
    s += (i ? ", " : " ") + I.gens()[i].str(I.vars());
  s += "\n";
  return s;
}

inline std::string print_graph(const Graph& g) {
  std::string s = "vertices:";
  for (const auto& n : g.vertices().names()) s += " " + n;
  s += "\nedges:";
  auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    s += (i ? ", " : " ") + g.vertices().name(es[i].first) + "-" +
         g.vertices().name(es[i].second);
  s += "\n";
  return s;
}

}  // namespace n2p

#endif  // N2P_PARSE_HPP
