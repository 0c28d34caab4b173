#include "ppcalc/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {

struct Token {
  enum class Kind { ident, number, star, plus, minus, eq, semi, comma, colon, dot, exists, end };
  Kind kind;
  std::string text;
  Int value = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) return {Token::Kind::end, "", 0, col};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      // an integer immediately followed by a name is a scaled generator: 2e
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          name += s_[pos_++];
        Token t{Token::Kind::ident, name, v, col};
        t.text = name;
        t.value = v;
        scaled_ = true;
        return t;
      }
      (void)start;
      return {Token::Kind::number, "", v, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      if (name == "E") return {Token::Kind::exists, name, 0, col};
      Token t{Token::Kind::ident, name, 1, col};
      return t;
    }
    ++pos_;
    switch (c) {
      case '*': return {Token::Kind::star, "*", 0, col};
      case '+': return {Token::Kind::plus, "+", 0, col};
      case '-': return {Token::Kind::minus, "-", 0, col};
      case '=': return {Token::Kind::eq, "=", 0, col};
      case ';': return {Token::Kind::semi, ";", 0, col};
      case ',': return {Token::Kind::comma, ",", 0, col};
      case ':': return {Token::Kind::colon, ":", 0, col};
      case '.': return {Token::Kind::dot, ".", 0, col};
      default:
        fail(Errc::parse_error, "line 1, col " + std::to_string(col) + ": unexpected character '" +
                                    std::string(1, c) + "'");
    }
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  bool scaled_ = false;
};

[[noreturn]] void perr(int col, const std::string& msg) {
  fail(Errc::parse_error, "line 1, col " + std::to_string(col) + ": " + msg);
}

struct Term {
  // a term is either int_style (bare var, int*var, var*int) or a pair of
  // identifiers (one the variable, one a generator, resolved later)
  std::string first, second;
  Int first_scale = 1, second_scale = 1;
  bool has_second = false;
  Int int_coef = 1;
  int col = 0;
};

struct Atom {
  std::vector<std::pair<Term, int>> terms;  // term, sign
};

struct Parsed {
  std::vector<std::pair<std::string, std::string>> bound;  // name, sort name ("" = default)
  std::vector<Atom> atoms;
};

class Parser {
 public:
  Parser(const std::string& s) : lex_(s) { advance(); }

  Parsed run() {
    Parsed out;
    if (cur_.kind == Token::Kind::exists) {
      advance();
      while (true) {
        if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected bound variable name");
        std::string name = cur_.text;
        std::string sort;
        advance();
        if (cur_.kind == Token::Kind::colon) {
          advance();
          if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected sort name after ':'");
          sort = cur_.text;
          advance();
        }
        out.bound.emplace_back(name, sort);
        if (cur_.kind == Token::Kind::comma) {
          advance();
          continue;
        }
        break;
      }
      if (cur_.kind != Token::Kind::dot) perr(cur_.col, "expected '.' after bound variables");
      advance();
    }
    out.atoms.push_back(parse_atom());
    while (cur_.kind == Token::Kind::semi) {
      advance();
      out.atoms.push_back(parse_atom());
    }
    if (cur_.kind != Token::Kind::end) perr(cur_.col, "trailing input");
    return out;
  }

  std::map<std::string, std::string> var_sorts;  // annotations seen anywhere

 private:
  void advance() { cur_ = lex_.next(); }

  // expr := ['-'] piece (('+'|'-') piece)*
  Atom parse_atom() {
    Atom atom;
    parse_expr(atom, 1);
    if (cur_.kind != Token::Kind::eq) perr(cur_.col, "expected '=' in atom");
    advance();
    parse_expr(atom, -1);
    return atom;
  }

  void parse_expr(Atom& atom, int sign) {
    int s = sign;
    if (cur_.kind == Token::Kind::minus) {
      s = -s;
      advance();
    }
    parse_piece(atom, s);
    while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
      int s2 = cur_.kind == Token::Kind::plus ? sign : -sign;
      advance();
      parse_piece(atom, s2);
    }
  }

  // piece := number | term   (number alone must be 0)
  void parse_piece(Atom& atom, int sign) {
    if (cur_.kind == Token::Kind::number) {
      if (cur_.value != 0) perr(cur_.col, "bare nonzero constant");
      advance();
      return;
    }
    atom.terms.emplace_back(parse_term(), sign);
  }

  // term := coef '*' var | var '*' coef | var
  Term parse_term() {
    Term t;
    if (cur_.kind == Token::Kind::number) {
      Int sc = cur_.value;
      advance();
      if (cur_.kind != Token::Kind::star) perr(cur_.col, "expected '*' after coefficient");
      advance();
      if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected variable");
      t.first = cur_.text;
      t.first_scale = cur_.value;
      t.col = cur_.col;
      t.int_coef = sc;
      advance();
      maybe_sort(t.first);
      return t;
    }
    if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected term");
    t.first = cur_.text;
    t.first_scale = cur_.value;
    t.col = cur_.col;
    advance();
    if (cur_.kind == Token::Kind::colon) {
      advance();
      if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected sort name after ':'");
      var_sorts[t.first] = cur_.text;
      advance();
    }
    if (cur_.kind != Token::Kind::star) return t;  // bare identifier
    advance();
    if (cur_.kind == Token::Kind::number) {
      t.int_coef = cur_.value;
      advance();
      return t;
    }
    if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected coefficient or variable");
    t.second = cur_.text;
    t.second_scale = cur_.value;
    t.has_second = true;
    advance();
    if (cur_.kind == Token::Kind::colon) {
      advance();
      if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected sort name after ':'");
      var_sorts[t.second] = cur_.text;
      advance();
    }
    return t;
  }

  void maybe_sort(const std::string& var) {
    if (cur_.kind == Token::Kind::colon) {
      advance();
      if (cur_.kind != Token::Kind::ident) perr(cur_.col, "expected sort name after ':'");
      var_sorts[var] = cur_.text;
      advance();
    }
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

PpFormula parse_formula(const std::string& text, const DslContext& ctx) {
  const RingoidPtr& r = ctx.ringoid;
  Parser parser(text);
  Parsed parsed = parser.run();

  // classify identifiers: generator names belong to the ringoid
  auto is_gen = [&](const std::string& n) { return r->named_generator(n).has_value(); };

  // resolve term variable/generator ambiguity and determine the side
  std::optional<Side> side;
  struct RTerm {
    std::string var;
    Int scalar;
    std::string gen;  // "" = identity
    int sign;
    int col;
  };
  std::vector<std::vector<RTerm>> atoms;
  for (const Atom& atom : parsed.atoms) {
    std::vector<RTerm> terms;
    for (const auto& [t, sign] : atom.terms) {
      RTerm rt{t.first, t.int_coef, "", sign, t.col};
      if (!t.has_second) {
        if (t.first_scale != 1) perr(t.col, "a scaled morphism name cannot be a variable");
      } else {
        bool first_is_gen = is_gen(t.first);
        bool second_is_gen = is_gen(t.second);
        if (first_is_gen == second_is_gen)
          perr(t.col, "cannot tell variable from morphism in term");
        if (first_is_gen) {
          // coef * var: left-module style
          rt.var = t.second;
          rt.gen = t.first;
          rt.scalar = t.first_scale;
          if (t.second_scale != 1) perr(t.col, "a scaled morphism name cannot be a variable");
          if (side && *side != Side::left) perr(t.col, "mixed left/right term styles");
          side = Side::left;
        } else {
          rt.var = t.first;
          rt.gen = t.second;
          rt.scalar = t.second_scale;
          if (t.first_scale != 1) perr(t.col, "a scaled morphism name cannot be a variable");
          if (side && *side != Side::right) perr(t.col, "mixed left/right term styles");
          side = Side::right;
        }
      }
      terms.push_back(std::move(rt));
    }
    atoms.push_back(std::move(terms));
  }
  Side fside = side.value_or(ctx.default_side);

  // collect variables: bound from the binder, frees by first appearance
  std::vector<std::string> bound_names;
  std::vector<ObjId> bound_sorts;
  auto sort_of = [&](const std::string& var, const std::string& annot, int col) -> ObjId {
    std::string s = annot;
    if (s.empty()) {
      auto it = parser.var_sorts.find(var);
      if (it != parser.var_sorts.end()) s = it->second;
    }
    if (s.empty()) {
      if (r->num_objects() == 1) return 0;
      perr(col, "variable " + var + " needs a sort annotation");
    }
    auto obj = r->object_by_name(s);
    if (!obj) perr(col, "unknown sort " + s);
    return *obj;
  };
  for (const auto& [name, sort] : parsed.bound) {
    bound_names.push_back(name);
    bound_sorts.push_back(sort_of(name, sort, 1));
  }
  std::vector<std::string> free_names;
  std::vector<ObjId> free_sorts;
  for (const auto& terms : atoms)
    for (const RTerm& t : terms) {
      if (std::find(bound_names.begin(), bound_names.end(), t.var) != bound_names.end()) continue;
      if (std::find(free_names.begin(), free_names.end(), t.var) != free_names.end()) continue;
      free_names.push_back(t.var);
      free_sorts.push_back(sort_of(t.var, "", t.col));
    }
  if (free_names.empty()) fail(Errc::arity_error, "formula has no free variables");

  PpFormula f;
  f.side = fside;
  f.ringoid = r;
  f.free_sorts = free_sorts;
  f.bound_sorts = bound_sorts;
  const int n = static_cast<int>(free_names.size());
  const int m = static_cast<int>(bound_names.size());
  f.h.assign(static_cast<std::size_t>(n + m), {});

  auto var_index = [&](const std::string& name) -> int {
    for (int i = 0; i < n; ++i)
      if (free_names[static_cast<std::size_t>(i)] == name) return i;
    for (int i = 0; i < m; ++i)
      if (bound_names[static_cast<std::size_t>(i)] == name) return n + i;
    return -1;
  };

  for (const auto& terms : atoms) {
    // determine the equation sort from the terms
    std::optional<ObjId> eq_sort;
    std::vector<std::pair<int, Morph>> entries;  // var index, morphism
    for (const RTerm& t : terms) {
      int vi = var_index(t.var);
      if (vi < 0) perr(t.col, "unknown variable " + t.var);
      ObjId vs = f.var_sort(vi);
      Morph mor;
      if (t.gen.empty()) {
        mor = r->identity(vs);
        if (t.scalar != 1) mor = Morph{vs, vs, r->hom(vs, vs).scale(t.scalar, mor.coeffs)};
      } else {
        auto g = r->named_generator(t.gen);
        if (!g) perr(t.col, "unknown morphism " + t.gen);
        mor = *g;
        if (t.scalar != 1)
          mor = Morph{mor.dom, mor.cod, r->hom(mor.dom, mor.cod).scale(t.scalar, mor.coeffs)};
        // check the generator is applicable to this variable
        ObjId want = fside == Side::right ? mor.cod : mor.dom;
        if (want != vs)
          perr(t.col, "morphism " + t.gen + " does not apply to a variable of sort " +
                          r->object_name(vs));
      }
      ObjId es = fside == Side::right ? mor.dom : mor.cod;
      if (eq_sort && *eq_sort != es) perr(t.col, "mixed equation sorts in one atom");
      eq_sort = es;
      if (t.sign < 0) mor = r->neg(mor);
      entries.emplace_back(vi, std::move(mor));
    }
    if (!eq_sort) continue;  // 0 = 0
    // accumulate entries into a new column
    int col_index = f.num_cols();
    f.rel_sorts.push_back(*eq_sort);
    for (int i = 0; i < n + m; ++i) {
      ObjId vs = f.var_sort(i);
      f.h[static_cast<std::size_t>(i)].push_back(fside == Side::right
                                                     ? r->zero_morph(*eq_sort, vs)
                                                     : r->zero_morph(vs, *eq_sort));
    }
    for (auto& [vi, mor] : entries) {
      Morph& cell = f.h[static_cast<std::size_t>(vi)][static_cast<std::size_t>(col_index)];
      cell = r->add(cell, mor);
    }
  }
  // drop all-zero columns
  for (int j = f.num_cols() - 1; j >= 0; --j) {
    bool zero = true;
    for (int i = 0; i < n + m && zero; ++i)
      zero = r->is_zero(f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    if (zero) {
      f.rel_sorts.erase(f.rel_sorts.begin() + j);
      for (auto& row : f.h) row.erase(row.begin() + j);
    }
  }
  f.validate();
  return f;
}

std::string print_formula(const PpFormula& f) {
  const RingoidPtr& r = f.ringoid;
  const bool multi = r->num_objects() > 1;
  std::ostringstream os;
  auto var_name = [&](int i) {
    return i < f.num_free() ? "x" + std::to_string(i) : "y" + std::to_string(i - f.num_free());
  };
  if (f.num_bound() > 0) {
    os << "E ";
    for (int i = 0; i < f.num_bound(); ++i) {
      if (i) os << ", ";
      os << var_name(f.num_free() + i);
      if (multi) os << ":" << r->object_name(f.bound_sorts[static_cast<std::size_t>(i)]);
    }
    os << " . ";
  }
  bool first_atom = true;
  auto sep = [&]() {
    if (!first_atom) os << " ; ";
    first_atom = false;
  };
  // pin the free-variable order: the parser collects frees by first appearance
  for (int i = 0; i < f.num_free(); ++i) {
    std::string v = var_name(i);
    if (multi) v += ":" + r->object_name(f.free_sorts[static_cast<std::size_t>(i)]);
    sep();
    os << v << " = " << v;
  }
  for (int j = 0; j < f.num_cols(); ++j) {
    std::ostringstream atom;
    bool first_term = true;
    for (int i = 0; i < f.num_free() + f.num_bound(); ++i) {
      const Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const FinAbGroup& hg = r->hom(e.dom, e.cod);
      const auto& names = r->gen_names(e.dom, e.cod);
      for (int g = 0; g < hg.rank(); ++g) {
        Int c = e.coeffs[static_cast<std::size_t>(g)];
        if (c == 0) continue;
        if (!first_term) atom << " + ";
        first_term = false;
        std::string coef;
        const std::string& gname = names[static_cast<std::size_t>(g)];
        if (gname == "1") {
          coef = std::to_string(c);
        } else {
          coef = (c == 1 ? "" : std::to_string(c)) + gname;
        }
        std::string v = var_name(i);
        if (f.side == Side::right)
          atom << v << "*" << coef;
        else
          atom << coef << "*" << v;
      }
    }
    if (first_term) continue;  // zero column
    sep();
    os << atom.str() << " = 0";
  }
  return os.str();
}

}  // namespace ppcalc
