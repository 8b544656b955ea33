#ifndef IMPLAT_FORMULA_HPP
#define IMPLAT_FORMULA_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "implat/core.hpp"

namespace implat {

enum class Conn { atom, bot, top, conj, disj, impl };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Conn kind;
  std::string atom;  // Conn::atom only
  FormulaPtr lhs, rhs;
};

inline FormulaPtr f_atom(std::string name) {
  return std::make_shared<Formula>(Formula{Conn::atom, std::move(name), nullptr, nullptr});
}
inline FormulaPtr f_bot() { return std::make_shared<Formula>(Formula{Conn::bot, {}, nullptr, nullptr}); }
inline FormulaPtr f_top() { return std::make_shared<Formula>(Formula{Conn::top, {}, nullptr, nullptr}); }
inline FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::conj, {}, std::move(l), std::move(r)});
}
inline FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::disj, {}, std::move(l), std::move(r)});
}
inline FormulaPtr f_imp(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::impl, {}, std::move(l), std::move(r)});
}

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Conn::atom: return a->atom == b->atom;
    case Conn::bot:
    case Conn::top: return true;
    default: return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

namespace detail {

enum class Tok { atom, zero, one, amp, bar, arrow, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int pos;
};

inline std::vector<Token> lex_formula(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  while (i < src.size()) {
    const int pos = static_cast<int>(i);
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') { out.push_back({Tok::lparen, "(", pos}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::rparen, ")", pos}); ++i; continue; }
    if (c == '&') { out.push_back({Tok::amp, "&", pos}); ++i; continue; }
    if (c == '|') { out.push_back({Tok::bar, "|", pos}); ++i; continue; }
    if (starts("->")) { out.push_back({Tok::arrow, "->", pos}); i += 2; continue; }
    if (c == '0') { out.push_back({Tok::zero, "0", pos}); ++i; continue; }
    if (c == '1') { out.push_back({Tok::one, "1", pos}); ++i; continue; }
    // unicode aliases
    if (starts("∧")) { out.push_back({Tok::amp, "&", pos}); i += 3; continue; }
    if (starts("∨")) { out.push_back({Tok::bar, "|", pos}); i += 3; continue; }
    if (starts("→")) { out.push_back({Tok::arrow, "->", pos}); i += 3; continue; }
    if (starts("⊥")) { out.push_back({Tok::zero, "0", pos}); i += 3; continue; }
    if (starts("⊤")) { out.push_back({Tok::one, "1", pos}); i += 3; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::atom, std::string(src.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    fail(Errc::syntax_error, "unexpected character '" + std::string(1, c) + "'", pos);
  }
  out.push_back({Tok::end, "", static_cast<int>(src.size())});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : toks_(lex_formula(src)) {}

  FormulaPtr parse() {
    FormulaPtr f = imp();
    expect(Tok::end, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  void expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      fail(Errc::syntax_error, "expected " + what, peek().pos);
    take();
  }

  FormulaPtr imp() {  // right associative, lowest precedence
    FormulaPtr l = disj();
    if (peek().kind == Tok::arrow) {
      take();
      return f_imp(std::move(l), imp());
    }
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (peek().kind == Tok::bar) {
      take();
      l = f_or(std::move(l), conj());
    }
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = primary();
    while (peek().kind == Tok::amp) {
      take();
      l = f_and(std::move(l), primary());
    }
    return l;
  }

  FormulaPtr primary() {
    switch (peek().kind) {
      case Tok::atom: return f_atom(take().text);
      case Tok::zero: take(); return f_bot();
      case Tok::one: take(); return f_top();
      case Tok::lparen: {
        take();
        FormulaPtr f = imp();
        expect(Tok::rparen, "')'");
        return f;
      }
      default:
        fail(Errc::syntax_error, "expected a formula", peek().pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Grammar: implication is right associative and binds loosest, then |, then
/// &; parentheses; atoms are identifiers; "0"/"1" are the constants. The
/// unicode connective and constant symbols are accepted as aliases.
inline FormulaPtr parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

namespace detail {

inline int precedence(Conn k) {
  switch (k) {
    case Conn::impl: return 1;
    case Conn::disj: return 2;
    case Conn::conj: return 3;
    default: return 4;
  }
}

inline void print_into(const FormulaPtr& f, int min_prec, std::string& out) {
  const int p = precedence(f->kind);
  const bool paren = p < min_prec;
  if (paren) out += '(';
  switch (f->kind) {
    case Conn::atom: out += f->atom; break;
    case Conn::bot: out += '0'; break;
    case Conn::top: out += '1'; break;
    case Conn::conj:
      print_into(f->lhs, 3, out);
      out += " & ";
      print_into(f->rhs, 4, out);
      break;
    case Conn::disj:
      print_into(f->lhs, 2, out);
      out += " | ";
      print_into(f->rhs, 3, out);
      break;
    case Conn::impl:
      print_into(f->lhs, 2, out);
      out += " -> ";
      print_into(f->rhs, 1, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace detail

/// Minimal-parentheses printer; parse(print(f)) reproduces f.
inline std::string print_formula(const FormulaPtr& f) {
  std::string out;
  detail::print_into(f, 1, out);
  return out;
}

}  // namespace implat

#endif  // IMPLAT_FORMULA_HPP
