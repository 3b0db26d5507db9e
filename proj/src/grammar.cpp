/* Copyright 2026 The lammu Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "lammu/grammar.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace lammu {

ParseError::ParseError(const std::string& msg, SourceSpan span,
                       std::set<std::string> expected)
    : std::runtime_error(msg), span_(span), expected_(std::move(expected)) {}

LanguageViolation::LanguageViolation(const std::string& msg, SourceSpan span)
    : std::runtime_error(msg), span_(span) {}

namespace {

constexpr std::array<std::string_view, 24> kGreek = {
    "alpha", "beta",    "gamma", "delta", "epsilon", "zeta",
    "eta",   "theta",   "iota",  "kappa", "lambda",  "nu",
    "xi",    "omicron", "pi",    "rho",   "sigma",   "tau",
    "upsilon", "phi",   "chi",   "psi",   "omega",   "mu"};

constexpr std::size_t kMaxNesting = 2000;

enum class Tok {
  Lambda, Mu, Dot, LBrack, RBrack, LParen, RParen,
  Ident,   // lowercase or Greek identifier
  TIdent,  // capitalized identifier
  QName,   // 'b
  Inter, Union, Arrow, Top, Bot, Turnstile, Bar, Colon, Comma, End
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Lambda: return "'\\'";
    case Tok::Mu: return "'mu'";
    case Tok::Dot: return "'.'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Ident: return "identifier";
    case Tok::TIdent: return "type variable";
    case Tok::QName: return "free name";
    case Tok::Inter: return "'/\\'";
    case Tok::Union: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Bar: return "'|'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
  bool greek = false;
};

bool is_greek_letter(std::string_view s, std::size_t i) {
  // U+03B1..U+03C9 except lambda (U+03BB) and mu (U+03BC).
  if (i + 1 >= s.size()) return false;
  auto a = static_cast<unsigned char>(s[i]);
  auto b = static_cast<unsigned char>(s[i + 1]);
  if (a == 0xCE) return b >= 0xB1 && b <= 0xBF && b != 0xBB && b != 0xBC;
  if (a == 0xCF) return b >= 0x80 && b <= 0x89;
  return false;
}

bool starts_with(std::string_view s, std::size_t i, std::string_view p) {
  return s.substr(i, p.size()) == p;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), {i, i + len}});
    i += len;
  };
  struct Sym {
    std::string_view text;
    Tok kind;
  };
  static const Sym syms[] = {
      {"\\/", Tok::Union},     {"/\\", Tok::Inter},      {"->", Tok::Arrow},
      {"|-", Tok::Turnstile},  {"\\", Tok::Lambda},      {".", Tok::Dot},
      {"[", Tok::LBrack},      {"]", Tok::RBrack},       {"(", Tok::LParen},
      {")", Tok::RParen},      {"|", Tok::Bar},          {":", Tok::Colon},
      {",", Tok::Comma},       {"\xCE\xBB", Tok::Lambda}, {"\xCE\xBC", Tok::Mu},
      {"\xE2\x86\x92", Tok::Arrow}, {"\xE2\x88\xA9", Tok::Inter},
      {"\xE2\x88\xAA", Tok::Union}, {"\xE2\x8A\xA4", Tok::Top},
      {"\xE2\x8A\xA5", Tok::Bot},   {"\xE2\x8A\xA2", Tok::Turnstile},
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& sym : syms) {
      if (starts_with(s, i, sym.text)) {
        push(sym.kind, sym.text.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    std::size_t j = i;
    bool greek = false;
    if (c == '\'') {
      ++j;
      if (j < s.size() && std::islower(static_cast<unsigned char>(s[j]))) {
        while (j < s.size() && ident_char(s[j])) ++j;
      } else if (is_greek_letter(s, j)) {
        while (is_greek_letter(s, j)) j += 2;
      } else {
        throw ParseError("expected a name after '''", {i, j}, {"name"});
      }
      while (j < s.size() && s[j] == '\'') ++j;
      push(Tok::QName, j - i);
      out.back().text = out.back().text.substr(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (j < s.size() && ident_char(s[j])) ++j;
    } else if (is_greek_letter(s, i)) {
      greek = true;
      while (is_greek_letter(s, j)) j += 2;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
    } else {
      throw ParseError("unexpected character", {i, i + 1});
    }
    while (j < s.size() && s[j] == '\'') ++j;
    std::string_view word = s.substr(i, j - i);
    Tok k = Tok::Ident;
    if (word == "mu") k = Tok::Mu;
    else if (word == "top") k = Tok::Top;
    else if (word == "bot") k = Tok::Bot;
    else if (std::isupper(static_cast<unsigned char>(c))) k = Tok::TIdent;
    push(k, j - i);
    out.back().greek = greek;
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_end() const { return at(Tok::End); }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "unexpected " + std::string(describe(t.kind));
    if (!t.text.empty()) msg += " '" + t.text + "'";
    if (!expected.empty()) {
      msg += ", expected ";
      bool first = true;
      for (const auto& e : expected) {
        if (!first) msg += " or ";
        msg += e;
        first = false;
      }
    }
    throw ParseError(msg, t.span, std::move(expected));
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail({describe(k)});
    return toks_[pos_++];
  }

  void expect_end() {
    if (!at_end()) fail({describe(Tok::End)});
  }

  // --- terms ---------------------------------------------------------------

  Term term() {
    Guard g(this);
    if (at(Tok::Lambda)) return abs();
    if (at(Tok::Mu)) return mu();
    return appseq();
  }

  Term abs() {
    expect(Tok::Lambda);
    Var x = var();
    expect(Tok::Dot);
    return Term::abs(std::move(x), term());
  }

  Term mu() {
    expect(Tok::Mu);
    Name a = binder_name();
    expect(Tok::Dot);
    expect(Tok::LBrack);
    Name b = name_ref();
    expect(Tok::RBrack);
    return Term::mu(std::move(a), std::move(b), term());
  }

  Term appseq() {
    Term t = atom();
    for (;;) {
      if (at(Tok::Ident) || at(Tok::LParen)) {
        t = Term::app(std::move(t), atom());
      } else if (at(Tok::Lambda) || at(Tok::Mu)) {
        // A trailing abstraction extends to the right: x \y.y  =  x (\y.y).
        return Term::app(std::move(t), term());
      } else {
        return t;
      }
    }
  }

  Term atom() {
    if (at(Tok::Ident)) return Term::var(var());
    if (at(Tok::LParen)) {
      ++pos_;
      Term t = term();
      expect(Tok::RParen);
      return t;
    }
    fail({"term variable", describe(Tok::LParen), describe(Tok::Lambda),
          describe(Tok::Mu)});
  }

  Var var() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.greek ||
        is_reserved_name_word(strip_primes(t.text)))
      fail({"term variable"});
    ++pos_;
    return Var{t.text};
  }

  Name binder_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail({"name"});
    ++pos_;
    return Name{t.text};
  }

  Name name_ref() {
    const Token& t = peek();
    if (t.kind != Tok::Ident && t.kind != Tok::QName) fail({"name"});
    ++pos_;
    return Name{t.text};
  }

  // --- types ---------------------------------------------------------------

  Type type() {
    Guard g(this);
    Type l = settype();
    if (at(Tok::Arrow)) {
      ++pos_;
      return Type::arrow(std::move(l), type());
    }
    return l;
  }

  Type settype() {
    std::vector<Type> parts{atomtype()};
    Tok op = Tok::End;
    while (at(Tok::Inter) || at(Tok::Union)) {
      if (op != Tok::End && peek().kind != op)
        throw ParseError(
            "mixing '/\\' and '\\/' needs parentheses", peek().span,
            {describe(op)});
      op = peek().kind;
      ++pos_;
      parts.push_back(atomtype());
    }
    if (op == Tok::End) return parts.front();
    return op == Tok::Inter ? Type::inter(std::move(parts))
                            : Type::union_of(std::move(parts));
  }

  Type atomtype() {
    if (at(Tok::TIdent)) return Type::var(toks_[pos_++].text);
    if (at(Tok::Top)) {
      ++pos_;
      return Type::top();
    }
    if (at(Tok::Bot)) {
      ++pos_;
      return Type::bottom();
    }
    if (at(Tok::LParen)) {
      ++pos_;
      Type t = type();
      expect(Tok::RParen);
      return t;
    }
    fail({"type variable", describe(Tok::Top), describe(Tok::Bot),
          describe(Tok::LParen)});
  }

  // Parses a type and checks it against lang, reporting the span.
  Type checked_type(Language lang) {
    std::size_t start = peek().span.start;
    Type t = type();
    std::size_t end = toks_[pos_ - 1].span.end;
    if (!well_formed(t, lang))
      throw LanguageViolation("type '" + t.text() + "' is not a " +
                                  language_name(lang) + " type",
                              {start, end});
    return t;
  }

  // --- judgments -----------------------------------------------------------

  Judgment judgment(Language lang) {
    LeftEnv gamma;
    if (!at(Tok::Turnstile)) {
      do {
        const Token& xt = peek();
        Var x = var();
        expect(Tok::Colon);
        Type t = checked_type(lang);
        if (!gamma.emplace(x, canonicalize(t)).second)
          throw ParseError("duplicate binding for '" + x.text + "'", xt.span);
      } while (accept(Tok::Comma));
    }
    expect(Tok::Turnstile);
    Term m = term();
    expect(Tok::Colon);
    Type a = checked_type(lang);
    RightEnv delta;
    if (accept(Tok::Bar) && !at_end()) {
      do {
        const Token& at_tok = peek();
        Name n = name_ref();
        expect(Tok::Colon);
        std::size_t start = peek().span.start;
        Type t = checked_type(lang);
        if (lang != Language::Curry && t.is_inter() &&
            canonicalize(t).is_inter())
          throw LanguageViolation(
              "right environment types must be strict",
              {start, toks_[pos_ - 1].span.end});
        if (!delta.emplace(n, canonicalize(t)).second)
          throw ParseError("duplicate binding for '" + n.text + "'",
                           at_tok.span);
      } while (accept(Tok::Comma));
    }
    expect_end();
    return Judgment{std::move(gamma), std::move(m), canonicalize(a),
                    std::move(delta)};
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

 private:
  static std::string_view strip_primes(std::string_view s) {
    while (!s.empty() && s.back() == '\'') s.remove_suffix(1);
    return s;
  }

  struct Guard {
    explicit Guard(Parser* p) : p(p) {
      if (++p->depth_ > kMaxNesting)
        throw ParseError("nesting too deep", p->peek().span);
    }
    ~Guard() { --p->depth_; }
    Parser* p;
  };

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

void print_term_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += t.var().text; return;
    case Term::Kind::Abs:
      out += "\\" + t.var().text + ".";
      print_term_to(t.body(), out);
      return;
    case Term::Kind::Mu:
      out += "mu " + t.bound().text + ".[" + t.named().text + "] ";
      print_term_to(t.body(), out);
      return;
    case Term::Kind::App: {
      const Term& f = t.fun();
      const Term& a = t.arg();
      bool pf = f.is_abs() || f.is_mu();
      bool pa = !a.is_var();
      if (pf) out += "(";
      print_term_to(f, out);
      if (pf) out += ")";
      out += " ";
      if (pa) out += "(";
      print_term_to(a, out);
      if (pa) out += ")";
      return;
    }
  }
}

}  // namespace

bool is_reserved_name_word(std::string_view word) {
  for (auto g : kGreek)
    if (g == word) return true;
  return false;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.expect_end();
  return t;
}

Type parse_type(std::string_view text, Language lang) {
  Parser p(text);
  Type t = p.checked_type(lang);
  p.expect_end();
  return t;
}

Judgment parse_judgment(std::string_view text, Language lang) {
  Parser p(text);
  return p.judgment(lang);
}

Position parse_position(std::string_view text) {
  if (text == "/") return {};
  Position p;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '/')
      throw ParseError("expected '/' in position", {i, i + 1}, {"'/'"});
    std::size_t j = ++i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i || j - i > 6)
      throw ParseError("expected a child index", {i, j}, {"digit"});
    p.push_back(std::stoul(std::string(text.substr(i, j - i))));
    i = j;
  }
  if (p.empty()) throw ParseError("empty position", {0, 0}, {"'/'"});
  return p;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_type(const Type& t) { return t.text(); }

std::string print_left_env(const LeftEnv& g) {
  std::string out;
  for (const auto& [x, t] : g) {
    if (!out.empty()) out += ", ";
    out += x.text + ":" + t.text();
  }
  return out;
}

std::string print_right_env(const RightEnv& d) {
  std::string out;
  for (const auto& [a, t] : d) {
    if (!out.empty()) out += ", ";
    out += a.text + ":" + t.text();
  }
  return out;
}

std::string print_judgment(const Judgment& j) {
  std::string out = print_left_env(j.gamma);
  if (!out.empty()) out += " ";
  out += "|- " + print_term(j.term) + " : " + j.type.text() + " |";
  std::string d = print_right_env(j.delta);
  if (!d.empty()) out += " " + d;
  return out;
}

std::string render_diagnostic(std::string_view text, SourceSpan span,
                              const std::string& message) {
  // Show the line containing the span start.
  std::size_t ls = span.start;
  while (ls > 0 && text[ls - 1] != '\n') --ls;
  std::size_t le = text.find('\n', span.start);
  if (le == std::string_view::npos) le = text.size();
  std::string line(text.substr(ls, le - ls));
  std::size_t width = span.end > span.start ? span.end - span.start : 1;
  if (span.start + width > le) width = le > span.start ? le - span.start : 1;
  std::string out = "error at " + std::to_string(span.start) + ": " +
                    message + "\n  " + line + "\n  " +
                    std::string(span.start - ls, ' ') +
                    std::string(width, '^');
  return out;
}

}  // namespace lammu
