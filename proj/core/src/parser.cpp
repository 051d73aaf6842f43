#include "teamlogic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace teamlogic {

namespace {

enum class Tok { Ident, Bot, Top, Not, And, Tensor, Or, Imp, Dep, LParen, RParen, Comma, End };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "variable";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'/\\'";
    case Tok::Tensor: return "'\\/'";
    case Tok::Or: return "'||'";
    case Tok::Imp: return "'->'";
    case Tok::Dep: return "'=('";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
};

struct Alias {
  std::string_view spelling;
  Tok type;
};

// Longest spellings first where prefixes overlap.
constexpr Alias kSymbols[] = {
    {"/\\", Tok::And},          {"\\/", Tok::Tensor},      {"||", Tok::Or},
    {"->", Tok::Imp},           {"~", Tok::Not},           {"(", Tok::LParen},
    {")", Tok::RParen},         {",", Tok::Comma},         {"\xC2\xAC", Tok::Not},
    {"\xE2\x88\xA7", Tok::And}, {"\xE2\x8A\x97", Tok::Tensor}, {"\xE2\x88\xA8", Tok::Or},
    {"\xE2\x86\x92", Tok::Imp}, {"\xE2\x8A\xA5", Tok::Bot}, {"\xE2\x8A\xA4", Tok::Top},
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok type = word == "bot" ? Tok::Bot : word == "top" ? Tok::Top : Tok::Ident;
      out.push_back({type, i, std::move(word)});
      i = j;
      continue;
    }
    if (c == '=') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j >= text.size() || text[j] != '(') {
        throw SyntaxError(j, {"'(' after '='"},
                          j >= text.size() ? "end of input" : "'" + std::string(1, text[j]) + "'");
      }
      out.push_back({Tok::Dep, i, "=("});
      i = j + 1;
      continue;
    }
    bool matched = false;
    for (const Alias& a : kSymbols) {
      if (text.substr(i).starts_with(a.spelling)) {
        out.push_back({a.type, i, std::string(a.spelling)});
        i += a.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SyntaxError(i, {"variable", "connective", "'('"}, "'" + std::string(1, text[i]) + "'");
    }
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = implication();
    expect(Tok::End, {Tok::End, Tok::And, Tok::Tensor, Tok::Or, Tok::Imp});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(describe(t));
    const Token& tok = peek();
    std::string found = tok.type == Tok::End ? "end of input" : "'" + tok.text + "'";
    throw SyntaxError(tok.pos, std::move(names), found);
  }

  void expect(Tok t, std::initializer_list<Tok> expected) {
    if (!accept(t)) fail(expected);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Imp)) return Formula::imp(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = tensor();
    while (accept(Tok::Or)) acc = Formula::disj(std::move(acc), tensor());
    return acc;
  }

  Formula tensor() {
    Formula acc = conjunction();
    while (accept(Tok::Tensor)) acc = Formula::tensor(std::move(acc), conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = Formula::conj(std::move(acc), unary());
    return acc;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::neg(unary());
    return atom();
  }

  Formula atom() {
    const Token tok = peek();
    switch (tok.type) {
      case Tok::Ident:
        ++pos_;
        return Formula::var(tok.text);
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::LParen: {
        ++pos_;
        Formula inner = implication();
        expect(Tok::RParen, {Tok::RParen, Tok::And, Tok::Tensor, Tok::Or, Tok::Imp});
        return inner;
      }
      case Tok::Dep: {
        ++pos_;
        std::vector<Formula> args;
        args.push_back(implication());
        while (accept(Tok::Comma)) args.push_back(implication());
        expect(Tok::RParen, {Tok::Comma, Tok::RParen});
        Formula consequent = std::move(args.back());
        args.pop_back();
        return Formula::dep(std::move(args), std::move(consequent));
      }
      default:
        fail({Tok::Ident, Tok::Bot, Tok::Top, Tok::Not, Tok::LParen, Tok::Dep});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, std::optional<Fragment> fragment) {
  Formula f = Parser(tokenize(text)).parse_all();
  if (fragment) {
    std::vector<Violation> violations = fragment_check(f, *fragment);
    std::erase_if(violations,
                  [](const Violation& v) { return v.kind == ViolationKind::RequiresSemanticCheck; });
    if (!violations.empty()) throw FragmentViolation(*fragment, std::move(violations));
  }
  return f;
}

}  // namespace teamlogic
