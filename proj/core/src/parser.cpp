#include "lfikit/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace lfikit {

namespace {

enum class Tok { Ident, CircKw, Tilde, Amp, Pipe, Arrow, DArrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      std::size_t start = i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      char c = src_[i_];
      if (c == '(') { out.push_back({Tok::LParen, "(", start}); ++i_; continue; }
      if (c == ')') { out.push_back({Tok::RParen, ")", start}); ++i_; continue; }
      if (c == '~') { out.push_back({Tok::Tilde, "~", start}); ++i_; continue; }
      if (c == '&') { out.push_back({Tok::Amp, "&", start}); ++i_; continue; }
      if (c == '|') { out.push_back({Tok::Pipe, "|", start}); ++i_; continue; }
      if (c == '-') {
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i_ += 2;
          continue;
        }
        throw ParseError("stray '-'", start);
      }
      if (c == '<') {
        if (src_.substr(i_, 3) == "<->") {
          out.push_back({Tok::DArrow, "<->", start});
          i_ += 3;
          continue;
        }
        throw ParseError("stray '<'", start);
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i_;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
          ++j;
        std::string word(src_.substr(i_, j - i_));
        i_ = j;
        if (word == "o")
          out.push_back({Tok::CircKw, word, start});
        else
          out.push_back({Tok::Ident, word, start});
        continue;
      }
      throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }

 private:
  void skip_ws() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }
  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) { ++i_; return true; }
    return false;
  }
  void expect(Tok k, const char* msg) {
    if (!accept(k)) throw ParseError(msg, peek().pos);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::DArrow)) f = iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Arrow)) return Formula::imp(std::move(f), parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Pipe)) f = Formula::disj(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = Formula::conj(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        take();
        return Formula::neg(parse_unary());
      case Tok::CircKw:
        take();
        return Formula::circ(parse_unary());
      case Tok::Ident:
        return Formula::atom(take().text);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a formula, got '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::vector<Formula> parse_list(std::string_view text) {
  std::vector<Formula> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    std::size_t a = piece.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return;
    out.push_back(parse(piece));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ';') {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace lfikit
