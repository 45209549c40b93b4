#include <cctype>
#include <string>
#include <vector>

#include "malcev/bracket_expr.hpp"
#include "malcev/errors.hpp"

namespace malcev {
namespace {

struct Token {
  enum class Kind {
    Number,
    Generator,
    Plus,
    Minus,
    Star,
    Slash,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    End
  };
  Kind kind;
  std::size_t pos;
  std::string digits;  // Number: digit string
  GenIndex gen = 0;    // Generator
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Token::Kind k) {
      out.push_back({k, start, {}, 0});
      ++i;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        digits.push_back(text[i++]);
      out.push_back({Token::Kind::Number, start, std::move(digits), 0});
      continue;
    }
    if (c == 'x') {
      ++i;
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        digits.push_back(text[i++]);
      if (digits.empty()) throw SyntaxError(start + 1, "generator index digits after 'x'");
      if (digits.find_first_not_of('0') == std::string::npos)
        throw OutOfRangeError("generator index 0 at position " + std::to_string(start));
      if (digits.size() > 9)
        throw OutOfRangeError("generator index too large at position " + std::to_string(start));
      out.push_back({Token::Kind::Generator, start, {}, static_cast<GenIndex>(std::stoul(digits))});
      continue;
    }
    if (c >= 'a' && c <= 'h') {
      out.push_back({Token::Kind::Generator, start, {}, static_cast<GenIndex>(c - 'a' + 1)});
      ++i;
      continue;
    }
    switch (c) {
      case '+': push(Token::Kind::Plus); break;
      case '-': push(Token::Kind::Minus); break;
      case '*': push(Token::Kind::Star); break;
      case '/': push(Token::Kind::Slash); break;
      case '[': push(Token::Kind::LBracket); break;
      case ']': push(Token::Kind::RBracket); break;
      case '{': push(Token::Kind::LBrace); break;
      case '}': push(Token::Kind::RBrace); break;
      case '(': push(Token::Kind::LParen); break;
      case ')': push(Token::Kind::RParen); break;
      case ',': push(Token::Kind::Comma); break;
      default:
        throw SyntaxError(start, "a valid token (generator, rational, operator or bracket)");
    }
  }
  out.push_back({Token::Kind::End, text.size(), {}, 0});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  BracketExpr parse_all() {
    BracketExpr e = expr();
    if (peek().kind != Token::Kind::End)
      throw SyntaxError(peek().pos, "'+', '-', '*' or end of input");
    return e;
  }

private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token take() { return tokens_[cursor_++]; }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError(peek().pos, what);
    ++cursor_;
  }

  BracketExpr expr() {
    std::vector<BracketExpr> terms;
    terms.push_back(term());
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      bool minus = take().kind == Token::Kind::Minus;
      BracketExpr t = term();
      terms.push_back(minus ? negate(std::move(t)) : std::move(t));
    }
    if (terms.size() == 1) return std::move(terms.front());
    return BracketExpr::sum(std::move(terms));
  }

  BracketExpr term() {
    std::size_t start = peek().pos;
    std::vector<BracketExpr> raw;
    raw.push_back(factor());
    while (peek().kind == Token::Kind::Star) {
      take();
      raw.push_back(factor());
    }
    // Normalize: scalars become one multiplicative prefix.
    Rational coeff(1);
    std::vector<BracketExpr> factors;
    for (auto& f : raw) {
      BracketExpr e = std::move(f);
      while (e.kind() == BracketExpr::Kind::Scaled) {
        coeff *= e.coefficient();
        e = e.child();
      }
      if (e.kind() == BracketExpr::Kind::Scalar) {
        coeff *= e.coefficient();
      } else {
        factors.push_back(std::move(e));
      }
    }
    if (factors.empty())
      throw SyntaxError(start, "a generator factor (constant terms are not algebra elements)");
    BracketExpr body = factors.size() == 1 ? std::move(factors.front())
                                           : BracketExpr::prod(std::move(factors));
    if (coeff == 1) return body;
    return BracketExpr::scaled(std::move(coeff), std::move(body));
  }

  BracketExpr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Minus: {
        take();
        return negate(factor());
      }
      case Token::Kind::Number: {
        Token num = take();
        Rational q(num.digits, 10);
        if (peek().kind == Token::Kind::Slash) {
          take();
          if (peek().kind != Token::Kind::Number)
            throw SyntaxError(peek().pos, "denominator digits");
          Token den = take();
          if (den.digits.find_first_not_of('0') == std::string::npos)
            throw SyntaxError(den.pos, "a nonzero denominator");
          q /= Rational(den.digits, 10);
        }
        q.canonicalize();
        return BracketExpr::scalar(std::move(q));
      }
      case Token::Kind::Generator: {
        Token g = take();
        return BracketExpr::var(g.gen);
      }
      case Token::Kind::LBracket: {
        take();
        BracketExpr lhs = expr();
        expect(Token::Kind::Comma, "',' inside commutator");
        BracketExpr rhs = expr();
        expect(Token::Kind::RBracket, "']'");
        return BracketExpr::comm(std::move(lhs), std::move(rhs));
      }
      case Token::Kind::LBrace: {
        take();
        BracketExpr lhs = expr();
        expect(Token::Kind::Comma, "',' inside anti-commutator");
        BracketExpr rhs = expr();
        expect(Token::Kind::RBrace, "'}'");
        return BracketExpr::acomm(std::move(lhs), std::move(rhs));
      }
      case Token::Kind::LParen: {
        take();
        BracketExpr e = expr();
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError(t.pos, "a factor (rational, generator, '[', '{', '(' or '-')");
    }
  }

  static BracketExpr negate(BracketExpr e) {
    switch (e.kind()) {
      case BracketExpr::Kind::Scalar:
        return BracketExpr::scalar(-e.coefficient());
      case BracketExpr::Kind::Scaled:
        return BracketExpr::scaled(-e.coefficient(), e.child());
      default:
        return BracketExpr::scaled(rat(-1), std::move(e));
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

}  // namespace

BracketExpr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace malcev
