#include "compseq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace compseq {

namespace {

constexpr int kMaxDegree = 1000;
constexpr std::size_t kMaxCoeffBits = std::size_t{1} << 22;
constexpr int kMaxNesting = 200;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok type;
  std::size_t pos;
  std::string_view text;
};

std::size_t size_bits(const Polynomial& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coeffs()) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return bits;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Polynomial parse() {
    Polynomial p = expr();
    if (tok_.type == Tok::RParen) fail(ParseErrorKind::UnbalancedParen, "unmatched ')'");
    if (tok_.type != Tok::End) {
      fail(ParseErrorKind::UnexpectedToken,
           "unexpected '" + std::string(tok_.text) + "' (implicit multiplication is not supported)");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) const { fail_at(kind, tok_.pos, msg); }

  [[noreturn]] static void fail_at(ParseErrorKind kind, std::size_t pos, const std::string& msg) {
    throw ParseError(kind, pos, msg);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      tok_ = {Tok::End, start, {}};
      return;
    }
    const auto c = static_cast<unsigned char>(src_[pos_]);
    if (std::isdigit(c)) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Tok::Number, start, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(c) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Tok::Ident, start, src_.substr(start, pos_ - start)};
      return;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '^': t = Tok::Caret; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case ',': t = Tok::Comma; break;
      default:
        fail_at(ParseErrorKind::UnexpectedToken, start, "unexpected character");
    }
    ++pos_;
    tok_ = {t, start, src_.substr(start, 1)};
  }

  struct Depth {
    explicit Depth(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail(ParseErrorKind::SizeLimit, "expression nested too deeply");
    }
    ~Depth() { --parser.depth_; }
    Parser& parser;
  };

  Polynomial expr() {
    Depth guard(*this);
    Polynomial acc = term();
    while (tok_.type == Tok::Plus || tok_.type == Tok::Minus) {
      const bool minus = tok_.type == Tok::Minus;
      advance();
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (tok_.type == Tok::Star || tok_.type == Tok::Slash) {
      const bool divide = tok_.type == Tok::Slash;
      advance();
      const std::size_t rhs_pos = tok_.pos;
      Polynomial rhs = factor();
      if (divide) {
        if (!rhs.is_constant()) fail_at(ParseErrorKind::NonConstantDivisor, rhs_pos, "divisor must be a constant");
        if (rhs.is_zero()) fail_at(ParseErrorKind::DivisionByZero, rhs_pos, "division by zero");
        acc = scale(acc, 1 / rhs.coeff(0));
      } else {
        check_product(acc, rhs, rhs_pos);
        acc *= rhs;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (tok_.type != Tok::Caret) return base;
    advance();
    if (tok_.type != Tok::Number) fail(ParseErrorKind::NonIntegerExponent, "exponent must be a nonnegative integer literal");
    const std::size_t exp_pos = tok_.pos;
    const auto e = small_uint(tok_.text);
    advance();
    if (!e || (base.degree() > 0 && *e * base.degree() > kMaxDegree) ||
        size_bits(base) * std::max<std::size_t>(*e, 1) > kMaxCoeffBits) {
      fail_at(ParseErrorKind::SizeLimit, exp_pos, "power is too large to expand");
    }
    return pow(base, static_cast<unsigned>(*e));
  }

  Polynomial atom() {
    Depth guard(*this);
    switch (tok_.type) {
      case Tok::Number: {
        Integer value(std::string(tok_.text), 10);
        advance();
        return Polynomial::constant(Rational(value));
      }
      case Tok::Minus:
        advance();
        return -atom();
      case Tok::LParen: {
        const std::size_t open = tok_.pos;
        advance();
        Polynomial inner = expr();
        if (tok_.type != Tok::RParen) fail_at(ParseErrorKind::UnbalancedParen, open, "'(' is never closed");
        advance();
        return inner;
      }
      case Tok::Ident:
        if (tok_.text == "j") {
          advance();
          return Polynomial::monomial(1);
        }
        if (tok_.text == "binomial") return binomial_call();
        fail(ParseErrorKind::VariableNotJ, "unknown identifier '" + std::string(tok_.text) + "' (only j is allowed)");
      case Tok::RParen:
        fail(ParseErrorKind::UnbalancedParen, "unmatched ')'");
      case Tok::End:
        fail(ParseErrorKind::UnexpectedToken, "unexpected end of input");
      default:
        fail(ParseErrorKind::UnexpectedToken, "unexpected '" + std::string(tok_.text) + "'");
    }
  }

  Polynomial binomial_call() {
    advance();
    if (tok_.type != Tok::LParen) fail(ParseErrorKind::UnexpectedToken, "expected '(' after binomial");
    const std::size_t open = tok_.pos;
    advance();
    Polynomial top = expr();
    if (tok_.type != Tok::Comma) fail(ParseErrorKind::UnexpectedToken, "expected ',' in binomial");
    advance();
    const std::size_t index_pos = tok_.pos;
    Polynomial index = expr();
    if (tok_.type != Tok::RParen) fail_at(ParseErrorKind::UnbalancedParen, open, "'(' is never closed");
    advance();
    if (!index.is_constant()) fail_at(ParseErrorKind::NonConstantBinomialIndex, index_pos, "binomial index must be constant");
    const Rational k = index.coeff(0);
    if (k.get_den() != 1 || sgn(k) < 0) {
      fail_at(ParseErrorKind::NonConstantBinomialIndex, index_pos, "binomial index must be a nonnegative integer");
    }
    if (k.get_num() > kMaxDegree || (top.degree() > 0 && k.get_num() * top.degree() > kMaxDegree) ||
        size_bits(top) * k.get_num().get_ui() > kMaxCoeffBits) {
      fail_at(ParseErrorKind::SizeLimit, index_pos, "binomial is too large to expand");
    }
    return binomial(top, static_cast<unsigned>(k.get_num().get_ui()));
  }

  void check_product(const Polynomial& a, const Polynomial& b, std::size_t pos) const {
    if (a.degree() + b.degree() > kMaxDegree || size_bits(a) + size_bits(b) + 16 > kMaxCoeffBits) {
      fail_at(ParseErrorKind::SizeLimit, pos, "product is too large to expand");
    }
  }

  static std::optional<std::size_t> small_uint(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    if (digits.size() - first > 9) return std::nullopt;
    std::size_t v = 0;
    for (char ch : digits.substr(first)) v = v * 10 + static_cast<std::size_t>(ch - '0');
    return v;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, 0, {}};
  int depth_ = 0;
};

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::UnbalancedParen: return "UnbalancedParen";
    case ParseErrorKind::NonConstantBinomialIndex: return "NonConstantBinomialIndex";
    case ParseErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ParseErrorKind::DivisionByZero: return "DivisionByZero";
    case ParseErrorKind::NonConstantDivisor: return "NonConstantDivisor";
    case ParseErrorKind::VariableNotJ: return "VariableNotJ";
    case ParseErrorKind::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " at byte " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position),
      message_(message) {}

Polynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& coeff = c[i];
    if (sgn(coeff) == 0) continue;
    const Rational mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out += '-';
    } else {
      out += sgn(coeff) < 0 ? " - " : " + ";
    }
    std::string monomial;
    if (i >= 1) monomial = std::string(var);
    if (i >= 2) monomial += "^" + std::to_string(i);
    // A leading "-j^k" would parse as (-j)^k, so a unit leading coefficient
    // that is negative keeps its explicit 1.
    const bool keep_unit = first && sgn(coeff) < 0 && i >= 2;
    if (i == 0) {
      out += mag.get_str();
    } else if (mag == 1 && !keep_unit) {
      out += monomial;
    } else {
      out += mag.get_str() + "*" + monomial;
    }
    first = false;
  }
  return out;
}

}  // namespace compseq
