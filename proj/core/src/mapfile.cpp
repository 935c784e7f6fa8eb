#include "stratkit/mapfile.hpp"

#include <cctype>
#include <sstream>

namespace stratkit {

namespace {

struct Token {
  enum Kind { number, ident, plus, minus, star, caret, lparen, rparen, slash, end };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& src, int line) : src_(src), line_(line) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
      ++pos_;
    int col = (int)pos_ + 1;
    if (pos_ >= src_.size()) return {Token::end, "", line_, col};
    char c = src_[pos_];
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
        ++pos_;
      return {Token::number, src_.substr(start, pos_ - start), line_, col};
    }
    if (std::isalpha((unsigned char)c)) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        ++pos_;
      return {Token::ident, src_.substr(start, pos_ - start), line_, col};
    }
    ++pos_;
    switch (c) {
      case '+': return {Token::plus, "+", line_, col};
      case '-': return {Token::minus, "-", line_, col};
      case '*': return {Token::star, "*", line_, col};
      case '^': return {Token::caret, "^", line_, col};
      case '(': return {Token::lparen, "(", line_, col};
      case ')': return {Token::rparen, ")", line_, col};
      case '/': return {Token::slash, "/", line_, col};  // literal-only
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col);
    }
  }

 private:
  const std::string& src_;
  int line_;
  size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(const std::string& src, int line, const Ctx& ctx)
      : lexer_(src, line), ctx_(ctx) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (cur_.kind != Token::end)
      throw ParseError("trailing input after expression", cur_.line, cur_.col);
    return p;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Polynomial expr() {
    Polynomial acc = term();
    while (cur_.kind == Token::plus || cur_.kind == Token::minus) {
      bool add = cur_.kind == Token::plus;
      advance();
      Polynomial rhs = term();
      acc = add ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (cur_.kind == Token::star) {
        advance();
        acc = acc * factor();
      } else if (cur_.kind == Token::number || cur_.kind == Token::ident ||
                 cur_.kind == Token::lparen) {
        throw ParseError("implicit multiplication is not allowed; use '*'",
                         cur_.line, cur_.col);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    if (cur_.kind == Token::minus) {
      advance();
      return -factor();
    }
    Polynomial b = base();
    if (cur_.kind == Token::caret) {
      advance();
      if (cur_.kind != Token::number)
        throw ParseError("exponent must be a non-negative integer", cur_.line,
                         cur_.col);
      unsigned long e = std::stoul(cur_.text);
      if (e > 64)
        throw ParseError("exponent too large", cur_.line, cur_.col);
      advance();
      return b.pow((unsigned)e);
    }
    return b;
  }

  Polynomial base() {
    if (cur_.kind == Token::number) {
      std::string num = cur_.text;
      advance();
      if (cur_.kind == Token::slash) {
        advance();
        if (cur_.kind != Token::number)
          throw ParseError("expected denominator after '/'", cur_.line,
                           cur_.col);
        std::string den = cur_.text;
        advance();
        return Polynomial::constant(ctx_, Rational::parse(num + "/" + den));
      }
      return Polynomial::constant(ctx_, Rational::parse(num));
    }
    if (cur_.kind == Token::ident) {
      int idx = ctx_->index_of(cur_.text);
      if (idx < 0)
        throw ParseError("unknown variable: " + cur_.text, cur_.line,
                         cur_.col);
      advance();
      return Polynomial::variable(ctx_, idx);
    }
    if (cur_.kind == Token::lparen) {
      advance();
      Polynomial p = expr();
      if (cur_.kind != Token::rparen)
        throw ParseError("expected ')'", cur_.line, cur_.col);
      advance();
      return p;
    }
    throw ParseError("expected a number, variable or '('", cur_.line,
                     cur_.col);
  }

  Lexer lexer_;
  Ctx ctx_;
  Token cur_;
};

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

std::vector<std::string> pick_target_names(
    const std::vector<std::string>& source, int n) {
  for (const char* prefix : {"y", "a", "b", "u"}) {
    std::vector<std::string> cand;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      cand.push_back(prefix + std::to_string(i));
      for (const auto& s : source)
        if (s == cand.back()) ok = false;
    }
    if (ok) return cand;
  }
  throw DomainError("could not choose target variable names");
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ctx& ctx) {
  return ExprParser(text, 1, ctx).parse();
}

PolyMap parse_map(const std::string& text, const MapFileOptions& opts) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::string name;
  Ctx ctx;
  bool in_map = false;
  std::vector<Polynomial> components;
  std::vector<std::pair<std::string, int>> body;  // deferred component lines

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (!in_map && line.rfind("name:", 0) == 0) {
      name = strip(line.substr(5));
      continue;
    }
    if (!in_map && line.rfind("vars:", 0) == 0) {
      if (ctx) throw ParseError("duplicate vars declaration", lineno, 1);
      std::istringstream vs(line.substr(5));
      std::vector<std::string> names;
      std::string v;
      while (vs >> v) {
        if (!valid_identifier(v))
          throw ParseError("bad variable name: " + v, lineno, 1);
        names.push_back(v);
      }
      if (names.empty())
        throw ParseError("vars declaration lists no variables", lineno, 1);
      ctx = make_context(std::move(names), opts.order);
      continue;
    }
    if (!in_map && line == "map:") {
      if (!ctx) throw ParseError("map: before vars:", lineno, 1);
      in_map = true;
      continue;
    }
    if (!in_map)
      throw ParseError("expected 'vars:' or 'map:' declaration", lineno, 1);
    body.emplace_back(line, lineno);
  }

  if (!ctx) throw ParseError("missing vars declaration", lineno, 1);
  if (!in_map) throw ParseError("missing map section", lineno, 1);
  if (body.empty()) throw ParseError("map section is empty", lineno, 1);

  for (auto& [src, ln] : body)
    components.push_back(ExprParser(src, ln, ctx).parse());

  if (!opts.allow_rectangular &&
      (int)components.size() != ctx->arity())
    throw ParseError("component count (" + std::to_string(components.size()) +
                         ") differs from variable count (" +
                         std::to_string(ctx->arity()) + ")",
                     lineno, 1);

  auto targets = pick_target_names(ctx->names(), (int)components.size());
  return PolyMap(ctx, std::move(targets), std::move(components), name);
}

std::string render_map(const PolyMap& map) {
  std::ostringstream out;
  if (!map.name.empty()) out << "name: " << map.name << "\n";
  out << "vars:";
  for (const auto& v : map.source->names()) out << " " << v;
  out << "\nmap:\n";
  for (const auto& c : map.components) out << c.str() << "\n";
  return out.str();
}

}  // namespace stratkit
