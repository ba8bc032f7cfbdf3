#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "causal/dsl.hpp"

namespace causal::dsl {

std::string format(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.col) + ": " + d.message;
}

const char* to_string(Definition d) {
  switch (d) {
    case Definition::ButFor: return "butfor";
    case Definition::Original: return "original";
    case Definition::Updated: return "updated";
    case Definition::Modified: return "modified";
    case Definition::HAccount: return "haccount";
    case Definition::Hitchcock: return "hitchcock";
  }
  return "?";
}

std::optional<Definition> definition_from_string(std::string_view name) {
  if (name == "butfor") return Definition::ButFor;
  if (name == "original") return Definition::Original;
  if (name == "updated") return Definition::Updated;
  if (name == "modified") return Definition::Modified;
  if (name == "haccount") return Definition::HAccount;
  if (name == "hitchcock") return Definition::Hitchcock;
  return std::nullopt;
}

std::optional<Variant> hp_variant(Definition d) {
  switch (d) {
    case Definition::ButFor: return Variant::ButFor;
    case Definition::Original: return Variant::Original;
    case Definition::Updated: return Variant::Updated;
    case Definition::Modified: return Variant::Modified;
    default: return std::nullopt;
  }
}

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok : std::uint8_t {
  End, Ident, Int,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Colon, Comma, Question,
  Assign, Neq, Lt, Le, Gt, Ge,
  Amp, Pipe, Bang,
  Plus, Minus, Star,
  Arrow,    // <-
  Implies,  // =>
  Iff,      // <=>
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Question: return "'?'";
    case Tok::Assign: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Arrow: return "'<-'";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
  }
  return "token";
}

bool is_reserved(std::string_view word) {
  static constexpr std::array<std::string_view, 16> kReserved = {
      "model", "exo", "endo", "min", "max", "if", "then", "else",
      "of", "in", "using", "maxsize", "cause", "causes", "partof", "compare",
  };
  for (std::string_view r : kReserved) {
    if (word == r) return true;
  }
  return false;
}

// Tokenizes the whole input. Returns false (with a diagnostic) on a lexical
// error; never throws, whatever the bytes.
bool lex(std::string_view text, std::vector<Token>& out, std::vector<Diagnostic>& diags) {
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto peek = [&](std::size_t off) -> char {
    return i + off < text.size() ? text[i + off] : '\0';
  };
  auto push = [&](Tok kind, std::string tok_text, int l, int c) {
    out.push_back(Token{kind, std::move(tok_text), 0, l, c});
  };

  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size()) {
        unsigned char d = static_cast<unsigned char>(text[i]);
        if (std::isalnum(d) || d == '_') {
          advance(1);
        } else {
          break;
        }
      }
      push(Tok::Ident, std::string(text.substr(start, i - start)), l, cl);
      continue;
    }
    if (std::isdigit(c)) {
      unsigned long long value = 0;
      bool overflow = false;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (value > (0x7fffffffffffffffULL - 9) / 10) overflow = true;
        if (!overflow) value = value * 10 + static_cast<unsigned long long>(text[i] - '0');
        advance(1);
      }
      if (overflow) {
        diags.push_back(Diagnostic{l, cl, "integer literal is too large"});
        return false;
      }
      Token t{Tok::Int, std::string(text.substr(start, i - start)), 0, l, cl};
      t.value = static_cast<long long>(value);
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '{': push(Tok::LBrace, "{", l, cl); advance(1); continue;
      case '}': push(Tok::RBrace, "}", l, cl); advance(1); continue;
      case '(': push(Tok::LParen, "(", l, cl); advance(1); continue;
      case ')': push(Tok::RParen, ")", l, cl); advance(1); continue;
      case '[': push(Tok::LBracket, "[", l, cl); advance(1); continue;
      case ']': push(Tok::RBracket, "]", l, cl); advance(1); continue;
      case ':': push(Tok::Colon, ":", l, cl); advance(1); continue;
      case ',': push(Tok::Comma, ",", l, cl); advance(1); continue;
      case '?': push(Tok::Question, "?", l, cl); advance(1); continue;
      case '&': push(Tok::Amp, "&", l, cl); advance(1); continue;
      case '|': push(Tok::Pipe, "|", l, cl); advance(1); continue;
      case '+': push(Tok::Plus, "+", l, cl); advance(1); continue;
      case '-': push(Tok::Minus, "-", l, cl); advance(1); continue;
      case '*': push(Tok::Star, "*", l, cl); advance(1); continue;
      case '=':
        if (peek(1) == '>') {
          push(Tok::Implies, "=>", l, cl);
          advance(2);
        } else {
          push(Tok::Assign, "=", l, cl);
          advance(1);
        }
        continue;
      case '!':
        if (peek(1) == '=') {
          push(Tok::Neq, "!=", l, cl);
          advance(2);
        } else {
          push(Tok::Bang, "!", l, cl);
          advance(1);
        }
        continue;
      case '<':
        if (peek(1) == '-') {
          push(Tok::Arrow, "<-", l, cl);
          advance(2);
        } else if (peek(1) == '=' && peek(2) == '>') {
          push(Tok::Iff, "<=>", l, cl);
          advance(3);
        } else if (peek(1) == '=') {
          push(Tok::Le, "<=", l, cl);
          advance(2);
        } else {
          push(Tok::Lt, "<", l, cl);
          advance(1);
        }
        continue;
      case '>':
        if (peek(1) == '=') {
          push(Tok::Ge, ">=", l, cl);
          advance(2);
        } else {
          push(Tok::Gt, ">", l, cl);
          advance(1);
        }
        continue;
      default: {
        std::string shown;
        if (std::isprint(c)) {
          shown = std::string("'") + static_cast<char>(c) + "'";
        } else {
          shown = "byte 0x";
          static const char* hex = "0123456789abcdef";
          shown += hex[c >> 4];
          shown += hex[c & 0xf];
        }
        diags.push_back(Diagnostic{l, cl, "unexpected character " + shown});
        return false;
      }
    }
  }
  out.push_back(Token{Tok::End, "", 0, line, col});
  return true;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct ParseAbort {};

constexpr int kMaxDepth = 200;

class Parser {
 public:
  Parser(std::string_view text, std::vector<Diagnostic>& diags) : diags_(diags) {
    lexed_ = lex(text, tokens_, diags);
    if (!lexed_) tokens_.push_back(Token{Tok::End, "", 0, 1, 1});
  }

  bool lexed() const { return lexed_; }

  // --- token helpers ---

  const Token& peek(std::size_t off = 0) const {
    std::size_t idx = pos_ + off;
    if (idx >= tokens_.size()) idx = tokens_.size() - 1;
    return tokens_[idx];
  }

  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool check(Tok kind) const { return peek().kind == kind; }

  bool check_kw(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  bool accept(Tok kind) {
    if (check(kind)) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_kw(std::string_view word) {
    if (check_kw(word)) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(Tok kind, const std::string& what) {
    if (!check(kind)) {
      fail_here("expected " + what + " but found " +
                (peek().kind == Tok::Ident ? "'" + peek().text + "'" : token_name(peek().kind)));
    }
    return advance();
  }

  void expect_kw(std::string_view word) {
    if (!accept_kw(word)) {
      fail_here("expected '" + std::string(word) + "' but found " +
                (peek().kind == Tok::Ident ? "'" + peek().text + "'" : token_name(peek().kind)));
    }
  }

  void expect_end() {
    if (!check(Tok::End)) {
      fail_here(std::string("unexpected trailing input: ") +
                (peek().kind == Tok::Ident ? "'" + peek().text + "'" : token_name(peek().kind)));
    }
  }

  [[noreturn]] void fail_at(const Token& tok, const std::string& message) {
    diags_.push_back(Diagnostic{tok.line, tok.col, message});
    throw ParseAbort{};
  }

  [[noreturn]] void fail_here(const std::string& message) { fail_at(peek(), message); }

  Token expect_name(const std::string& what) {
    Token tok = expect(Tok::Ident, what);
    if (is_reserved(tok.text)) {
      fail_at(tok, "'" + tok.text + "' is a reserved word and cannot be used as " + what);
    }
    return tok;
  }

  // Value spelling: integer, negative integer, or identifier.
  std::string parse_value_name() {
    if (check(Tok::Int)) return std::to_string(advance().value);
    if (check(Tok::Minus) && peek(1).kind == Tok::Int) {
      advance();
      return "-" + std::to_string(advance().value);
    }
    if (check(Tok::Ident)) {
      Token tok = advance();
      if (is_reserved(tok.text)) {
        fail_at(tok, "'" + tok.text + "' is a reserved word and cannot be used as a value");
      }
      return tok.text;
    }
    fail_here("expected a value (integer or name)");
  }

  // --- model ---

  CausalModel parse_model_document(ModelLimits limits) {
    expect_kw("model");
    Token name_tok = expect_name("a model name");
    ModelBuilder builder(name_tok.text, limits);
    expect(Tok::LBrace, "'{'");

    std::vector<Token> decl_tokens;
    while (check_kw("exo") || check_kw("endo")) {
      bool exo = peek().text == "exo";
      advance();
      Token var_tok = expect_name("a variable name");
      expect(Tok::Colon, "':'");
      expect(Tok::LBrace, "'{'");
      std::vector<std::string> values;
      values.push_back(parse_value_name());
      while (accept(Tok::Comma)) values.push_back(parse_value_name());
      expect(Tok::RBrace, "'}'");
      try {
        if (exo) {
          builder.exogenous(var_tok.text, values);
        } else {
          builder.endogenous(var_tok.text, values);
        }
      } catch (const ModelError& e) {
        fail_at(var_tok, e.what());
      }
      decl_tokens.push_back(var_tok);
    }

    std::vector<std::pair<std::string, Token>> equation_tokens;
    while (check(Tok::Ident)) {
      if (check_kw("exo") || check_kw("endo")) {
        fail_here("variable declarations must precede equations");
      }
      Token target_tok = expect(Tok::Ident, "an equation target");
      if (is_reserved(target_tok.text)) {
        fail_at(target_tok, "'" + target_tok.text + "' is a reserved word");
      }
      expect(Tok::Assign, "'='");
      Expr body = parse_expr(builder, 0);
      auto target = builder.find(target_tok.text);
      if (!target) {
        fail_at(target_tok, "equation for undeclared variable '" + target_tok.text + "'");
      }
      try {
        builder.equation(*target, std::move(body));
      } catch (const ModelError& e) {
        fail_at(target_tok, e.what());
      }
      equation_tokens.emplace_back(target_tok.text, target_tok);
    }

    expect(Tok::RBrace, "'}'");
    expect_end();

    try {
      return builder.build();
    } catch (const ModelError& e) {
      // Attach the build error to the most relevant position we know.
      std::string subject = e.subject();
      if (auto comma = subject.find(','); comma != std::string::npos) {
        subject = subject.substr(0, comma);
      }
      for (const auto& [name, tok] : equation_tokens) {
        if (name == subject) fail_at(tok, e.what());
      }
      for (const Token& tok : decl_tokens) {
        if (tok.text == subject) fail_at(tok, e.what());
      }
      fail_at(name_tok, e.what());
    }
  }

  // --- equation expressions ---

  Expr parse_expr(ModelBuilder& builder, int depth) {
    guard(depth);
    if (accept_kw("if")) {
      Expr cond = parse_expr(builder, depth + 1);
      expect_kw("then");
      Expr then_branch = parse_expr(builder, depth + 1);
      expect_kw("else");
      Expr else_branch = parse_expr(builder, depth + 1);
      return Expr::if_then_else(std::move(cond), std::move(then_branch), std::move(else_branch));
    }
    return parse_or(builder, depth + 1);
  }

  Expr parse_or(ModelBuilder& builder, int depth) {
    guard(depth);
    Expr e = parse_and(builder, depth + 1);
    while (accept(Tok::Pipe)) {
      e = Expr::logical_or(std::move(e), parse_and(builder, depth + 1));
    }
    return e;
  }

  Expr parse_and(ModelBuilder& builder, int depth) {
    guard(depth);
    Expr e = parse_cmp(builder, depth + 1);
    while (accept(Tok::Amp)) {
      e = Expr::logical_and(std::move(e), parse_cmp(builder, depth + 1));
    }
    return e;
  }

  bool at_cmp_op() const {
    switch (peek().kind) {
      case Tok::Assign:
      case Tok::Neq:
      case Tok::Lt:
      case Tok::Le:
      case Tok::Gt:
      case Tok::Ge:
        return true;
      default:
        return false;
    }
  }

  Expr parse_cmp(ModelBuilder& builder, int depth) {
    guard(depth);
    Expr lhs = parse_add(builder, depth + 1);
    if (!at_cmp_op()) return lhs;
    Tok op = advance().kind;
    Expr rhs = parse_add(builder, depth + 1);
    if (at_cmp_op()) {
      fail_here("comparisons do not chain; parenthesize the intended comparison");
    }
    switch (op) {
      case Tok::Assign: return Expr::eq(std::move(lhs), std::move(rhs));
      case Tok::Neq: return Expr::ne(std::move(lhs), std::move(rhs));
      case Tok::Lt: return Expr::lt(std::move(lhs), std::move(rhs));
      case Tok::Le: return Expr::le(std::move(lhs), std::move(rhs));
      case Tok::Gt: return Expr::lt(std::move(rhs), std::move(lhs));
      case Tok::Ge: return Expr::le(std::move(rhs), std::move(lhs));
      default: break;
    }
    fail_here("internal: unreachable comparison operator");
  }

  Expr parse_add(ModelBuilder& builder, int depth) {
    guard(depth);
    Expr e = parse_mul(builder, depth + 1);
    while (check(Tok::Plus) || check(Tok::Minus)) {
      bool plus = advance().kind == Tok::Plus;
      Expr rhs = parse_mul(builder, depth + 1);
      e = plus ? Expr::add(std::move(e), std::move(rhs)) : Expr::sub(std::move(e), std::move(rhs));
    }
    return e;
  }

  Expr parse_mul(ModelBuilder& builder, int depth) {
    guard(depth);
    Expr e = parse_unary(builder, depth + 1);
    while (accept(Tok::Star)) {
      e = Expr::mul(std::move(e), parse_unary(builder, depth + 1));
    }
    return e;
  }

  Expr parse_unary(ModelBuilder& builder, int depth) {
    guard(depth);
    if (accept(Tok::Bang)) {
      return Expr::logical_not(parse_unary(builder, depth + 1));
    }
    if (accept(Tok::Minus)) {
      Expr operand = parse_unary(builder, depth + 1);
      if (operand.op() == ExprOp::Constant) {
        return Expr::constant(-operand.literal());
      }
      return Expr::sub(Expr::constant(0), std::move(operand));
    }
    return parse_primary(builder, depth + 1);
  }

  Expr parse_primary(ModelBuilder& builder, int depth) {
    guard(depth);
    if (check(Tok::Int)) {
      return Expr::constant(advance().value);
    }
    if (accept(Tok::LParen)) {
      Expr e = parse_expr(builder, depth + 1);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (check_kw("min") || check_kw("max")) {
      bool is_min = peek().text == "min";
      advance();
      expect(Tok::LParen, "'('");
      Expr a = parse_expr(builder, depth + 1);
      expect(Tok::Comma, "','");
      Expr b = parse_expr(builder, depth + 1);
      expect(Tok::RParen, "')'");
      return is_min ? Expr::min(std::move(a), std::move(b)) : Expr::max(std::move(a), std::move(b));
    }
    if (check(Tok::Ident)) {
      Token tok = advance();
      if (is_reserved(tok.text)) {
        fail_at(tok, "unexpected keyword '" + tok.text + "' in expression");
      }
      if (auto var = builder.find(tok.text)) {
        return Expr::var(*var);
      }
      if (auto sym = builder.lookup_symbol(tok.text)) {
        return Expr::constant(*sym);
      }
      fail_at(tok, "undeclared identifier '" + tok.text + "'");
    }
    fail_here("expected an expression");
  }

  void guard(int depth) {
    if (depth > kMaxDepth) {
      fail_here("expression nested too deeply");
    }
  }

  // --- contexts ---

  Assignment parse_context_literal(const CausalModel& model) {
    Token open = expect(Tok::LParen, "'('");
    Assignment ctx(model.var_count());
    const std::vector<VarId>& exo = model.exogenous();
    std::size_t positional_cursor = 0;

    auto assign_positional = [&](const std::string& value_name, const Token& where) {
      while (positional_cursor < exo.size() && ctx.has(exo[positional_cursor])) {
        ++positional_cursor;
      }
      if (positional_cursor >= exo.size()) {
        fail_at(where, "too many context values; the model has " +
                           std::to_string(exo.size()) + " exogenous variables");
      }
      VarId var = exo[positional_cursor];
      auto idx = model.variable(var).index_of_name(value_name);
      if (!idx) {
        fail_at(where, "'" + value_name + "' is not in the domain of '" +
                           model.variable(var).name + "'");
      }
      ctx.set(var, *idx);
    };

    if (!check(Tok::RParen)) {
      do {
        Token where = peek();
        if (check(Tok::Ident) && peek(1).kind == Tok::Assign && !is_reserved(peek().text)) {
          Token name_tok = advance();
          advance();  // '='
          std::string value_name = parse_value_name();
          auto var = model.find(name_tok.text);
          if (!var) {
            fail_at(name_tok, "unknown variable '" + name_tok.text + "'");
          }
          if (model.is_endogenous(*var)) {
            fail_at(name_tok, "context assigns endogenous variable '" + name_tok.text + "'");
          }
          if (ctx.has(*var)) {
            fail_at(name_tok, "context assigns '" + name_tok.text + "' twice");
          }
          auto idx = model.variable(*var).index_of_name(value_name);
          if (!idx) {
            fail_at(name_tok, "'" + value_name + "' is not in the domain of '" +
                                  name_tok.text + "'");
          }
          ctx.set(*var, *idx);
        } else {
          std::string value_name = parse_value_name();
          assign_positional(value_name, where);
        }
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')'");

    for (VarId v : exo) {
      if (!ctx.has(v)) {
        fail_at(open, "context does not assign exogenous variable '" +
                          model.variable(v).name + "'");
      }
    }
    return ctx;
  }

  // --- formulas ---

  PrimitiveEvent parse_event(const CausalModel& model) {
    Token name_tok = expect_name("a variable name");
    expect(Tok::Assign, "'='");
    std::string value_name = parse_value_name();
    try {
      return make_event(model, name_tok.text, value_name);
    } catch (const ModelError& e) {
      fail_at(name_tok, e.what());
    }
  }

  BoolFormula parse_bool(const CausalModel& model, int depth) {
    guard(depth);
    BoolFormula lhs = parse_bool_implies(model, depth + 1);
    while (accept(Tok::Iff)) {
      BoolFormula rhs = parse_bool_implies(model, depth + 1);
      // a <=> b desugars to (a => b) & (b => a).
      BoolFormula forward = BoolFormula::disj(BoolFormula::negation(lhs), rhs);
      BoolFormula backward = BoolFormula::disj(BoolFormula::negation(rhs), lhs);
      lhs = BoolFormula::conj(std::move(forward), std::move(backward));
    }
    return lhs;
  }

  BoolFormula parse_bool_implies(const CausalModel& model, int depth) {
    guard(depth);
    BoolFormula lhs = parse_bool_or(model, depth + 1);
    if (accept(Tok::Implies)) {
      BoolFormula rhs = parse_bool_implies(model, depth + 1);  // right-associative
      return BoolFormula::disj(BoolFormula::negation(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  BoolFormula parse_bool_or(const CausalModel& model, int depth) {
    guard(depth);
    BoolFormula e = parse_bool_and(model, depth + 1);
    while (accept(Tok::Pipe)) {
      e = BoolFormula::disj(std::move(e), parse_bool_and(model, depth + 1));
    }
    return e;
  }

  BoolFormula parse_bool_and(const CausalModel& model, int depth) {
    guard(depth);
    BoolFormula e = parse_bool_unary(model, depth + 1);
    while (accept(Tok::Amp)) {
      e = BoolFormula::conj(std::move(e), parse_bool_unary(model, depth + 1));
    }
    return e;
  }

  BoolFormula parse_bool_unary(const CausalModel& model, int depth) {
    guard(depth);
    if (accept(Tok::Bang)) {
      return BoolFormula::negation(parse_bool_unary(model, depth + 1));
    }
    if (accept(Tok::LParen)) {
      BoolFormula e = parse_bool(model, depth + 1);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (check(Tok::LBracket)) {
      fail_here("an intervention prefix may appear only once, at the front of the formula");
    }
    return BoolFormula::event(parse_event(model));
  }

  CausalFormula parse_causal_formula(const CausalModel& model) {
    Intervention prefix;
    if (accept(Tok::LBracket)) {
      do {
        Token name_tok = expect_name("a variable name");
        expect(Tok::Arrow, "'<-'");
        std::string value_name = parse_value_name();
        auto var = model.find(name_tok.text);
        if (!var) {
          fail_at(name_tok, "unknown variable '" + name_tok.text + "'");
        }
        auto idx = model.variable(*var).index_of_name(value_name);
        if (!idx) {
          fail_at(name_tok,
                  "'" + value_name + "' is not in the domain of '" + name_tok.text + "'");
        }
        try {
          prefix.add(model, *var, *idx);
        } catch (const ModelError& e) {
          fail_at(name_tok, e.what());
        }
      } while (accept(Tok::Comma));
      expect(Tok::RBracket, "']'");
    }
    BoolFormula body = parse_bool(model, 0);
    return CausalFormula(std::move(prefix), std::move(body));
  }

  // --- queries ---

  CauseCandidate parse_conjunction(const CausalModel& model) {
    std::vector<PrimitiveEvent> events;
    events.push_back(parse_event(model));
    while (accept(Tok::Amp)) {
      events.push_back(parse_event(model));
    }
    try {
      return CauseCandidate::make(model, std::move(events));
    } catch (const std::exception& e) {
      fail_here(e.what());
    }
  }

  Definition parse_definition(const CausalModel&) {
    Token tok = expect(Tok::Ident, "a definition name");
    auto def = definition_from_string(tok.text);
    if (!def) {
      fail_at(tok, "unknown definition '" + tok.text +
                       "'; expected butfor, original, updated, modified, haccount, or hitchcock");
    }
    return *def;
  }

  Query parse_query_document(const CausalModel& model) {
    Query q;
    if (accept_kw("cause")) {
      expect(Tok::Question, "'?'");
      q.kind = Query::Kind::Cause;
      q.candidate = parse_conjunction(model);
      expect_kw("of");
      q.effect = parse_bool(model, 0);
      expect_kw("in");
      q.context = parse_context_literal(model);
      expect_kw("using");
      q.definition = parse_definition(model);
    } else if (accept_kw("causes")) {
      expect(Tok::Question, "'?'");
      q.kind = Query::Kind::Causes;
      q.effect = parse_bool(model, 0);
      expect_kw("in");
      q.context = parse_context_literal(model);
      expect_kw("using");
      q.definition = parse_definition(model);
      q.max_size = static_cast<int>(model.endogenous().size());
      if (accept_kw("maxsize")) {
        Token n = expect(Tok::Int, "an integer");
        if (n.value < 1) {
          fail_at(n, "maxsize must be at least 1");
        }
        q.max_size = static_cast<int>(n.value);
      }
      if (q.definition == Definition::HAccount || q.definition == Definition::Hitchcock) {
        fail_here("causes? supports butfor, original, updated, and modified");
      }
    } else if (accept_kw("partof")) {
      expect(Tok::Question, "'?'");
      q.kind = Query::Kind::PartOf;
      std::vector<PrimitiveEvent> single{parse_event(model)};
      q.candidate = CauseCandidate::make(model, std::move(single));
      expect_kw("of");
      q.effect = parse_bool(model, 0);
      expect_kw("in");
      q.context = parse_context_literal(model);
      q.definition = Definition::Modified;
      if (accept_kw("using")) {
        Token where = peek();
        q.definition = parse_definition(model);
        if (!hp_variant(*q.definition)) {
          fail_at(where, "partof? supports butfor, original, updated, and modified");
        }
      }
    } else if (accept_kw("compare")) {
      q.kind = Query::Kind::Compare;
      q.candidate = parse_conjunction(model);
      expect_kw("of");
      q.effect = parse_bool(model, 0);
      expect_kw("in");
      q.context = parse_context_literal(model);
    } else {
      fail_here("expected a query: cause?, causes?, partof?, or compare");
    }
    expect_end();
    return q;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
  bool lexed_ = false;
};

template <typename T, typename Fn>
ParseResult<T> run_parser(std::string_view text, Fn&& fn) {
  ParseResult<T> result;
  Parser parser(text, result.diagnostics);
  if (!parser.lexed()) return result;
  try {
    result.value = fn(parser);
  } catch (const ParseAbort&) {
    if (result.diagnostics.empty()) {
      result.diagnostics.push_back(Diagnostic{1, 1, "parse failed"});
    }
  }
  return result;
}

}  // namespace

ParseResult<CausalModel> parse_model(std::string_view text, ModelLimits limits) {
  return run_parser<CausalModel>(
      text, [&](Parser& p) { return p.parse_model_document(limits); });
}

ParseResult<Assignment> parse_context(std::string_view text, const CausalModel& model) {
  return run_parser<Assignment>(text, [&](Parser& p) {
    Assignment ctx = p.parse_context_literal(model);
    p.expect_end();
    return ctx;
  });
}

ParseResult<CausalFormula> parse_formula(std::string_view text, const CausalModel& model) {
  return run_parser<CausalFormula>(text, [&](Parser& p) {
    CausalFormula f = p.parse_causal_formula(model);
    p.expect_end();
    return f;
  });
}

ParseResult<CauseSpec> parse_cause_spec(std::string_view text, const CausalModel& model) {
  return run_parser<CauseSpec>(text, [&](Parser& p) {
    CauseCandidate candidate = p.parse_conjunction(model);
    p.expect_kw("of");
    BoolFormula effect = p.parse_bool(model, 0);
    p.expect_end();
    return CauseSpec{std::move(candidate), std::move(effect)};
  });
}

ParseResult<Query> parse_query(std::string_view text, const CausalModel& model) {
  return run_parser<Query>(text, [&](Parser& p) { return p.parse_query_document(model); });
}

}  // namespace causal::dsl
