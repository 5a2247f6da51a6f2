#include "bcnid/logic.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include "bcnid/dynamics.hpp"
#include "bcnid/error.hpp"

namespace bcnid {

std::string to_string(const Variable& v) {
  return (v.kind == VarKind::State ? "x" : "u") + std::to_string(v.index);
}

BoolExpr BoolExpr::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = value;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::variable(Variable v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->var = v;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::negate(BoolExpr operand) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->children.push_back(std::move(operand));
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::binary(Op op, BoolExpr lhs, BoolExpr rhs) {
  if (op == Op::Const || op == Op::Var || op == Op::Not) {
    throw Error("BoolExpr::binary needs a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return BoolExpr(std::move(n));
}

BoolExpr::Op BoolExpr::op() const { return node_->op; }
bool BoolExpr::value() const { return node_->value; }
const Variable& BoolExpr::var() const { return node_->var; }
const BoolExpr& BoolExpr::lhs() const { return node_->children.at(0); }
const BoolExpr& BoolExpr::rhs() const { return node_->children.at(1); }

std::vector<Variable> BoolExpr::variables() const {
  std::vector<Variable> out;
  std::vector<const BoolExpr*> stack{this};
  // Preorder, left to right.
  while (!stack.empty()) {
    const BoolExpr* e = stack.back();
    stack.pop_back();
    if (e->op() == Op::Var) {
      if (std::find(out.begin(), out.end(), e->var()) == out.end()) out.push_back(e->var());
      continue;
    }
    const auto& ch = e->node_->children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

namespace {

enum class Tok {
  End,
  Newline,
  Ident,    // xK, uK, yK or a keyword
  Number,
  Prime,
  Assign,
  Not,
  And,
  Or,
  Xor,
  Implies,
  Iff,
  LParen,
  RParen,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
        continue;
      }
      if (c == '\n') {
        out.push_back({Tok::Newline, "\\n", line_, col_});
        ++pos_;
        ++line_;
        col_ = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
        continue;
      }
      const std::size_t line = line_, col = col_;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
        out.push_back({Tok::Ident, std::string(src_.substr(pos_, end - pos_)), line, col});
        advance(end - pos_);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        out.push_back({Tok::Number, std::string(src_.substr(pos_, end - pos_)), line, col});
        advance(end - pos_);
        continue;
      }
      if (match("<->")) { out.push_back({Tok::Iff, "<->", line, col}); continue; }
      if (match("->")) { out.push_back({Tok::Implies, "->", line, col}); continue; }
      if (match("\xC2\xAC")) { out.push_back({Tok::Not, "¬", line, col}); continue; }
      if (match("\xE2\x88\xA7")) { out.push_back({Tok::And, "∧", line, col}); continue; }
      if (match("\xE2\x88\xA8")) { out.push_back({Tok::Or, "∨", line, col}); continue; }
      switch (c) {
        case '\'': out.push_back({Tok::Prime, "'", line, col}); break;
        case '=': out.push_back({Tok::Assign, "=", line, col}); break;
        case '!': out.push_back({Tok::Not, "!", line, col}); break;
        case '&': out.push_back({Tok::And, "&", line, col}); break;
        case '|': out.push_back({Tok::Or, "|", line, col}); break;
        case '^': out.push_back({Tok::Xor, "^", line, col}); break;
        case '(': out.push_back({Tok::LParen, "(", line, col}); break;
        case ')': out.push_back({Tok::RParen, ")", line, col}); break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
      advance(1);
    }
    out.push_back({Tok::End, "end of input", line_, col_});
    return out;
  }

 private:
  bool match(std::string_view s) {
    if (src_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    ++col_;
    return true;
  }
  void advance(std::size_t k) {
    pos_ += k;
    col_ += k;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// Splits "x12" into ('x', 12); nullopt when the identifier is not of that form.
std::optional<std::pair<char, std::size_t>> split_symbol(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  if (!std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return std::nullopt;
  return std::make_pair(s[0], static_cast<std::size_t>(std::stoull(s.substr(1))));
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t n, std::size_t m)
      : toks_(std::move(toks)), n_(n), m_(m) {}

  void set_dims(std::size_t n, std::size_t m) {
    n_ = n;
    m_ = m;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().line, peek().column, msg);
  }

  // iff := implies ("<->" implies)*
  BoolExpr parse_iff() {
    BoolExpr lhs = parse_implies();
    while (at(Tok::Iff)) {
      take();
      lhs = BoolExpr::binary(BoolExpr::Op::Iff, lhs, parse_implies());
    }
    return lhs;
  }

  // implies := or ("->" implies)?
  BoolExpr parse_implies() {
    BoolExpr lhs = parse_or();
    if (at(Tok::Implies)) {
      take();
      return BoolExpr::binary(BoolExpr::Op::Implies, lhs, parse_implies());
    }
    return lhs;
  }

  BoolExpr parse_or() {
    BoolExpr lhs = parse_xor();
    while (at(Tok::Or)) {
      take();
      lhs = BoolExpr::binary(BoolExpr::Op::Or, lhs, parse_xor());
    }
    return lhs;
  }

  BoolExpr parse_xor() {
    BoolExpr lhs = parse_and();
    while (at(Tok::Xor)) {
      take();
      lhs = BoolExpr::binary(BoolExpr::Op::Xor, lhs, parse_and());
    }
    return lhs;
  }

  BoolExpr parse_and() {
    BoolExpr lhs = parse_unary();
    while (at(Tok::And)) {
      take();
      lhs = BoolExpr::binary(BoolExpr::Op::And, lhs, parse_unary());
    }
    return lhs;
  }

  BoolExpr parse_unary() {
    if (at(Tok::Not)) {
      take();
      return BoolExpr::negate(parse_unary());
    }
    return parse_atom();
  }

  BoolExpr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        BoolExpr e = parse_iff();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Number:
        if (t.text == "0" || t.text == "1") {
          take();
          return BoolExpr::constant(t.text == "1");
        }
        fail("only the constants 0 and 1 are allowed, found '" + t.text + "'");
      case Tok::Ident: {
        auto sym = split_symbol(t.text);
        if (!sym || (sym->first != 'x' && sym->first != 'u')) {
          fail("expected a state (xK) or input (uK) variable, found '" + t.text + "'");
        }
        const bool is_state = sym->first == 'x';
        const std::size_t limit = is_state ? n_ : m_;
        if (sym->second < 1 || sym->second > limit) {
          fail("undeclared variable '" + t.text + "'");
        }
        take();
        return BoolExpr::variable({is_state ? VarKind::State : VarKind::Input, sym->second});
      }
      default:
        fail("expected an operand, found '" + t.text + "'");
    }
  }

  std::size_t read_count(const char* keyword) {
    const Token& k = expect(Tok::Ident, keyword);
    if (k.text != keyword) {
      throw ParseError(k.line, k.column, std::string("expected '") + keyword + "'");
    }
    const Token& num = expect(Tok::Number, "a count");
    return static_cast<std::size_t>(std::stoull(num.text));
  }

  void skip_newlines() {
    while (at(Tok::Newline)) take();
  }

  void end_statement() {
    if (!at(Tok::Newline) && !at(Tok::End)) fail("unexpected '" + peek().text + "' after expression");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_;
  std::size_t m_;
};

constexpr std::size_t kMaxArity = 20;

}  // namespace

NetworkSpec parse_network(std::string_view text) {
  Parser p(Lexer(text).run(), 0, 0);
  p.skip_newlines();
  if (p.at(Tok::End)) p.fail("empty network source; expected 'states N inputs M outputs L'");

  NetworkSpec spec;
  spec.n = p.read_count("states");
  spec.m = p.read_count("inputs");
  spec.l = p.read_count("outputs");
  if (spec.n + spec.m > kMaxArity || spec.l > kMaxArity) {
    p.fail("network too large for desk-scale enumeration");
  }
  p.end_statement();
  p.set_dims(spec.n, spec.m);

  std::vector<std::optional<BoolExpr>> updates(spec.n);
  std::vector<std::optional<BoolExpr>> outputs(spec.l);

  for (;;) {
    p.skip_newlines();
    if (p.at(Tok::End)) break;
    const Token head = p.expect(Tok::Ident, "an equation");
    auto sym = split_symbol(head.text);
    if (!sym || (sym->first != 'x' && sym->first != 'y')) {
      throw ParseError(head.line, head.column,
                       "expected an equation for xK' or yK, found '" + head.text + "'");
    }
    const bool is_update = sym->first == 'x';
    const std::size_t limit = is_update ? spec.n : spec.l;
    if (sym->second < 1 || sym->second > limit) {
      throw ParseError(head.line, head.column, "undeclared variable '" + head.text + "'");
    }
    if (is_update) {
      p.expect(Tok::Prime, "\"'\" after state variable");
    }
    p.expect(Tok::Assign, "'='");
    const Token& first = p.peek();
    BoolExpr e = p.parse_iff();
    p.end_statement();

    auto& slot = is_update ? updates[sym->second - 1] : outputs[sym->second - 1];
    if (slot) {
      throw ParseError(head.line, head.column, "duplicate equation for '" + head.text + "'");
    }
    if (!is_update) {
      for (const auto& v : e.variables()) {
        if (v.kind == VarKind::Input) {
          throw ParseError(first.line, first.column,
                           "output equation for '" + head.text + "' references input " + to_string(v));
        }
      }
    }
    slot = std::move(e);
  }

  const Token& end = p.peek();
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (!updates[i]) {
      throw ParseError(end.line, end.column, "missing equation for x" + std::to_string(i + 1) + "'");
    }
    spec.updates.push_back(*updates[i]);
  }
  for (std::size_t j = 0; j < spec.l; ++j) {
    if (!outputs[j]) {
      throw ParseError(end.line, end.column, "missing equation for y" + std::to_string(j + 1));
    }
    spec.outputs.push_back(*outputs[j]);
  }
  return spec;
}

BoolExpr parse_expression(std::string_view text, std::size_t n, std::size_t m) {
  Parser p(Lexer(text).run(), n, m);
  BoolExpr e = p.parse_iff();
  if (!p.at(Tok::End)) p.fail("unexpected '" + p.peek().text + "' after expression");
  return e;
}

LogicalMatrix structure_matrix(const BoolExpr& e, std::span<const Variable> var_order) {
  const std::size_t k = var_order.size();
  if (k > kMaxArity) throw LimitExceeded("structure matrix arity too large");
  for (const auto& v : e.variables()) {
    if (std::find(var_order.begin(), var_order.end(), v) == var_order.end()) {
      throw DimensionError("variable " + to_string(v) + " is not in the argument order");
    }
  }
  const std::size_t cols = std::size_t{1} << k;
  std::vector<Index> idx(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    auto lookup = [&](const Variable& v) {
      const auto pos = static_cast<std::size_t>(
          std::find(var_order.begin(), var_order.end(), v) - var_order.begin());
      // MSB first; a 0 bit is TRUE.
      return ((c >> (k - 1 - pos)) & 1u) == 0;
    };
    idx[c] = e.evaluate(lookup) ? 1 : 2;
  }
  return LogicalMatrix(2, std::move(idx));
}

std::vector<Variable> update_order(std::size_t n, std::size_t m) {
  std::vector<Variable> order;
  for (std::size_t j = 1; j <= m; ++j) order.push_back({VarKind::Input, j});
  for (std::size_t i = 1; i <= n; ++i) order.push_back({VarKind::State, i});
  return order;
}

std::vector<Variable> output_order(std::size_t n) { return update_order(n, 0); }

namespace {

LogicalMatrix stack(const std::vector<BoolExpr>& exprs, std::span<const Variable> order) {
  const std::size_t cols = std::size_t{1} << order.size();
  // The empty Khatri-Rao product is the 1-row all-ones logical matrix.
  LogicalMatrix acc(1, std::vector<Index>(cols, 1));
  for (const auto& e : exprs) acc = khatri_rao(acc, structure_matrix(e, order));
  return acc;
}

}  // namespace

Bcn assemble(const NetworkSpec& spec) {
  if (spec.updates.size() != spec.n || spec.outputs.size() != spec.l) {
    throw DimensionError("network spec equation count does not match its declaration");
  }
  const auto uorder = update_order(spec.n, spec.m);
  const auto xorder = output_order(spec.n);
  return Bcn(spec.n, spec.m, spec.l, stack(spec.updates, uorder), stack(spec.outputs, xorder));
}

}  // namespace bcnid
