#include "oml/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace oml {

struct Expr::Node {
  Kind kind;
  char name = 0;
  bool one = false;
  OpCode op{};
  std::vector<Expr> children;
};

Expr Expr::variable(char name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = name;
  return Expr(std::move(n));
}

Expr Expr::zero() {
  static const Expr z = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    return Expr(std::move(n));
  }();
  return z;
}

Expr Expr::one() {
  static const Expr o = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->one = true;
    return Expr(std::move(n));
  }();
  return o;
}

Expr Expr::negation(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negation;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::binary(OpCode op, Expr left, Expr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->op = op;
  n->children.reserve(2);
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
char Expr::name() const { return node_->name; }
bool Expr::is_one() const { return node_->one; }
OpCode Expr::op() const { return node_->op; }
const Expr& Expr::child() const { return node_->children[0]; }
const Expr& Expr::left() const { return node_->children[0]; }
const Expr& Expr::right() const { return node_->children[1]; }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Expr::Kind::Variable:
      return x.name() == y.name();
    case Expr::Kind::Constant:
      return x.is_one() == y.is_one();
    case Expr::Kind::Negation:
      return x.child() == y.child();
    case Expr::Kind::Binary:
      return x.op() == y.op() && x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

std::string op_symbol(OpCode op) {
  if (op.family == Family::Join && op.index == 0) return "v";
  if (op.family == Family::Meet && op.index == 0) return "^";
  static constexpr std::array<char, 4> prefix = {'u', 'n', '>', '='};
  return std::string{prefix[static_cast<int>(op.family)], static_cast<char>('0' + op.index)};
}

OpCode parse_op_symbol(std::string_view token) {
  if (token == "v") return OpCode::join();
  if (token == "^") return OpCode::meet();
  if (token == "I") return OpCode::implication(1);
  if (token == "=") return OpCode::identity(5);
  if (token.size() == 2 && token[1] >= '0' && token[1] <= '5') {
    int i = token[1] - '0';
    switch (token[0]) {
      case 'u': return OpCode::join(i);
      case 'n': return OpCode::meet(i);
      case '>': return OpCode::implication(i);
      case '=': return OpCode::identity(i);
      default: break;
    }
  }
  throw std::invalid_argument("unknown operator '" + std::string(token) + "'");
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Offset of the next non-space character after `from`.
  std::size_t next_significant(std::size_t from) const {
    while (from < text_.size() && std::isspace(static_cast<unsigned char>(text_[from]))) ++from;
    return from;
  }

  static bool starts_operand(char c) {
    return (c >= 'a' && c <= 'z') || c == '(' || c == '-' || c == '0' || c == '1';
  }

  Expr parse_expr() {
    char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '-') {
      ++pos_;
      return Expr::negation(parse_expr());
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '1' ? Expr::one() : Expr::zero();
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Expr::variable(c);
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Expr left = parse_expr();
      OpCode op = parse_binop();
      Expr right = parse_expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw ParseError("unbalanced parenthesis opened at " + std::to_string(open), pos_);
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return Expr::binary(op, std::move(left), std::move(right));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  OpCode parse_binop() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '\0') throw ParseError("expected operator", pos_);
    if (c == 'v' || c == '^' || c == 'I') {
      ++pos_;
      return parse_op_symbol(std::string_view(&c, 1));
    }
    if (c == 'u' || c == 'n' || c == '>' || c == '=') {
      std::size_t d = next_significant(pos_ + 1);
      bool digit = d < text_.size() && text_[d] >= '0' && text_[d] <= '9';
      if (c == '=' && digit) {
        // "=0" could also be bare "=" followed by the constant 0.
        std::size_t after = next_significant(d + 1);
        if (after >= text_.size() || !starts_operand(text_[after])) digit = false;
      }
      if (!digit) {
        if (c == '=') {
          ++pos_;
          return OpCode::identity(5);
        }
        throw ParseError(std::string("operator '") + c + "' needs an index 0-5", at);
      }
      if (text_[d] > '5') throw ParseError(std::string("unknown operator '") + c + text_[d] + "'", at);
      pos_ = d + 1;
      const char sym[2] = {c, text_[d]};
      return parse_op_symbol(std::string_view(sym, 2));
    }
    throw ParseError(std::string("unknown operator '") + c + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
      out.push_back(e.name());
      break;
    case Expr::Kind::Constant:
      out.push_back(e.is_one() ? '1' : '0');
      break;
    case Expr::Kind::Negation:
      out.push_back('-');
      render_into(e.child(), out);
      break;
    case Expr::Kind::Binary:
      out.push_back('(');
      render_into(e.left(), out);
      out += op_symbol(e.op());
      render_into(e.right(), out);
      out.push_back(')');
      break;
  }
}

// Implication templates over the placeholders a and b, in primitive form.
const Expr& implication_template(int i) {
  static const std::array<Expr, 6> templates = {
      parse("(-avb)"),
      parse("(-av(a^b))"),
      parse("(bv(-b^-a))"),
      parse("(((-a^b)v(-a^-b))v(a^(-avb)))"),
      parse("(((b^-a)v(b^a))v(-b^(bv-a)))"),
      parse("(((a^b)v(-a^b))v(-a^-b))"),
  };
  return templates[i];
}

Expr instantiate(const Expr& tmpl, const Expr& a, const Expr& b) {
  switch (tmpl.kind()) {
    case Expr::Kind::Variable:
      return tmpl.name() == 'a' ? a : b;
    case Expr::Kind::Constant:
      return tmpl;
    case Expr::Kind::Negation:
      return negate_simplified(instantiate(tmpl.child(), a, b));
    case Expr::Kind::Binary:
      return Expr::binary(tmpl.op(), instantiate(tmpl.left(), a, b), instantiate(tmpl.right(), a, b));
  }
  return tmpl;
}

Expr expand_binary(OpCode op, const Expr& a, const Expr& b) {
  switch (op.family) {
    case Family::Join:
      if (op.index == 0) return Expr::binary(op, a, b);
      return instantiate(implication_template(op.index), negate_simplified(a), b);
    case Family::Meet:
      if (op.index == 0) return Expr::binary(op, a, b);
      return negate_simplified(instantiate(implication_template(op.index), a, negate_simplified(b)));
    case Family::Implication:
      return instantiate(implication_template(op.index), a, b);
    case Family::Identity:
      return Expr::binary(OpCode::meet(), instantiate(implication_template(op.index), a, b),
                          instantiate(implication_template(0), b, a));
  }
  return a;
}

void collect_variables(const Expr& e, std::vector<char>& out) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
      out.push_back(e.name());
      break;
    case Expr::Kind::Constant:
      break;
    case Expr::Kind::Negation:
      collect_variables(e.child(), out);
      break;
    case Expr::Kind::Binary:
      collect_variables(e.left(), out);
      collect_variables(e.right(), out);
      break;
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

Expr negate_simplified(const Expr& e) {
  if (e.kind() == Expr::Kind::Negation) return e.child();
  return Expr::negation(e);
}

Expr expand(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Negation:
      return negate_simplified(expand(e.child()));
    case Expr::Kind::Binary:
      return expand_binary(e.op(), expand(e.left()), expand(e.right()));
  }
  return e;
}

Expr substitute(const Expr& e, char name, const Expr& value) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
      return e.name() == name ? value : e;
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Negation:
      return Expr::negation(substitute(e.child(), name, value));
    case Expr::Kind::Binary:
      return Expr::binary(e.op(), substitute(e.left(), name, value), substitute(e.right(), name, value));
  }
  return e;
}

Expr with_op(const Expr& e, OpCode op) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Negation:
      return Expr::negation(with_op(e.child(), op));
    case Expr::Kind::Binary:
      return Expr::binary(op, with_op(e.left(), op), with_op(e.right(), op));
  }
  return e;
}

std::vector<char> variables(const Expr& e) {
  std::vector<char> out;
  collect_variables(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int variable_occurrences(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable: return 1;
    case Expr::Kind::Constant: return 0;
    case Expr::Kind::Negation: return variable_occurrences(e.child());
    case Expr::Kind::Binary: return variable_occurrences(e.left()) + variable_occurrences(e.right());
  }
  return 0;
}

int negation_count(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
    case Expr::Kind::Constant: return 0;
    case Expr::Kind::Negation: return 1 + negation_count(e.child());
    case Expr::Kind::Binary: return negation_count(e.left()) + negation_count(e.right());
  }
  return 0;
}

}  // namespace oml
