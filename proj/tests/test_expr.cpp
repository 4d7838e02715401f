#include "doctest.h"
#include "oml/expr.hpp"
#include "oml/freeoml.hpp"
#include "oml/models.hpp"
#include "support.hpp"

using namespace oml;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

bool primitive_only(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
    case Expr::Kind::Constant: return true;
    case Expr::Kind::Negation:
      return e.child().kind() != Expr::Kind::Negation && primitive_only(e.child());
    case Expr::Kind::Binary: return e.op().primitive() && primitive_only(e.left()) && primitive_only(e.right());
  }
  return false;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
  Expr e = parse("(av(-a^(avb)))");
  REQUIRE(e.kind() == Expr::Kind::Binary);
  CHECK(e.op() == OpCode::join());
  CHECK(e.left() == Expr::variable('a'));
  const Expr& m = e.right();
  CHECK(m.op() == OpCode::meet());
  CHECK(m.left() == Expr::negation(Expr::variable('a')));
  CHECK(m.right() == Expr::binary(OpCode::join(), Expr::variable('a'), Expr::variable('b')));

  CHECK(parse("-a") == Expr::negation(Expr::variable('a')));

  Expr t = parse("((aIb)=(((a^b)v(a^-b))v((-a^b)v(-a^-b))))");
  CHECK(t.op() == OpCode::identity(5));
  CHECK(t.left().op() == OpCode::implication(1));
}

TEST_CASE("render is the inverse of parse") {
  for (const char* s : {"a", "-a", "--a", "0", "1", "(avb)", "(a^-b)", "-(au3-(bn2c))", "((a>0b)=4(b=0a))",
                        "(((a^b)v(a^-b))v((-a^b)v(-a^-b)))"}) {
    CHECK(render(parse(s)) == s);
  }
  CHECK(render(parse(" ( a v\t-b ) ")) == "(av-b)");
  CHECK(render(parse("(a I b)")) == "(a>1b)");
  CHECK(render(parse("(a = b)")) == "(a=5b)");
}

TEST_CASE("equals sign followed by a digit") {
  CHECK(parse("(a=0b)").op() == OpCode::identity(0));
  CHECK(parse("(a=0)") == Expr::binary(OpCode::identity(5), Expr::variable('a'), Expr::zero()));
  CHECK(parse("(a = 1)").right() == Expr::one());
  CHECK(parse("(a=1-b)").op() == OpCode::identity(1));
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("(av") == 3);
  CHECK(error_offset("(a?b)") == 2);
  CHECK(error_offset("a b") == 2);
  CHECK(error_offset("(au7b)") == 2);
  CHECK(error_offset("(aub)") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("(avb") == 4);
  CHECK(error_offset("(avb))") == 5);
  CHECK(error_offset("A") == 0);
}

TEST_CASE("operator symbols round trip") {
  for (int c = 0; c < kOpCodeCount; ++c) {
    OpCode op = OpCode::from_code(c);
    CHECK(op.code() == c);
    CHECK(parse_op_symbol(op_symbol(op)) == op);
  }
  CHECK(parse_op_symbol("I") == OpCode::implication(1));
  CHECK_THROWS_AS(parse_op_symbol("u6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_op_symbol("x"), std::invalid_argument);
}

TEST_CASE("structural equality keeps double negation") {
  CHECK_FALSE(parse("--a") == parse("a"));
  CHECK(negate_simplified(parse("-a")) == parse("a"));
  CHECK(negate_simplified(parse("a")) == parse("-a"));
}

TEST_CASE("expand uses only primitives and preserves values") {
  std::vector<OrthoModel> models = {mo2(), o6(), boolean(3)};
  for (const auto& m : models) {
    ModelLattice l{&m};
    for (int c = 0; c < kOpCodeCount; ++c) {
      Expr e = Expr::binary(OpCode::from_code(c), Expr::variable('a'), Expr::variable('b'));
      Expr x = expand(e);
      CHECK(primitive_only(x));
      for (Element a = 0; a < m.size(); ++a) {
        for (Element b = 0; b < m.size(); ++b) {
          std::map<char, Element> env{{'a', a}, {'b', b}};
          CHECK(testing::eval(l, x, env, m.bottom(), m.top()) == testing::eval(l, e, env, m.bottom(), m.top()));
        }
      }
    }
  }
}

TEST_CASE("expand preserves random terms in the free OML") {
  std::mt19937 rng(7);
  for (int k = 0; k < 300; ++k) {
    Expr e = testing::random_expr(rng, 4, "ab");
    Expr x = expand(e);
    CHECK(primitive_only(x));
    CHECK(eval_f2(x) == eval_f2(e));
  }
}

TEST_CASE("operation identities") {
  // Implication 4 is the contrapositive of implication 3.
  CHECK(equal_oml(parse("(a>4b)"), parse("(-b>3-a)")));
  CHECK(equal_oml(parse("(a>2b)"), parse("(-b>1-a)")));
  CHECK(equal_oml(parse("(a=5b)"), parse("((a^b)v(-a^-b))")));
  CHECK(equal_oml(parse("(a=1b)"), parse("(-a=3-b)")));
  CHECK(equal_oml(parse("(a=2b)"), parse("(-a=4-b)")));
  for (int i = 0; i <= 5; ++i) {
    Expr a = Expr::variable('a'), b = Expr::variable('b');
    Expr join = Expr::binary(OpCode::join(i), a, b);
    Expr meet = Expr::binary(OpCode::meet(i), a, b);
    CHECK(equal_oml(join, Expr::binary(OpCode::implication(i), Expr::negation(a), b)));
    CHECK(equal_oml(meet, Expr::negation(Expr::binary(OpCode::implication(i), a, Expr::negation(b)))));
    CHECK(equal_oml(meet, Expr::negation(Expr::binary(OpCode::join(i), Expr::negation(a), Expr::negation(b)))));
  }
}

TEST_CASE("helpers") {
  Expr e = parse("((au1-b)^-(cva))");
  CHECK(variables(e) == std::vector<char>{'a', 'b', 'c'});
  CHECK(variable_occurrences(e) == 4);
  CHECK(negation_count(e) == 2);
  CHECK(render(with_op(e, OpCode::implication(3))) == "((a>3-b)>3-(c>3a))");
  CHECK(render(substitute(e, 'c', parse("-b"))) == "((au1-b)^-(-bva))");
  CHECK(render(substitute(e, 'z', parse("b"))) == render(e));
}
