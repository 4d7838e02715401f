#include <algorithm>
#include <set>

#include "doctest.h"
#include "oml/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oml;

namespace {

std::vector<OpCode> family(OpCode (*make)(int), int lo, int hi) {
  std::vector<OpCode> out;
  for (int i = lo; i <= hi; ++i) out.push_back(make(i));
  return out;
}

OpCode impl(int i) { return OpCode::implication(i); }
OpCode join(int i) { return OpCode::join(i); }
OpCode meet(int i) { return OpCode::meet(i); }

std::vector<std::string> texts(const std::vector<Expr>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(render(e));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("closed-form count") {
  CHECK(count_expressions(2, 0) == 4);
  CHECK(count_expressions(7, 0) == 16896);
  CHECK(count_expressions(5, 2) == 16128);
  CHECK_THROWS_AS(count_expressions(1, 0), std::out_of_range);
  CHECK_THROWS_AS(count_expressions(3, 6), std::out_of_range);
  CHECK_THROWS_AS(count_expressions(3, -1), std::out_of_range);
}

TEST_CASE("tiny space is listed in order") {
  SearchSpec spec;
  spec.v = 2;
  spec.opset = {OpCode::join()};
  CHECK(texts([&] {
          std::vector<Expr> es;
          for (auto& r : enumerate_all(spec)) es.push_back(r.expr);
          return es;
        }()) == std::vector<std::string>{"(ava)", "(avb)", "(bva)", "(bvb)"});
}

TEST_CASE("stream cardinality matches the formula") {
  for (int v = 2; v <= 5; ++v) {
    for (int n = 0; n <= 4 && n <= 2 * v - 1; ++n) {
      SearchSpec spec;
      spec.v = v;
      spec.n = n;
      spec.opset = {OpCode::implication(1)};
      std::uint64_t seen = 0;
      std::set<std::string> distinct;
      enumerate(spec, [&](const Enumerated& e) {
        ++seen;
        CHECK(variable_occurrences(e.expr) == v);
        CHECK(negation_count(e.expr) == n);
        if (v <= 4) distinct.insert(render(e.expr));
      });
      CHECK(seen == count_expressions(v, n));
      if (v <= 4) CHECK(distinct.size() == seen);
    }
  }
}

TEST_CASE("no double negations") {
  SearchSpec spec;
  spec.v = 3;
  spec.n = 5;
  spec.opset = {OpCode::join(1)};
  enumerate(spec, [&](const Enumerated& e) { CHECK(render(e.expr).find("--") == std::string::npos); });
}

TEST_CASE("parallel and serial orders agree") {
  SearchSpec spec;
  spec.v = 5;
  spec.n = 2;
  spec.opset = family(impl, 1, 5);
  std::vector<std::string> par, ser;
  enumerate(spec, [&](const Enumerated& e) { par.push_back(render(e.expr)); });
  serial::enumerate(spec, [&](const Enumerated& e) { ser.push_back(render(e.expr)); });
  CHECK(par == ser);
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  std::vector<std::string> four;
  enumerate(spec, [&](const Enumerated& e) { four.push_back(render(e.expr)); });
  omp_set_num_threads(saved);
  CHECK(four == ser);
#endif
}

TEST_CASE("forms are free OML values under each op") {
  SearchSpec spec;
  spec.v = 3;
  spec.n = 1;
  spec.opset = {OpCode::implication(0), OpCode::join(3), OpCode::identity(2)};
  for (const auto& r : enumerate_all(spec)) {
    REQUIRE(r.forms.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) CHECK(r.forms[k] == eval_f2(with_op(r.expr, spec.opset[k])));
  }
}

TEST_CASE("target and common filters") {
  SearchSpec spec;
  spec.v = 7;
  spec.opset = family(impl, 1, 5);
  spec.target = parse("(avb)");
  auto hits = enumerate_all(spec);
  CHECK(hits.size() == 8);
  for (const auto& h : hits) {
    for (const auto& f : h.forms) CHECK(f == eval_f2(parse("(avb)")));
  }
  spec.target.reset();
  spec.v = 3;
  spec.common_only = true;
  for (const auto& h : enumerate_all(spec)) {
    for (const auto& f : h.forms) CHECK(f == h.forms[0]);
  }
}

TEST_CASE("smallest disjunctions and conjunctions") {
  auto check = [](const char* target, std::vector<OpCode> ops, int v, int n, std::size_t collapsed) {
    MinimalResult r = find_minimal(parse(target), {ops});
    CHECK(r.v == v);
    CHECK(r.n == n);
    CHECK(r.collapsed.size() == collapsed);
    CHECK(r.raw.size() == 2 * collapsed);
    return texts(r.raw);
  };
  check("(avb)", family(impl, 1, 5), 5, 2, 1);
  auto joins = check("(avb)", family(join, 1, 5), 5, 3, 2);
  CHECK(contains(joins, "(-((au1-b)u1(-bu1a))u1a)"));
  check("(a^b)", family(impl, 1, 5), 5, 4, 7);
  check("(avb)", family(meet, 1, 5), 5, 5, 2);
}

TEST_CASE("smallest forms over classical and quantum ops") {
  auto check = [](const char* target, std::vector<OpCode> ops, int v, int n, std::size_t collapsed,
                  O6Filter filter = O6Filter::None) {
    MinimalResult r = find_minimal(parse(target), {ops, 7, filter});
    CHECK(r.v == v);
    CHECK(r.n == n);
    CHECK(r.collapsed.size() == collapsed);
    return texts(r.raw);
  };
  auto c1 = check("(avb)", family(impl, 0, 5), 6, 2, 1);
  CHECK(contains(c1, "((b>0a)>0(((a>0-b)>0-b)>0a))"));
  auto s = check("(avb)", family(join, 0, 5), 6, 2, 16);
  CHECK(contains(s, "(bv(av-((avb)v(-bva))))"));
  auto c3 = check("(avb)", family(meet, 0, 5), 6, 6, 8);
  CHECK(contains(c3, "-(-(-a^b)^(-a^-(b^-(b^a))))"));
  auto c4 = check("(a^b)", family(impl, 0, 5), 6, 4, 23);
  CHECK(contains(c4, "-(a>0-((a>0((a>0b)>0-b))>0-a))"));
  check("(a^b)", family(join, 0, 5), 6, 6, 8);
  auto c6 = check("(a^b)", family(meet, 0, 5), 6, 2, 16);
  CHECK(contains(c6, "(b^(a^-((a^b)^(-b^a))))"));

  check("(a^b)", family(impl, 0, 5), 6, 4, 18, O6Filter::Pass);
  auto p3 = check("(avb)", family(meet, 0, 5), 6, 6, 4, O6Filter::Pass);
  CHECK(contains(p3, "-(-b^(-a^-((-a^b)^(b^-a))))"));
  auto p5 = check("(a^b)", family(join, 0, 5), 6, 6, 4, O6Filter::Pass);
  CHECK(contains(p5, "-(-bv(-av-((-avb)v(bv-a))))"));
}

TEST_CASE("O6-failing smallest samples with the classical join") {
  // Every smallest (sample) and (corr6) form passes O6 at i=0.
  for (const char* target : {"(avb)", "(a^b)"}) {
    SearchSpec spec;
    spec.v = 6;
    spec.n = 2;
    spec.opset = family(target[2] == 'v' ? join : meet, 0, 5);
    spec.target = parse(target);
    std::size_t all = enumerate_all(spec).size();
    spec.o6_filter = O6Filter::Fail;
    CHECK(all == 32);
    CHECK(enumerate_all(spec).empty());
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(find_minimal(parse("(avc)"), {family(impl, 1, 5)}), ThirdVariableError);
  CHECK_THROWS_AS(find_minimal(parse("(a>1b)"), {{OpCode::join(0)}, 2}), SearchLimitError);
  SearchSpec big;
  big.v = 9;
  big.n = 4;
  big.opset = {OpCode::join()};
  big.ceiling = 1000;
  CHECK_THROWS_AS(enumerate(big, [](const Enumerated&) {}), SearchLimitError);
  SearchSpec no_target;
  no_target.opset = {OpCode::join()};
  no_target.o6_filter = O6Filter::Pass;
  CHECK_THROWS_AS(enumerate_all(no_target), std::invalid_argument);
}

TEST_CASE("swap_ab is an involution") {
  Expr e = parse("(-(a>3b)u2(bv-a))");
  CHECK(render(swap_ab(e)) == "(-(b>3a)u2(av-b))");
  CHECK(swap_ab(swap_ab(e)) == e);
}
