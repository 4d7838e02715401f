#include "oml/checker.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>

#include "oml/ops.hpp"

namespace oml {

namespace {

void collect(const Atom& a, std::vector<char>& out) {
  for (const Expr* e : {&a.lhs, &a.rhs}) {
    auto v = variables(*e);
    out.insert(out.end(), v.begin(), v.end());
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Expr parse_at(std::string_view text, std::size_t base) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    std::string what = e.what();
    what = what.substr(0, what.rfind(" at offset"));
    throw ParseError(what, base + e.offset());
  }
}

Atom parse_atom(std::string_view text, std::size_t base) {
  std::string t = trim(text);
  if (t.size() == 3 && t[1] == 'C' && std::islower(static_cast<unsigned char>(t[0])) &&
      std::islower(static_cast<unsigned char>(t[2]))) {
    return Atom::commutes(t[0], t[2]);
  }
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth != 0) continue;
    if (c == '=' || c == '<') {
      std::size_t rhs_at = i + 1;
      if (c == '<' && rhs_at < text.size() && text[rhs_at] == '=') ++rhs_at;
      Expr l = parse_at(text.substr(0, i), base);
      Expr r = parse_at(text.substr(rhs_at), base + rhs_at);
      return c == '=' ? Atom::equal(l, r) : Atom::leq(l, r);
    }
  }
  throw ParseError("expected '=', '<' or xCy in condition atom", base);
}

std::string render_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Commutes:
      return render(a.lhs) + "C" + render(a.rhs);
    case Atom::Kind::Leq:
      return render(a.lhs) + " < " + render(a.rhs);
    case Atom::Kind::Equal:
      break;
  }
  return render(a.lhs) + " = " + render(a.rhs);
}

}  // namespace

Condition make_condition(std::vector<Atom> hypotheses, Atom conclusion) {
  Condition c{{}, std::move(hypotheses), std::move(conclusion)};
  for (const auto& h : c.hypotheses) collect(h, c.variables);
  collect(c.conclusion, c.variables);
  std::sort(c.variables.begin(), c.variables.end());
  c.variables.erase(std::unique(c.variables.begin(), c.variables.end()), c.variables.end());
  return c;
}

Condition make_equation(const Expr& lhs, const Expr& rhs) { return make_condition({}, Atom::equal(lhs, rhs)); }

Condition parse_condition(std::string_view text) {
  std::size_t arrow = text.find("=>");
  std::vector<Atom> hyps;
  std::size_t concl_at = 0;
  if (arrow != std::string_view::npos) {
    std::string_view hyp_text = text.substr(0, arrow);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= hyp_text.size(); ++i) {
      if (i == hyp_text.size() || hyp_text[i] == '&') {
        hyps.push_back(parse_atom(hyp_text.substr(start, i - start), start));
        start = i + 1;
      }
    }
    concl_at = arrow + 2;
  }
  std::string_view rest = text.substr(concl_at);
  if (std::find(rest.begin(), rest.end(), '&') != rest.end() || rest.find("=>") != std::string_view::npos) {
    throw ParseError("conclusion must be a single atom", concl_at);
  }
  return make_condition(std::move(hyps), parse_atom(rest, concl_at));
}

std::string render_condition(const Condition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.hypotheses.size(); ++i) {
    out += render_atom(c.hypotheses[i]);
    out += i + 1 < c.hypotheses.size() ? " & " : " => ";
  }
  return out + render_atom(c.conclusion);
}

std::array<bool, 3> commutation_forms(const OrthoModel& m, Element x, Element y) {
  Element xc = m.complement(x), yc = m.complement(y);
  Element four = m.join(m.join(m.meet(x, y), m.meet(x, yc)), m.join(m.meet(xc, y), m.meet(xc, yc)));
  return {four == m.top(), m.leq(m.meet(x, m.join(xc, y)), y), x == m.join(m.meet(x, y), m.meet(x, yc))};
}

bool commutes(const OrthoModel& m, Element x, Element y) {
#ifndef NDEBUG
  if (m.is_orthomodular()) {
    auto f = commutation_forms(m, x, y);
    if (f[0] != f[2] || f[1] != f[2]) {
      throw std::logic_error(m.name() + ": commutation forms disagree at " + m.element_name(x) + ", " +
                             m.element_name(y));
    }
  }
#endif
  return x == m.join(m.meet(x, y), m.meet(x, m.complement(y)));
}

ModelOps::ModelOps(const OrthoModel& m) : model_(&m) {
  const int n = m.size();
  const ModelLattice lattice{&m};
  neg_.resize(n);
  for (int x = 0; x < n; ++x) neg_[x] = m.complement(static_cast<Element>(x));
  for (int c = 0; c < kOpCodeCount; ++c) {
    OpCode op = OpCode::from_code(c);
    tables_[c].resize(n * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        tables_[c][x * n + y] = apply_op(lattice, op, static_cast<Element>(x), static_cast<Element>(y));
      }
    }
  }
}

namespace {

// Postfix program for one expression over variable slots.
struct Program {
  enum class Code : std::uint8_t { Var, Const, Neg, Bin };
  struct Instr {
    Code code;
    std::uint16_t arg;  // slot, element or op code
  };
  std::vector<Instr> instrs;
  int depth = 0;

  Element run(const ModelOps& ops, const Element* vals, Element* stack) const {
    int sp = 0;
    for (const Instr& in : instrs) {
      switch (in.code) {
        case Code::Var: stack[sp++] = vals[in.arg]; break;
        case Code::Const: stack[sp++] = in.arg; break;
        case Code::Neg: stack[sp - 1] = ops.neg(stack[sp - 1]); break;
        case Code::Bin:
          --sp;
          stack[sp - 1] = ops.apply(OpCode::from_code(in.arg), stack[sp - 1], stack[sp]);
          break;
      }
    }
    return stack[0];
  }
};

int compile_into(const Expr& e, const std::vector<char>& vars, const OrthoModel& m, Program& p, int height) {
  switch (e.kind()) {
    case Expr::Kind::Variable: {
      auto it = std::find(vars.begin(), vars.end(), e.name());
      if (it == vars.end()) {
        throw std::invalid_argument(std::string("undeclared variable '") + e.name() + "'");
      }
      p.instrs.push_back({Program::Code::Var, static_cast<std::uint16_t>(it - vars.begin())});
      return height + 1;
    }
    case Expr::Kind::Constant:
      p.instrs.push_back({Program::Code::Const, e.is_one() ? m.top() : m.bottom()});
      return height + 1;
    case Expr::Kind::Negation: {
      int h = compile_into(e.child(), vars, m, p, height);
      p.instrs.push_back({Program::Code::Neg, 0});
      return h;
    }
    case Expr::Kind::Binary: {
      int hl = compile_into(e.left(), vars, m, p, height);
      int hr = compile_into(e.right(), vars, m, p, height + 1);
      p.instrs.push_back({Program::Code::Bin, static_cast<std::uint16_t>(e.op().code())});
      return std::max(hl, hr);
    }
  }
  return height;
}

Program compile(const Expr& e, const std::vector<char>& vars, const OrthoModel& m) {
  Program p;
  p.depth = compile_into(e, vars, m, p, 0);
  return p;
}

struct CompiledAtom {
  Atom::Kind kind;
  Program lhs, rhs;
};

struct CompiledCondition {
  std::vector<CompiledAtom> hyps;
  CompiledAtom concl;
  int depth = 1;
  int vars = 0;
  std::uint64_t valuations = 1;

  CompiledCondition(const ModelOps& ops, const Condition& c) : concl(compile_atom(ops, c, c.conclusion)) {
    for (const auto& h : c.hypotheses) hyps.push_back(compile_atom(ops, c, h));
    for (const auto* a : all()) depth = std::max({depth, a->lhs.depth, a->rhs.depth});
    vars = static_cast<int>(c.variables.size());
    const auto n = static_cast<std::uint64_t>(ops.size());
    for (int i = 0; i < vars; ++i) {
      if (valuations > std::numeric_limits<std::uint64_t>::max() / n) {
        throw std::invalid_argument("valuation space too large");
      }
      valuations *= n;
    }
  }

  std::vector<const CompiledAtom*> all() const {
    std::vector<const CompiledAtom*> out;
    for (const auto& h : hyps) out.push_back(&h);
    out.push_back(&concl);
    return out;
  }

  static CompiledAtom compile_atom(const ModelOps& ops, const Condition& c, const Atom& a) {
    return {a.kind, compile(a.lhs, c.variables, ops.model()), compile(a.rhs, c.variables, ops.model())};
  }

  bool holds(const ModelOps& ops, const CompiledAtom& a, const Element* vals, Element* stack) const {
    Element l = a.lhs.run(ops, vals, stack);
    Element r = a.rhs.run(ops, vals, stack);
    switch (a.kind) {
      case Atom::Kind::Equal: return l == r;
      case Atom::Kind::Leq: return ops.model().leq(l, r);
      case Atom::Kind::Commutes: return commutes(ops.model(), l, r);
    }
    return false;
  }

  // True when the valuation with index t violates the condition.
  bool fails(const ModelOps& ops, std::uint64_t t, std::vector<Element>& vals, std::vector<Element>& stack) const {
    const auto n = static_cast<std::uint64_t>(ops.size());
    for (int i = vars - 1; i >= 0; --i) {
      vals[i] = static_cast<Element>(t % n);
      t /= n;
    }
    for (const auto& h : hyps) {
      if (!holds(ops, h, vals.data(), stack.data())) return false;
    }
    return !holds(ops, concl, vals.data(), stack.data());
  }

  std::vector<Element> valuation(const ModelOps& ops, std::uint64_t t) const {
    std::vector<Element> vals(vars);
    const auto n = static_cast<std::uint64_t>(ops.size());
    for (int i = vars - 1; i >= 0; --i) {
      vals[i] = static_cast<Element>(t % n);
      t /= n;
    }
    return vals;
  }
};

CheckResult result_from(const ModelOps& ops, const CompiledCondition& cc, std::uint64_t first_fail) {
  CheckResult r;
  if (first_fail < cc.valuations) {
    r.pass = false;
    r.counterexample = cc.valuation(ops, first_fail);
  }
  return r;
}

void check_distrib_args(int n) {
  if (n <= 0) throw std::invalid_argument("empty model");
}

bool distrib_holds(const ModelOps& ops, const DistribTuple& t, bool dual) {
  const int n = ops.size();
  auto outer = [&](int i) { return dual ? OpCode::meet(i) : OpCode::join(i); };
  auto inner = [&](int i) { return dual ? OpCode::join(i) : OpCode::meet(i); };
  const Element* oi = ops.table(outer(t[0]));
  const Element* ij = ops.table(inner(t[1]));
  const Element* ok = ops.table(outer(t[2]));
  const Element* il = ops.table(inner(t[3]));
  const Element* om = ops.table(outer(t[4]));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Element ab = ok[a * n + b];
      for (int c = 0; c < n; ++c) {
        Element lhs = oi[a * n + ij[b * n + c]];
        Element rhs = il[ab * n + om[a * n + c]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

DistribTuple tuple_of(int code) {
  DistribTuple t{};
  for (int p = 4; p >= 0; --p) {
    t[p] = code % 6;
    code /= 6;
  }
  return t;
}

constexpr int kDistribTuples = 6 * 6 * 6 * 6 * 6;

}  // namespace

CheckResult check_horn(const ModelOps& ops, const Condition& c) {
  const CompiledCondition cc(ops, c);
  std::atomic<std::uint64_t> first{cc.valuations};
  const auto total = static_cast<std::int64_t>(cc.valuations);
#pragma omp parallel
  {
    std::vector<Element> vals(cc.vars), stack(cc.depth + 1);
#pragma omp for schedule(dynamic, 512)
    for (std::int64_t t = 0; t < total; ++t) {
      auto u = static_cast<std::uint64_t>(t);
      if (u >= first.load(std::memory_order_relaxed)) continue;
      if (cc.fails(ops, u, vals, stack)) {
        std::uint64_t cur = first.load(std::memory_order_relaxed);
        while (u < cur && !first.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
        }
      }
    }
  }
  return result_from(ops, cc, first.load());
}

CheckResult check_horn(const OrthoModel& m, const Condition& c) { return check_horn(ModelOps(m), c); }

CheckResult check_equation(const OrthoModel& m, const Condition& eq) {
  if (!eq.hypotheses.empty()) throw std::invalid_argument("check_equation: condition has hypotheses");
  return check_horn(m, eq);
}

std::string format_valuation(const OrthoModel& m, const Condition& c, const std::vector<Element>& valuation) {
  std::string out;
  for (std::size_t i = 0; i < c.variables.size() && i < valuation.size(); ++i) {
    if (i) out += ' ';
    out += c.variables[i];
    out += '=';
    out += m.element_name(valuation[i]);
  }
  return out;
}

std::vector<DistribTuple> scan_mixed_distributivity(const OrthoModel& m, bool dual) {
  check_distrib_args(m.size());
  const ModelOps ops(m);
  std::vector<char> pass(kDistribTuples, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int code = 0; code < kDistribTuples; ++code) pass[code] = distrib_holds(ops, tuple_of(code), dual);
  std::vector<DistribTuple> out;
  for (int code = 0; code < kDistribTuples; ++code) {
    if (pass[code]) out.push_back(tuple_of(code));
  }
  return out;
}

namespace serial {

CheckResult check_horn(const ModelOps& ops, const Condition& c) {
  const CompiledCondition cc(ops, c);
  std::vector<Element> vals(cc.vars), stack(cc.depth + 1);
  for (std::uint64_t t = 0; t < cc.valuations; ++t) {
    if (cc.fails(ops, t, vals, stack)) return result_from(ops, cc, t);
  }
  return {};
}

std::vector<DistribTuple> scan_mixed_distributivity(const OrthoModel& m, bool dual) {
  check_distrib_args(m.size());
  const ModelOps ops(m);
  std::vector<DistribTuple> out;
  for (int code = 0; code < kDistribTuples; ++code) {
    if (distrib_holds(ops, tuple_of(code), dual)) out.push_back(tuple_of(code));
  }
  return out;
}

}  // namespace serial

}  // namespace oml
