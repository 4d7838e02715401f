#include "oml/freeoml.hpp"

#include <algorithm>
#include <map>

#include "oml/ops.hpp"

namespace oml {

namespace {

constexpr Mo2 kMo2Complement[kMo2Size] = {Mo2::Top, Mo2::XPrime, Mo2::X, Mo2::YPrime, Mo2::Y, Mo2::Bottom};

}  // namespace

Mo2 mo2_complement(Mo2 p) { return kMo2Complement[static_cast<int>(p)]; }

Mo2 mo2_join(Mo2 p, Mo2 q) {
  if (p == q || q == Mo2::Bottom) return p;
  if (p == Mo2::Bottom) return q;
  // Distinct elements of the middle layer, or one of them is top.
  return Mo2::Top;
}

Mo2 mo2_meet(Mo2 p, Mo2 q) { return mo2_complement(mo2_join(mo2_complement(p), mo2_complement(q))); }

const char* mo2_name(Mo2 p) {
  static constexpr const char* names[kMo2Size] = {"0", "x", "x'", "y", "y'", "1"};
  return names[static_cast<int>(p)];
}

F2Element F2Lattice::neg(F2Element x) const {
  return {static_cast<std::uint8_t>(~x.boolean_part & 0xF), mo2_complement(x.mo2_part)};
}

F2Element F2Lattice::join(F2Element x, F2Element y) const {
  return {static_cast<std::uint8_t>(x.boolean_part | y.boolean_part), mo2_join(x.mo2_part, y.mo2_part)};
}

F2Element F2Lattice::meet(F2Element x, F2Element y) const {
  return {static_cast<std::uint8_t>(x.boolean_part & y.boolean_part), mo2_meet(x.mo2_part, y.mo2_part)};
}

F2Element F2Lattice::generator_a() { return {kAtomAB | kAtomABPrime, Mo2::X}; }
F2Element F2Lattice::generator_b() { return {kAtomAB | kAtomAPrimeB, Mo2::Y}; }
F2Element F2Lattice::bottom() { return {0, Mo2::Bottom}; }
F2Element F2Lattice::top() { return {0xF, Mo2::Top}; }

ThirdVariableError::ThirdVariableError(char name)
    : std::invalid_argument(std::string("variable '") + name +
                            "' is not a generator of the two-variable free OML (use a and b)"),
      name_(name) {}

F2Element eval_f2(const Expr& e) {
  static const F2Lattice lattice;
  switch (e.kind()) {
    case Expr::Kind::Variable:
      if (e.name() == 'a') return F2Lattice::generator_a();
      if (e.name() == 'b') return F2Lattice::generator_b();
      throw ThirdVariableError(e.name());
    case Expr::Kind::Constant:
      return e.is_one() ? F2Lattice::top() : F2Lattice::bottom();
    case Expr::Kind::Negation:
      return lattice.neg(eval_f2(e.child()));
    case Expr::Kind::Binary:
      return apply_op(lattice, e.op(), eval_f2(e.left()), eval_f2(e.right()));
  }
  return F2Lattice::bottom();
}

std::optional<int> beran_number(F2Element e) {
  // Block of 16 per MO2 part, position within the block per Boolean part.
  static constexpr int block[kMo2Size] = {0, 1, 4, 2, 3, 5};  // 0, x, x', y, y', 1
  int pos = 0;
  switch (e.boolean_part) {
    case 0x0: pos = 1; break;
    case 0x3: pos = 6; break;   // a
    case 0x5: pos = 7; break;   // b
    case 0x9: pos = 8; break;   // (a^b) v (a'^b')
    case 0x6: pos = 9; break;   // (a^b') v (a'^b)
    case 0xA: pos = 10; break;  // b'
    case 0xC: pos = 11; break;  // a'
    case 0xD: pos = 14; break;  // a' v b
    case 0xF: pos = 16; break;
    default: return std::nullopt;
  }
  return 16 * block[static_cast<int>(e.mo2_part)] + pos;
}

namespace {

// Lexicographically least text for each element at one (occurrences,
// negations) level. All texts at a level have the same length, so the
// least concatenation takes the least left part and then the least right.
using Level = std::array<std::string, kF2Size>;

struct TextSearch {
  // plain[v][n]: top symbol is not a negation; any[v][n]: either.
  std::vector<std::vector<Level>> plain;
  std::vector<std::vector<Level>> any;

  void grow(int v) {
    const F2Lattice lattice;
    plain.resize(v + 1);
    any.resize(v + 1);
    plain[v].assign(2 * v, Level{});
    any[v].assign(2 * v, Level{});
    if (v == 1) {
      plain[1][0][F2Lattice::generator_a().ordinal()] = "a";
      plain[1][0][F2Lattice::generator_b().ordinal()] = "b";
    } else {
      for (int left_v = 1; left_v < v; ++left_v) {
        int right_v = v - left_v;
        for (int nl = 0; nl < 2 * left_v; ++nl) {
          for (int nr = 0; nr < 2 * right_v && nl + nr < 2 * v; ++nr) {
            Level& out = plain[v][nl + nr];
            for (int x = 0; x < kF2Size; ++x) {
              const std::string& lt = any[left_v][nl][x];
              if (lt.empty()) continue;
              for (int y = 0; y < kF2Size; ++y) {
                const std::string& rt = any[right_v][nr][y];
                if (rt.empty()) continue;
                for (char op : {'v', '^'}) {
                  F2Element ex = F2Element::from_ordinal(x), ey = F2Element::from_ordinal(y);
                  int r = (op == 'v' ? lattice.join(ex, ey) : lattice.meet(ex, ey)).ordinal();
                  std::string cand;
                  cand.reserve(lt.size() + rt.size() + 3);
                  cand += '(';
                  cand += lt;
                  cand += op;
                  cand += rt;
                  cand += ')';
                  if (out[r].empty() || cand < out[r]) out[r] = std::move(cand);
                }
              }
            }
          }
        }
      }
    }
    for (int n = 0; n < 2 * v; ++n) {
      any[v][n] = plain[v][n];
      if (n == 0) continue;
      for (int x = 0; x < kF2Size; ++x) {
        const std::string& t = plain[v][n - 1][x];
        if (t.empty()) continue;
        int r = lattice.neg(F2Element::from_ordinal(x)).ordinal();
        std::string cand = "-" + t;
        if (any[v][n][r].empty() || cand < any[v][n][r]) any[v][n][r] = std::move(cand);
      }
    }
  }
};

std::vector<F2Element> closure_of_generators() {
  const F2Lattice lattice;
  std::vector<F2Element> found = {F2Lattice::generator_a(), F2Lattice::generator_b()};
  std::array<bool, kF2Size> seen{};
  for (auto e : found) seen[e.ordinal()] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto add = [&](F2Element e) {
        if (!seen[e.ordinal()]) {
          seen[e.ordinal()] = true;
          found.push_back(e);
          changed = true;
        }
      };
      add(lattice.neg(found[i]));
      for (std::size_t j = 0; j < count; ++j) add(lattice.join(found[i], found[j]));
    }
  }
  return found;
}

}  // namespace

std::vector<CanonicalForm> build_canonical_table() {
  std::vector<F2Element> closure = closure_of_generators();
  if (closure.size() != kF2Size) {
    throw std::logic_error("free OML closure has " + std::to_string(closure.size()) +
                           " elements, expected 96");
  }
  std::sort(closure.begin(), closure.end(),
            [](F2Element x, F2Element y) { return x.ordinal() < y.ordinal(); });

  std::array<std::string, kF2Size> text;
  text[F2Lattice::bottom().ordinal()] = "0";
  text[F2Lattice::top().ordinal()] = "1";
  int missing = kF2Size - 2;
  TextSearch search;
  for (int v = 1; missing > 0; ++v) {
    if (v > 12) throw std::logic_error("minimal text search did not cover all 96 elements");
    search.grow(v);
    for (int n = 0; n < 2 * v; ++n) {
      for (int x = 0; x < kF2Size; ++x) {
        if (text[x].empty() && !search.any[v][n][x].empty()) {
          text[x] = search.any[v][n][x];
          --missing;
        }
      }
    }
  }

  std::vector<CanonicalForm> table;
  table.reserve(kF2Size);
  for (F2Element e : closure) {
    table.push_back({e.ordinal() + 1, e, text[e.ordinal()], beran_number(e)});
  }
  return table;
}

std::span<const CanonicalForm> canonical_table() {
  static const std::vector<CanonicalForm> table = build_canonical_table();
  return table;
}

const CanonicalForm& canonical_form(F2Element e) { return canonical_table()[e.ordinal()]; }

const CanonicalForm& reduce(const Expr& e) { return canonical_form(eval_f2(e)); }

bool equal_oml(const Expr& lhs, const Expr& rhs) { return eval_f2(lhs) == eval_f2(rhs); }

namespace {

const std::array<std::optional<F2Element>, 16>& classical_by_boolean_part() {
  static const auto table = [] {
    std::array<std::optional<F2Element>, 16> out;
    // 0, 1, the variables and their negations, classical implication in its
    // four argument patterns and their negations, classical identity and its
    // negation.
    for (const char* text : {"0", "1", "a", "b", "-a", "-b", "(-avb)", "(-bva)", "(avb)", "(-av-b)",
                             "(a^b)", "(a^-b)", "(-a^b)", "(-a^-b)", "(a=0b)", "-(a=0b)"}) {
      F2Element e = eval_f2(parse(text));
      if (out[e.boolean_part]) throw std::logic_error("classical expressions share a Boolean part");
      out[e.boolean_part] = e;
    }
    return out;
  }();
  return table;
}

}  // namespace

F2Element classical_counterpart(F2Element e) { return *classical_by_boolean_part()[e.boolean_part]; }

bool is_classical(F2Element e) { return classical_counterpart(e) == e; }

const F2Tables& f2_tables() {
  static const auto tables = [] {
    auto t = std::make_unique<F2Tables>();
    const F2Lattice lattice;
    for (int x = 0; x < kF2Size; ++x) {
      t->neg[x] = static_cast<std::uint8_t>(lattice.neg(F2Element::from_ordinal(x)).ordinal());
    }
    for (int c = 0; c < kOpCodeCount; ++c) {
      OpCode op = OpCode::from_code(c);
      for (int x = 0; x < kF2Size; ++x) {
        for (int y = 0; y < kF2Size; ++y) {
          t->binary[c][x * kF2Size + y] = static_cast<std::uint8_t>(
              apply_op(lattice, op, F2Element::from_ordinal(x), F2Element::from_ordinal(y)).ordinal());
        }
      }
    }
    return t;
  }();
  return *tables;
}

}  // namespace oml
