#include "oml/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "oml/checker.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oml {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// Polish-notation tree shape: bit p set means a binary node at position p.
struct Shape {
  std::uint32_t binary = 0;
  int length = 0;
};

std::vector<Shape> shapes(int v) {
  std::vector<Shape> out;
  const int length = 2 * v - 1;
  // need = number of subtrees still to be completed.
  auto rec = [&](auto&& self, int pos, int need, int binaries, std::uint32_t mask) -> void {
    if (pos == length) {
      if (need == 0) out.push_back({mask, length});
      return;
    }
    if (need == 0) return;
    if (binaries < v - 1) self(self, pos + 1, need + 1, binaries + 1, mask | (1u << pos));
    self(self, pos + 1, need - 1, binaries, mask);
  };
  rec(rec, 0, 1, 0, 0);
  return out;
}

// Values of the subtree at `pos` for every assignment of its leaves, first
// leaf most significant, a = 0. Returns the position after the subtree.
int eval_subtree(const Shape& s, std::uint32_t negs, int pos, const std::uint8_t* table, const F2Tables& t,
                 std::vector<std::uint8_t>& out, int& leaves) {
  static constexpr std::uint8_t a = F2Element{kAtomAB | kAtomABPrime, Mo2::X}.ordinal();
  static constexpr std::uint8_t b = F2Element{kAtomAB | kAtomAPrimeB, Mo2::Y}.ordinal();
  int next;
  if (s.binary & (1u << pos)) {
    std::vector<std::uint8_t> left, right;
    int ll = 0, rl = 0;
    int mid = eval_subtree(s, negs, pos + 1, table, t, left, ll);
    next = eval_subtree(s, negs, mid, table, t, right, rl);
    leaves = ll + rl;
    out.resize(left.size() * right.size());
    std::size_t k = 0;
    for (std::uint8_t x : left) {
      const std::uint8_t* row = table + x * kF2Size;
      for (std::uint8_t y : right) out[k++] = row[y];
    }
  } else {
    out = {a, b};
    leaves = 1;
    next = pos + 1;
  }
  if (negs & (1u << pos)) {
    for (auto& x : out) x = t.neg[x];
  }
  return next;
}

std::vector<std::uint8_t> eval_all(const Shape& s, std::uint32_t negs, OpCode op) {
  const F2Tables& t = f2_tables();
  std::vector<std::uint8_t> out;
  int leaves = 0;
  eval_subtree(s, negs, 0, t.binary[op.code()].data(), t, out, leaves);
  return out;
}

Expr build_expr(const Shape& s, std::uint32_t negs, unsigned letters, int v, OpCode op) {
  int leaf = 0;
  auto rec = [&](auto&& self, int& pos) -> Expr {
    int here = pos++;
    Expr e = Expr::zero();
    if (s.binary & (1u << here)) {
      Expr l = self(self, pos);
      Expr r = self(self, pos);
      e = Expr::binary(op, std::move(l), std::move(r));
    } else {
      bool is_b = letters & (1u << (v - 1 - leaf));
      ++leaf;
      e = Expr::variable(is_b ? 'b' : 'a');
    }
    return (negs & (1u << here)) ? Expr::negation(std::move(e)) : e;
  };
  int pos = 0;
  return rec(rec, pos);
}

void check_spec(const SearchSpec& spec) {
  if (spec.opset.empty()) throw std::invalid_argument("search needs a nonempty opset");
  if (spec.v > 16) throw SearchLimitError("search supports at most 16 variable occurrences");
  std::uint64_t total = count_expressions(spec.v, spec.n);
  if (total > spec.ceiling) {
    throw SearchLimitError("search space of " + std::to_string(total) + " expressions exceeds the ceiling of " +
                           std::to_string(spec.ceiling));
  }
  if (spec.o6_filter != O6Filter::None && !spec.target) {
    throw std::invalid_argument("the O6 filter needs a target");
  }
}

// Hits of one shape, in (negation placement, letters) order.
std::vector<Enumerated> search_shape(const SearchSpec& spec, const Shape& s, std::optional<F2Element> target,
                                     const ModelOps* o6ops) {
  std::vector<Enumerated> out;
  const int length = s.length;
  const int k = static_cast<int>(spec.opset.size());
  std::vector<std::vector<std::uint8_t>> values(k);
  auto visit_mask = [&](std::uint32_t negs) {
    values[0] = eval_all(s, negs, spec.opset[0]);
    const std::size_t count = values[0].size();
    std::vector<char> keep(count, 1);
    bool any = true;
    if (target) {
      any = false;
      for (std::size_t i = 0; i < count; ++i) {
        keep[i] = values[0][i] == target->ordinal();
        any = any || keep[i];
      }
    }
    for (int j = 1; j < k && any; ++j) {
      values[j] = eval_all(s, negs, spec.opset[j]);
      if (spec.common_only || target) {
        any = false;
        for (std::size_t i = 0; i < count; ++i) {
          keep[i] = keep[i] && values[j][i] == values[0][i];
          any = any || keep[i];
        }
      }
    }
    if (!any) return;
    for (std::size_t i = 0; i < count; ++i) {
      if (!keep[i]) continue;
      Enumerated e{build_expr(s, negs, static_cast<unsigned>(i), (length + 1) / 2, spec.opset[0]), {}};
      if (o6ops) {
        bool pass = check_horn(*o6ops, make_equation(*spec.target, e.expr)).pass;
        if (pass != (spec.o6_filter == O6Filter::Pass)) continue;
      }
      e.forms.reserve(k);
      for (int j = 0; j < k; ++j) e.forms.push_back(F2Element::from_ordinal(values[j][i]));
      out.push_back(std::move(e));
    }
  };
  if (spec.n == 0) {
    visit_mask(0);
  } else {
    // Masks with n bits among `length`, in increasing numeric order.
    std::uint32_t m = (1u << spec.n) - 1;
    while (m < (1u << length)) {
      visit_mask(m);
      std::uint32_t c = m & -m, r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

template <bool Parallel>
void run(const SearchSpec& spec, const std::function<void(const Enumerated&)>& visit) {
  check_spec(spec);
  std::optional<F2Element> target;
  if (spec.target) target = eval_f2(*spec.target);
  std::optional<OrthoModel> o6model;
  std::optional<ModelOps> o6ops;
  if (spec.o6_filter != O6Filter::None) {
    o6model.emplace(o6());
    o6ops.emplace(*o6model);
  }
  const std::vector<Shape> all = shapes(spec.v);
  const std::size_t batch = Parallel ? 64 : 1;
  for (std::size_t start = 0; start < all.size(); start += batch) {
    const std::size_t end = std::min(all.size(), start + batch);
    std::vector<std::vector<Enumerated>> hits(end - start);
    const auto span = static_cast<std::int64_t>(end - start);
#pragma omp parallel for schedule(dynamic, 1) if (Parallel)
    for (std::int64_t i = 0; i < span; ++i) {
      hits[i] = search_shape(spec, all[start + i], target, o6ops ? &*o6ops : nullptr);
    }
    for (const auto& h : hits) {
      for (const auto& e : h) visit(e);
    }
  }
}

}  // namespace

std::uint64_t count_expressions(int v, int n) {
  if (v < 2 || n < 0 || n > 2 * v - 1) throw std::out_of_range("count_expressions needs v >= 2 and 0 <= n <= 2v-1");
  return (std::uint64_t{1} << v) * binomial(2 * v - 1, n) * catalan(v - 1);
}

void enumerate(const SearchSpec& spec, const std::function<void(const Enumerated&)>& visit) {
  run<true>(spec, visit);
}

std::vector<Enumerated> enumerate_all(const SearchSpec& spec) {
  std::vector<Enumerated> out;
  enumerate(spec, [&](const Enumerated& e) { out.push_back(e); });
  return out;
}

Expr swap_ab(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
      if (e.name() == 'a') return Expr::variable('b');
      if (e.name() == 'b') return Expr::variable('a');
      return e;
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Negation:
      return Expr::negation(swap_ab(e.child()));
    case Expr::Kind::Binary:
      return Expr::binary(e.op(), swap_ab(e.left()), swap_ab(e.right()));
  }
  return e;
}

MinimalResult find_minimal(const Expr& target, const MinimalSearch& search) {
  for (char c : variables(target)) {
    if (c != 'a' && c != 'b') throw ThirdVariableError(c);
  }
  for (int v = 2; v <= search.max_v; ++v) {
    for (int n = 0; n <= 2 * v - 1; ++n) {
      SearchSpec spec;
      spec.v = v;
      spec.n = n;
      spec.opset = search.opset;
      spec.target = target;
      spec.o6_filter = search.o6_filter;
      std::vector<std::pair<std::string, Expr>> found;
      enumerate(spec, [&](const Enumerated& e) { found.emplace_back(render(e.expr), e.expr); });
      if (found.empty()) continue;
      std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      MinimalResult r{v, n, {}, {}};
      std::set<std::string> texts;
      for (const auto& f : found) texts.insert(f.first);
      for (const auto& [text, e] : found) {
        r.raw.push_back(e);
        std::string swapped = render(swap_ab(e));
        if (!(texts.count(swapped) && swapped < text)) r.collapsed.push_back(e);
      }
      return r;
    }
  }
  throw SearchLimitError("no expression found with at most " + std::to_string(search.max_v) +
                         " variable occurrences");
}

namespace serial {

void enumerate(const SearchSpec& spec, const std::function<void(const Enumerated&)>& visit) {
  run<false>(spec, visit);
}

}  // namespace serial

}  // namespace oml
