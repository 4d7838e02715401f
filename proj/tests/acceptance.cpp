// Acceptance checks, one line per criterion. Usage: acceptance [--criterion N]
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "oml/catalog.hpp"
#include "oml/checker.hpp"
#include "oml/enumerate.hpp"
#include "oml/freeoml.hpp"
#include "oml/greechie.hpp"
#include "support.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oml;

namespace {

// Time limits in seconds.
constexpr double kLimit1 = 1.0;
constexpr double kLimit3 = 60.0;
constexpr double kLimit4 = 10.0;
constexpr double kLimit5 = 600.0;
constexpr double kLimit6 = 1800.0;
constexpr double kLimit8 = 300.0;
constexpr int kRandomEquations = 10000;

const char* const kSymDistrib =
    "(((a^b)v(-a^-b))^(((b^c)v(-b^-c))v((a^c)v(-a^-c)))) = "
    "((((a^b)v(-a^-b))^((b^c)v(-b^-c)))v(((a^b)v(-a^-b))^((a^c)v(-a^-c))))";
const char* const kWeakTransitive = "(((a^b)v(-a^-b))^((-b^-c)v(a^c))) < ((a^c)v(-a^-c))";

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

void time_limit(Outcome& o, double elapsed, double limit) {
  std::ostringstream s;
  s << elapsed << "s over the " << limit << "s limit";
  expect(o, elapsed < limit, s.str());
}

std::string cli_output(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::vector<OrthoModel> greechie_models() {
  std::vector<OrthoModel> out;
  for (auto& g : greechie_oml_battery(9, 3)) out.push_back(std::move(g.model));
  return out;
}

std::vector<OpCode> family(OpCode (*make)(int), int lo, int hi) {
  std::vector<OpCode> out;
  for (int i = lo; i <= hi; ++i) out.push_back(make(i));
  return out;
}

OpCode impl(int i) { return OpCode::implication(i); }
OpCode join(int i) { return OpCode::join(i); }
OpCode meet(int i) { return OpCode::meet(i); }

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  auto table = build_canonical_table();
  double elapsed = seconds_since(t0);
  expect(o, table.size() == 96, "closure has " + std::to_string(table.size()) + " elements");
  time_limit(o, elapsed, kLimit1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  int code = 0;
  std::string out = cli_output({"reduce", "(av(-a^(avb)))"}, &code);
  expect(o, code == 0 && out == "48\t-\t(avb)\n", "reduce printed '" + out + "'");
  const CanonicalForm& f = reduce(parse("((aIb)=(((a^b)v(a^-b))v((-a^b)v(-a^-b))))"));
  expect(o, f.element == eval_f2(parse("((-avb)^((av(-a^-b))v(-a^b)))")), "second golden input reduced to " + f.text);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  expect(o, count_expressions(7, 0) == 16896, "count(7,0) = " + std::to_string(count_expressions(7, 0)));
  for (int v = 2; v <= 6; ++v) {
    // (2,4) is outside the domain n <= 2v-1.
    for (int n = 0; n <= 4 && n <= 2 * v - 1; ++n) {
      SearchSpec spec;
      spec.v = v;
      spec.n = n;
      spec.opset = {OpCode::join()};
      std::uint64_t seen = 0;
      enumerate(spec, [&](const Enumerated&) { ++seen; });
      expect(o, seen == count_expressions(v, n),
             "v=" + std::to_string(v) + " n=" + std::to_string(n) + " streamed " + std::to_string(seen));
    }
  }
  time_limit(o, seconds_since(t0), kLimit3);
  return o;
}

std::string report4() {
  std::ostringstream s;
  for (const auto& t : scan_mixed_distributivity(mo2())) s << t[0] << t[1] << t[2] << t[3] << t[4] << '\n';
  return s.str();
}

Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  std::string r = report4();
  time_limit(o, seconds_since(t0), kLimit4);
  expect(o, r == "10101\n", "scan found " + r);
  return o;
}

Outcome minimal_counts(const std::vector<std::tuple<const char*, std::vector<OpCode>, O6Filter, int, int, int>>& cases,
                       double limit) {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& [target, ops, filter, v, n, count] : cases) {
    MinimalResult r = find_minimal(parse(target), {ops, 7, filter});
    std::ostringstream s;
    s << target << " over " << op_symbol(ops.front()) << ".." << op_symbol(ops.back()) << ": (" << r.v << "," << r.n
      << ") " << r.collapsed.size() << " (raw " << r.raw.size() << ")";
    expect(o, r.v == v && r.n == n && static_cast<int>(r.collapsed.size()) == count, s.str());
  }
  time_limit(o, seconds_since(t0), limit);
  return o;
}

Outcome criterion5() {
  return minimal_counts({{"(avb)", family(impl, 1, 5), O6Filter::None, 5, 2, 1},
                         {"(avb)", family(join, 1, 5), O6Filter::None, 5, 3, 2},
                         {"(a^b)", family(impl, 1, 5), O6Filter::None, 5, 4, 7},
                         {"(avb)", family(meet, 1, 5), O6Filter::None, 5, 5, 2}},
                        kLimit5);
}

Outcome criterion6() {
  return minimal_counts({{"(avb)", family(impl, 0, 5), O6Filter::None, 6, 2, 1},
                         {"(avb)", family(join, 0, 5), O6Filter::None, 6, 2, 16},
                         {"(avb)", family(meet, 0, 5), O6Filter::None, 6, 6, 8},
                         {"(a^b)", family(impl, 0, 5), O6Filter::None, 6, 4, 23},
                         {"(a^b)", family(join, 0, 5), O6Filter::None, 6, 6, 8},
                         {"(a^b)", family(meet, 0, 5), O6Filter::None, 6, 2, 16},
                         {"(a^b)", family(impl, 0, 5), O6Filter::Pass, 6, 4, 18},
                         {"(avb)", family(meet, 0, 5), O6Filter::Pass, 6, 6, 4},
                         {"(a^b)", family(join, 0, 5), O6Filter::Pass, 6, 6, 4}},
                        kLimit6);
}

std::vector<OrthoModel> catalog_models() {
  std::vector<OrthoModel> out = {mo2(), o6(), boolean(2), boolean(3), boolean(4)};
  for (auto& m : greechie_models()) out.push_back(std::move(m));
  return out;
}

std::string report7() { return report_json(run_catalog(catalog_models())); }

Outcome criterion7() {
  Outcome o;
  CatalogReport r = run_catalog(catalog_models());
  for (const auto& row : r.rows) {
    if (row.status == RowStatus::Mismatch) expect(o, false, row.entry_id + " on " + row.model);
  }
  // Every expected failure needs a counterexample on its witness model.
  for (const auto& e : corpus()) {
    std::vector<std::string> witnesses;
    if (e.oml == Expect::Fails) witnesses.push_back(e.witness);
    if (e.o6 == Expect::Fails) witnesses.push_back("O6");
    for (const auto& witness : witnesses) {
      bool refuted = false;
      for (const auto& row : r.rows) {
        if (row.entry_id == e.id && row.model == witness) refuted = !row.pass && row.counterexample.has_value();
      }
      expect(o, refuted, e.id + " not refuted on " + witness);
    }
  }
  o.detail = std::to_string(r.entries) + " entries, " + std::to_string(r.rows.size()) + " rows, " +
             std::to_string(r.mismatches) + " mismatches" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

std::string report8(int* failures) {
  std::vector<OrthoModel> models = {o6()};
  for (auto& m : greechie_models()) models.push_back(std::move(m));
  std::ostringstream s;
  int failed = 0;
  for (const char* text : {kSymDistrib, kWeakTransitive}) {
    Condition c = parse_condition(text);
    for (const auto& m : models) {
      CheckResult r = check_horn(m, c);
      if (!r.pass) {
        ++failed;
        s << "fails on " << m.name() << " at " << format_valuation(m, c, *r.counterexample) << ": " << text << '\n';
      }
    }
  }
  if (failures) *failures = failed;
  return s.str();
}

Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  int failures = 0;
  std::string r = report8(&failures);
  time_limit(o, seconds_since(t0), kLimit8);
  if (failures) {
    o.pass = false;
    std::string lines = r;
    while (!lines.empty() && lines.back() == '\n') lines.pop_back();
    for (auto& ch : lines) {
      if (ch == '\n') ch = ';';
    }
    o.detail = std::to_string(failures) + " failure(s): " + lines + (o.detail.empty() ? "" : "; " + o.detail);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  OrthoModel m = mo2(), b4 = boolean(4);
  ModelOps mops(m), bops(b4);
  std::mt19937 rng(20260);
  int agree = 0, equal = 0;
  for (int k = 0; k < kRandomEquations; ++k) {
    Expr l = testing::random_expr(rng, 1 + k % 4, "ab");
    Expr r = testing::random_expr(rng, 1 + (k / 4) % 4, "ab");
    // Bias toward equal pairs so both verdicts are exercised.
    if (k % 3 == 0) r = expand(l);
    if (k % 3 == 1) r = parse(reduce(l).text);
    Condition c = make_equation(l, r);
    bool models = check_horn(mops, c).pass && check_horn(bops, c).pass;
    bool free = equal_oml(l, r);
    agree += models == free;
    equal += free;
  }
  o.detail = std::to_string(agree) + "/" + std::to_string(kRandomEquations) + " agree, " + std::to_string(equal) +
             " equal";
  expect(o, agree == kRandomEquations, "disagreement");
  return o;
}

Outcome criterion10() {
  Outcome o;
#ifdef _OPENMP
  auto reports = [] {
    int failures = 0;
    return std::vector<std::string>{report4(), report7(), report8(&failures)};
  };
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  auto one = reports();
  omp_set_num_threads(8);
  auto eight = reports();
  omp_set_num_threads(saved);
  const char* names[] = {"scan", "catalog", "open-problem"};
  for (int k = 0; k < 3; ++k) expect(o, one[k] == eight[k], std::string(names[k]) + " report differs");
#else
  expect(o, false, "built without OpenMP");
#endif
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};
  bool all = true;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << (o.detail.empty() ? "" : " " + o.detail)
              << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
