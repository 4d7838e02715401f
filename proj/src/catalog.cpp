#include "oml/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "oml/freeoml.hpp"
#include "oml/greechie.hpp"

namespace oml {

const char* expect_name(Expect e) {
  switch (e) {
    case Expect::Holds: return "holds";
    case Expect::Fails: return "fails";
    case Expect::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Strings = std::vector<std::string>;

constexpr Expect H = Expect::Holds;
constexpr Expect F = Expect::Fails;
constexpr Expect U = Expect::Unknown;

// Placeholders: U join_i, N meet_i, T implication_i, Q identity_i.
std::string inst(std::string_view tmpl, int i) {
  std::string out;
  for (char c : tmpl) {
    switch (c) {
      case 'U': out += op_symbol(OpCode::join(i)); break;
      case 'N': out += op_symbol(OpCode::meet(i)); break;
      case 'T': out += op_symbol(OpCode::implication(i)); break;
      case 'Q': out += op_symbol(OpCode::identity(i)); break;
      default: out += c;
    }
  }
  return out;
}

Strings iff(const std::string& p, const std::string& q) { return {p + " => " + q, q + " => " + p}; }

// Symmetric identity.
std::string eqv(const std::string& x, const std::string& y) {
  return "((" + x + "^" + y + ")v(-" + x + "^-" + y + "))";
}

const std::array<std::string, 5> kUnity = {
    "((-av(a^-b))v(a^b))",
    "((bv(a^-b))v(-a^-b))",
    "((av(-a^b))v(-a^-b))",
    "((-bv(-a^b))v(a^b))",
    "(((a^b)v(a^-b))v((-a^b)v(-a^-b)))",
};

const std::array<std::string, 5> kZero = {
    "((a^(-avb))^(-av-b))",
    "((-b^(-avb))^(avb))",
    "((-a^(av-b))^(avb))",
    "((b^(av-b))^(-av-b))",
    "(((avb)^(av-b))^((-avb)^(-av-b)))",
};

struct Builder {
  std::vector<LawEntry> out;

  LawEntry& add(std::string id, const Strings& clauses, Expect oml, std::optional<Expect> o6 = std::nullopt) {
    LawEntry e;
    e.id = std::move(id);
    for (const auto& c : clauses) e.clauses.push_back(parse_condition(c));
    e.oml = oml;
    e.o6 = o6;
    out.push_back(std::move(e));
    return out.back();
  }
};

std::string with_i(const std::string& base, int i) { return base + "/i=" + std::to_string(i); }

void commutation(Builder& b) {
  const Strings forms = {
      "(((a^b)v(a^-b))v((-a^b)v(-a^-b))) = 1",
      "(a^(-avb)) < b",
      "a = ((a^b)v(a^-b))",
  };
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k == l) continue;
      b.add("commute/forms/" + std::to_string(k + 1) + "-to-" + std::to_string(l + 1), {forms[k] + " => " + forms[l]},
            H);
    }
  }
  for (int i = 1; i <= 5; ++i) {
    b.add(with_i("commute/unity", i), iff(kUnity[i - 1] + " = 1", "aCb"), H);
    b.add(with_i("commute/zero", i), iff(kZero[i - 1] + " = 0", "aCb"), H);
    b.add(with_i("commute/join-of-meet", i), iff(inst("(aU(-aNb)) = (bUa)", i), "aCb"), H);
  }
  // Quantum forms of a, Beran 6, 38, 54, 70, 86.
  std::vector<std::string> quantum_a;
  for (const auto& f : canonical_table()) {
    if (f.beran_xref && (*f.beran_xref - 6) % 16 == 0 && *f.beran_xref <= 86 && *f.beran_xref != 22) {
      quantum_a.push_back(f.text);
    }
  }
  if (quantum_a.size() != 5) throw std::logic_error("expected five quantum forms of a");
  for (int i = 1; i <= 5; ++i) b.add(with_i("commute/quantum-a", i), iff(quantum_a[i - 1] + " = a", "aCb"), H);

  // Every quantum canonical form against its classical counterpart, and the
  // five quantum forms of each Boolean part pairwise.
  std::map<int, std::vector<const CanonicalForm*>> families;
  for (const auto& f : canonical_table()) {
    if (is_classical(f.element)) continue;
    const CanonicalForm& c = canonical_form(classical_counterpart(f.element));
    char id[64];
    std::snprintf(id, sizeof id, "commute/classical-counterpart/%02d", f.index);
    b.add(id, iff(f.text + " = " + c.text, "aCb"), H);
    families[f.element.boolean_part].push_back(&f);
  }
  for (const auto& [part, members] : families) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        char id[64];
        std::snprintf(id, sizeof id, "commute/quantum-pair/%02d-%02d", members[x]->index, members[y]->index);
        b.add(id, iff(members[x]->text + " = " + members[y]->text, "aCb"), H);
      }
    }
  }
}

void characterizations(Builder& b) {
  for (int i = 1; i <= 5; ++i) {
    b.add(with_i("oml-char/impl-one-iff-le", i), iff(inst("(aTb) = 1", i), "a < b"), H, F);
    b.add(with_i("oml-char/join-one-iff-perp", i), iff(inst("(aUb) = 1", i), "-a < b"), H, F);
    b.add(with_i("oml-char/meet-zero-iff-perp", i), iff(inst("(aNb) = 0", i), "a < -b"), H, F);
    b.add(with_i("oml-char/identity-one-iff-eq", i), iff(inst("(aQb) = 1", i), "a = b"), H, F);
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      std::string suffix = "/i=" + std::to_string(i) + ",j=" + std::to_string(j);
      b.add("oml-char/impl-unity-iff-le" + suffix, iff(inst("(aTb) = ", i) + kUnity[j - 1], "a < b"), H, F);
      b.add("oml-char/identity-unity-iff-eq" + suffix, iff(inst("(aQb) = ", i) + kUnity[j - 1], "a = b"), H, F);
    }
  }
  b.add("oml-char/perp-join-one", {"a < -b & (avb) = 1 => -a < b"}, H, F);

  b.add("distrib-char/impl-one-iff-le", iff("(a>0b) = 1", "a < b"), F, F);
  b.add("distrib-char/join-one-iff-perp", iff("(avb) = 1", "-a < b"), F, F);
  b.add("distrib-char/meet-zero-iff-perp", iff("(a^b) = 0", "a < -b"), F, F);
  b.add("distrib-char/identity-one-iff-eq", iff("(a=0b) = 1", "a = b"), F, F);
}

void relations(Builder& b) {
  for (int i = 0; i <= 5; ++i) {
    // Distributive for i = 0, orthomodular otherwise.
    b.add(with_i("express/join-by-impl-no-neg", i), {inst("(avb) = (((((bTa)T(aTb))Tb)Ta)Ta)", i)}, i == 0 ? F : H, F);
  }
  const std::vector<std::pair<std::string, std::string>> smallest = {
      {"join-by-impl", "(avb) = ((((-aT-b)Tb)Ta)Ta)"},
      {"meet-by-impl", "(a^b) = -(aT((aTb)T-(-bT-a)))"},
      {"join-by-join", "(avb) = (-((aU-b)U(-bUa))Ua)"},
      {"join-by-meet", "(avb) = -(-((-aNb)N(bN-a))N-a)"},
  };
  for (const auto& [name, tmpl] : smallest) {
    for (int i = 1; i <= 5; ++i) b.add(with_i("express/smallest-" + name, i), {inst(tmpl, i)}, H, F);
  }

  const std::vector<std::pair<std::string, std::string>> common = {
      {"join-by-impl", "(avb) = ((bTa)T(((aT-b)T-b)Ta))"},
      {"join-by-join", "(avb) = (bU(aU-((aUb)U(-bUa))))"},
      {"join-by-meet", "(avb) = -(-(-aNb)N(-aN-(bN-(bNa))))"},
      {"meet-by-impl", "(a^b) = -(aT-((aT((aTb)T-b))T-a))"},
      {"meet-by-join", "(a^b) = -((-bU-(aU-(aUb)))U-(-bUa))"},
      {"meet-by-meet", "(a^b) = (bN(aN-((aNb)N(-bNa))))"},
  };
  for (const auto& [name, tmpl] : common) {
    // At i = 0 the join-by-join and meet-by-meet samples collapse to
    // ortholattice identities.
    bool ol_law = name == "join-by-join" || name == "meet-by-meet";
    for (int i = 0; i <= 5; ++i) {
      b.add(with_i("express/common-" + name, i), {inst(tmpl, i)}, H, i == 0 && ol_law ? H : F);
    }
  }
  b.add("express/common-o6-sample-meet-by-impl", {"(a^b) = -(a>0(b>0((b>0a)>0-(-b>0-a))))"}, H, H);
  b.add("express/common-o6-sample-join-by-meet", {"(avb) = -(-b^(-a^-((-a^b)^(b^-a))))"}, H, H);
  b.add("express/common-o6-sample-meet-by-join", {"(a^b) = -(-bv(-av-((-avb)v(bv-a))))"}, H, H);

  const std::vector<std::pair<std::string, Strings>> chains = {
      {"join", {"(avb)", "(bu1-(bu1-a))", "(au2-(-bu2a))", "(bu3(bu3a))", "(au4(bu4a))", "(bu5-(bu5-a))"}},
      {"join1", {"(au1b)", "(bu2a)", "((au3b)u3b)", "(bu4(bu4a))", "(au5(bu5a))"}},
      {"join2", {"(au2b)", "(bu1a)", "((bu3a)u3a)", "(au4(au4b))", "(bu5(bu5a))"}},
      {"join3",
       {"(au3b)", "(bu4a)", "(-(au1-b)u1(bu1a))", "((au2b)u2-(-bu2a))", "((au5b)u5-(au5(bu5-a)))"}},
      {"join4",
       {"(au4b)", "(bu3a)", "(-(bu1-a)u1(au1b))", "((bu2a)u2-(-au2b))", "((bu5a)u5-(bu5(au5-b)))"}},
      {"join5",
       {"(au5b)", "(bu5a)", "-(-(au1b)u1-(-au1(bu1a)))", "-(-(bu2a)u2-((au2b)u2-a))",
        "-(-(bu3a)u3-((bu3a)u3a))", "-(-(bu4a)u4-(bu4(bu4a)))"}},
      {"identity0",
       {"(a=0b)", "-(-a=5b)", "(-(bu1a)u1-(-bu1-a))", "(-(bu2a)u2-(-bu2-a))", "(-(bu3a)u3-(-bu3-a))",
        "(-(bu4a)u4-(-bu4-a))", "(-(bu5a)u5-(-bu5-a))"}},
      {"identity1",
       {"(a=1b)", "(-a=3-b)", "(-(au1b)u1-(-bu1-a))", "(-(au3b)u3-(-bu3-a))", "(-(-au2-b)u2-(bu2a))",
        "(-(-au4-b)u4-(bu4a))", "(-(au5(au5b))u5-(-au5-(bu5-a)))"}},
      {"identity2",
       {"(a=2b)", "(-a=4-b)", "(-(-bu1-a)u1-(au1(bu1a)))", "(-(-bu3-a)u3-(au3(bu3a)))",
        "-(-(-au2b)u2-(au2-(bu2a)))", "(-(au4b)u4-(-au4(-bu4-a)))", "-(-(bu5(bu5-a))u5-(au5-(bu5a)))"}},
  };
  for (const auto& [name, chain] : chains) {
    for (std::size_t k = 1; k < chain.size(); ++k) {
      b.add("express/shortest-" + name + "/" + std::to_string(k), {chain[0] + " = " + chain[k]}, H);
    }
  }

  const Strings by_all = {
      "(au1b) = (aU-(-bU-(bUa)))",
      "(au2b) = (bU-(-aU-(aUb)))",
      "(au3b) = -(-(-aU(bUa))U-((bU(aUb))U-(-bUa)))",
      "(au4b) = -(-(-bU(aUb))U-((aU(bUa))U-(-aUb)))",
      "(au5b) = -(-(bUa)U-(-bU((aUb)U(bU-a))))",
  };
  for (int k = 1; k <= 5; ++k) {
    for (int i = 1; i <= 5; ++i) {
      b.add(with_i("express/join" + std::to_string(k) + "-by-all", i), {inst(by_all[k - 1], i)}, H);
    }
  }
}

// QA order x <= y, written with the unified disjunction.
std::string qa_join(const std::string& x, const std::string& y) {
  return "(-((" + x + "U-" + y + ")U(-" + y + "U" + x + "))U" + x + ")";
}
std::string qa_le(const std::string& x, const std::string& y) { return qa_join(x, y) + " = " + y; }

void quantum_algebra(Builder& b) {
  const std::string one = "(-((aUa)U(aUa))Ua)";
  const std::vector<std::pair<std::string, Strings>> axioms = {
      {"a1-double-neg", {"a = --a"}},
      {"a1-le-one", {qa_le("a", one)}},
      {"a2-left", {qa_le("a", qa_join("a", "b"))}},
      {"a2-right", {qa_le("b", qa_join("a", "b"))}},
      {"a3-antisym", {qa_le("a", "b") + " & " + qa_le("b", "a") + " => a = b"}},
      {"a3-refl", {"a = b => " + qa_le("a", "b")}},
      {"a4-contra", {qa_le("a", "b") + " => " + qa_le("-b", "-a")}},
      {"a5-trans", {qa_le("a", "b") + " & " + qa_le("b", "c") + " => " + qa_le("a", "c")}},
      {"a6-lub", {qa_le("a", "c") + " & " + qa_le("b", "c") + " => " + qa_le(qa_join("a", "b"), "c")}},
      {"a7-orthomodular", {qa_le("a", "-b") + " & " + qa_join("a", "b") + " = " + one + " => " + qa_le("-a", "b")}},
      {"a8", iff("((bU-a)N(-bUa)) = 1", "a = b")},
      {"a10", iff("(aN(bU(bNa))) = 0", "a < -b")},
      {"a11", {"((-((bUa)Na)Ub)Na) = (aN(bU(bNa)))"}},
      {"a12", iff("(aUb) = 1", "-a < b")},
      {"sample-absorb", {"(aU(bNa)) = (aU(-bNa))"}},
      {"sample-join", {"(aU(bU(-aN(aUb)))) = (aUb)"}},
  };
  for (const auto& [name, tmpl] : axioms) {
    for (int i = 1; i <= 5; ++i) {
      Strings cl;
      for (const auto& t : tmpl) cl.push_back(inst(t, i));
      b.add(with_i("qa/" + name, i), cl, H);
    }
  }
  for (int i = 1; i <= 5; ++i) b.add(with_i("qa/a9", i), {inst("(aU-a) = 1", i)}, H, H);

  const Strings cl = {
      "(avb) = (-(-(-aU-b)U-b)U-(-(aU-b)U-a))",
      "(avb) = (-(-(-aU-b)U-a)U-(-bU-(bU-a)))",
      "(avb) = (bU(bUa))",
      "(avb) = (aU(bUa))",
      "(avb) = ((aUb)U-(-bU-a))",
  };
  for (int k = 1; k <= 5; ++k) {
    for (int i = 1; i <= 5; ++i) {
      b.add("qa/classical-join-" + std::to_string(k) + "/i=" + std::to_string(i), {inst(cl[k - 1], i)}, k == i ? H : F);
    }
  }
}

void associativity_distributivity(Builder& b) {
  const Strings hyps = {"aCb & aCc", "aCb & bCc", "aCc & bCc"};
  const Strings hyp_names = {"ab-ac", "ab-bc", "ac-bc"};
  for (int i = 1; i <= 5; ++i) {
    for (int h = 0; h < 3; ++h) {
      std::string suffix = "/" + hyp_names[h] + "/i=" + std::to_string(i);
      b.add("assoc/join" + suffix, {hyps[h] + " => " + inst("((aUb)Uc) = (aU(bUc))", i)}, H);
      b.add("assoc/meet" + suffix, {hyps[h] + " => " + inst("((aNb)Nc) = (aN(bNc))", i)}, H);
    }
    b.add(with_i("assoc/join/unconditional", i), {inst("((aUb)Uc) = (aU(bUc))", i)}, F);
    b.add(with_i("assoc/meet/unconditional", i), {inst("((aNb)Nc) = (aN(bNc))", i)}, F);
  }

  // Which (form, hypotheses, i) combinations hold in every OML.
  auto forward_holds = [](int h, int i) { return i == 1 || h == 0 || (i == 2 && h == 2); };
  auto reverse_holds = [](int h, int i) { return i == 2 || h == 2 || (i == 1 && h == 0); };
  for (int i = 1; i <= 5; ++i) {
    for (int h = 0; h < 3; ++h) {
      std::string suffix = "/" + hyp_names[h] + "/i=" + std::to_string(i);
      b.add("distrib/forward" + suffix, {hyps[h] + " => " + inst("(aU(bNc)) = ((aUb)N(aUc))", i)},
            forward_holds(h, i) ? H : F);
      b.add("distrib/reverse" + suffix, {hyps[h] + " => " + inst("((aNb)Uc) = ((aUc)N(bUc))", i)},
            reverse_holds(h, i) ? H : F);
    }
  }
  b.add("distrib/mixed", {"(au1(b^c)) = ((au1b)^(au1c))"}, H);
  b.add("distrib/mixed-reverse", {"((a^b)u2c) = ((au2c)^(bu2c))"}, H);
  b.add("distrib/mixed-dual", {"(an1(bvc)) = ((an1b)v(an1c))"}, H);
  b.add("distrib/mixed-dual-reverse", {"((avb)n2c) = ((an2c)v(bn2c))"}, H);
}

void symmetric_identity(Builder& b) {
  const std::string ab = eqv("a", "b"), ac = eqv("a", "c"), bc = eqv("b", "c");
  b.add("sym-identity/is-identity5", {ab + " = (a=5b)"}, H);
  b.add("sym-identity/join-meet", {eqv("(avb)", "(a^b)") + " = " + ab}, H);
  b.add("sym-identity/impl2-join-le", {"((a>2c)v(b>2c)) < ((a^b)>2c)"}, H, H);
  b.add("sym-identity/impl1-join-le", {"((c>1a)v(c>1b)) < (c>1(avb))"}, H, H);
  b.add("sym-identity/join-by-impl",
        {"(" + ac + "v" + bc + ") = (((a>2c)v(b>2c))^((c>1a)v(c>1b)))"}, H);
  b.add("sym-identity/join-le", {"(" + ac + "v" + bc + ") < (((a^b)>2c)^(c>1(avb)))"}, H);
  b.add("sym-identity/meet-substitute", {"(" + eqv("(avb)", "c") + "^" + ab + ") = (" + ac + "^" + ab + ")"}, H);

  LawEntry& lem = b.add("sym-identity/transitive", {"(" + ab + "^(" + bc + "v" + ac + ")) < " + ac}, U);
  lem.four_go = H;
  LawEntry& weak = b.add("sym-identity/transitive-weak", {"(" + ab + "^((-b^-c)v(a^c))) < " + ac}, U);
  weak.four_go = H;
  b.add("sym-identity/godowski-alt", {"(((a>1b)^(b>2c))^(c>1a)) < " + ac}, U);
  LawEntry& go = b.add("sym-identity/four-go", {"((((a>1b)^(b>1c))^(c>1d))^(d>1a)) < (a>1d)"}, U);
  go.four_go = H;
  LawEntry& dist = b.add("sym-identity/distributive",
                         {"(" + ab + "^(" + bc + "v" + ac + ")) = ((" + ab + "^" + bc + ")v(" + ab + "^" + ac + "))"},
                         U, H);
  dist.four_go = H;
}

std::vector<LawEntry> build_corpus() {
  Builder b;
  commutation(b);
  characterizations(b);
  relations(b);
  quantum_algebra(b);
  associativity_distributivity(b);
  symmetric_identity(b);
  std::sort(b.out.begin(), b.out.end(), [](const LawEntry& x, const LawEntry& y) { return x.id < y.id; });
  for (std::size_t k = 1; k < b.out.size(); ++k) {
    if (b.out[k].id == b.out[k - 1].id) throw std::logic_error("duplicate catalog id " + b.out[k].id);
  }
  return b.out;
}

// Expectation of an entry on a concrete model; empty when unconstrained.
std::optional<Expect> expected_on(const LawEntry& e, const OrthoModel& m, bool four_go) {
  if (m.is_distributive()) return e.boolean;
  if (m.is_orthomodular()) {
    if (e.oml == H) return H;
    if (e.oml == F) return m.name() == e.witness ? std::optional<Expect>(F) : std::nullopt;
    if (e.oml == U) return four_go && e.four_go == H ? H : U;
    return std::nullopt;
  }
  if (e.o6 == F) return F;
  if (m.name() == "O6") return e.o6;
  return std::nullopt;
}

bool two_variable_equational(const LawEntry& e) {
  for (const auto& c : e.clauses) {
    if (!c.hypotheses.empty() || c.conclusion.kind == Atom::Kind::Commutes) return false;
    for (char v : c.variables) {
      if (v != 'a' && v != 'b') return false;
    }
  }
  return true;
}

bool free_oml_holds(const LawEntry& e) {
  for (const auto& c : e.clauses) {
    F2Element l = eval_f2(c.conclusion.lhs), r = eval_f2(c.conclusion.rhs);
    bool ok = c.conclusion.kind == Atom::Kind::Equal ? l == r : F2Lattice{}.meet(l, r) == l;
    if (!ok) return false;
  }
  return true;
}

RowStatus status_of(bool pass, std::optional<Expect> expected) {
  if (!expected) return RowStatus::Info;
  if (*expected == U) return RowStatus::Open;
  return pass == (*expected == H) ? RowStatus::Ok : RowStatus::Mismatch;
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::Open: return "open";
    case RowStatus::Info: return "info";
  }
  return "open";
}

}  // namespace

const std::vector<LawEntry>& corpus() {
  static const std::vector<LawEntry> entries = build_corpus();
  return entries;
}

const LawEntry* find_entry(const std::string& id) {
  const auto& c = corpus();
  auto it = std::lower_bound(c.begin(), c.end(), id, [](const LawEntry& e, const std::string& k) { return e.id < k; });
  return it != c.end() && it->id == id ? &*it : nullptr;
}

CatalogReport run_catalog(const std::vector<OrthoModel>& models, const std::vector<LawEntry>& entries) {
  std::vector<ModelOps> ops;
  ops.reserve(models.size());
  for (const auto& m : models) ops.emplace_back(m);
  const Condition go = parse_condition("((((a>1b)^(b>1c))^(c>1d))^(d>1a)) < (a>1d)");
  std::vector<char> four_go(models.size());
  for (std::size_t k = 0; k < models.size(); ++k) four_go[k] = check_horn(ops[k], go).pass;

  std::vector<std::vector<CatalogRow>> per_entry(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t x = 0; x < count; ++x) {
    const LawEntry& e = entries[x];
    auto& rows = per_entry[x];
    for (std::size_t k = 0; k < models.size(); ++k) {
      CatalogRow row;
      row.entry_id = e.id;
      row.model = models[k].name();
      for (std::size_t c = 0; c < e.clauses.size(); ++c) {
        CheckResult r = serial::check_horn(ops[k], e.clauses[c]);
        if (!r.pass) {
          row.pass = false;
          row.clause = static_cast<int>(c);
          row.counterexample = format_valuation(models[k], e.clauses[c], *r.counterexample);
          break;
        }
      }
      row.expected = expected_on(e, models[k], four_go[k]);
      row.status = status_of(row.pass, row.expected);
      rows.push_back(std::move(row));
    }
    if (two_variable_equational(e)) {
      CatalogRow row;
      row.entry_id = e.id;
      row.model = kFreeModelName;
      row.pass = free_oml_holds(e);
      row.expected = e.oml;
      row.status = status_of(row.pass, row.expected);
      // The free OML on two generators is a subdirect product of MO2 and 2^4.
      const CatalogRow* mo2_row = nullptr;
      const CatalogRow* bool_row = nullptr;
      for (const auto& r : rows) {
        if (r.model == "MO2") mo2_row = &r;
        if (r.model == "2^4") bool_row = &r;
      }
      if (mo2_row && bool_row && row.pass != (mo2_row->pass && bool_row->pass)) row.status = RowStatus::Mismatch;
      rows.push_back(std::move(row));
    }
  }

  CatalogReport report;
  report.entries = static_cast<int>(entries.size());
  for (auto& rows : per_entry) {
    for (auto& r : rows) {
      if (r.status == RowStatus::Mismatch) ++report.mismatches;
      if (r.status == RowStatus::Open) ++report.open;
      if (r.status == RowStatus::Info) ++report.info;
      report.rows.push_back(std::move(r));
    }
  }
  return report;
}

std::vector<OrthoModel> default_battery() {
  std::vector<OrthoModel> models;
  models.push_back(mo2());
  models.push_back(o6());
  for (int k = 2; k <= 4; ++k) models.push_back(boolean(k));
  for (auto& g : greechie_oml_battery(9, 3)) models.push_back(std::move(g.model));
  return models;
}

std::string report_json(const CatalogReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json j;
    j["entry_id"] = row.entry_id;
    j["model"] = row.model;
    j["verdict"] = row.pass ? "pass" : "fail";
    j["expected"] = row.expected ? expect_name(*row.expected) : "any";
    j["status"] = status_name(row.status);
    if (row.counterexample) {
      j["counterexample"] = *row.counterexample;
      j["clause"] = *row.clause;
    }
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["entries"] = r.entries;
  out["rows"] = r.rows.size();
  out["mismatches"] = r.mismatches;
  out["open"] = r.open;
  out["info"] = r.info;
  out["results"] = std::move(rows);
  return out.dump(1) + "\n";
}

std::string report_text(const CatalogReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows) {
    out << row.entry_id << '\t' << row.model << '\t' << (row.pass ? "pass" : "fail") << '\t'
        << (row.expected ? expect_name(*row.expected) : "any") << '\t' << status_name(row.status);
    if (row.counterexample) out << '\t' << *row.counterexample;
    out << '\n';
  }
  out << "entries " << r.entries << " rows " << r.rows.size() << " mismatches " << r.mismatches << " open " << r.open
      << " info " << r.info << '\n';
  return out.str();
}

}  // namespace oml
