#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oml/catalog.hpp"
#include "oml/checker.hpp"
#include "oml/enumerate.hpp"
#include "oml/freeoml.hpp"
#include "oml/greechie.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oml::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kNotation = R"txt(Expression notation:
  a..z      variables          0, 1   constants
  -x        complement         (x v y)  join       (x ^ y)  meet
  (x >i y)  implication i=0..5 (x I y) is (x >1 y)
  (x ui y)  disjunction i=0..5 (x ni y) conjunction i=0..5
  (x =i y)  identity i=0..5    (x = y) is (x =5 y)
Conditions: atoms "l = r", "l < r", "xCy" joined by "&", "=>" before the
conclusion, e.g. "aCb & aCc => ((au3b)u3c) = (au3(bu3c))".
Models: mo2, o6, bool:K (K=1..5), greechie:FILE.
Parallelism: --threads N or the OML_THREADS environment variable.)txt";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string parse_error_message(const ParseError& e, const std::string& text) {
  std::ostringstream s;
  s << "parse error: " << e.what() << "\n  " << text << "\n  "
    << std::string(std::min(e.offset(), text.size()), ' ') << "^";
  return s.str();
}

std::vector<OpCode> parse_ops(const std::string& list) {
  std::vector<OpCode> ops;
  std::stringstream s(list);
  std::string token;
  while (std::getline(s, token, ',')) {
    if (token.empty()) continue;
    try {
      ops.push_back(parse_op_symbol(token));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown operation '" + token + "'");
    }
  }
  if (ops.empty()) throw UsageError("--ops needs at least one operation");
  return ops;
}

std::vector<OrthoModel> parse_models(const std::string& list) {
  std::vector<OrthoModel> models;
  std::stringstream s(list);
  std::string token;
  while (std::getline(s, token, ',')) {
    if (token.empty()) continue;
    if (token == "battery") {
      for (auto& m : default_battery()) models.push_back(std::move(m));
    } else {
      models.push_back(model_from_spec(token));
    }
  }
  if (models.empty()) throw UsageError("no models given");
  return models;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Expressions such as "-(avb)" look like flags to CLI11.
std::vector<std::string> protect_expressions(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& arg = args[k];
    const std::string prev = k ? args[k - 1] : "";
    bool dashed = arg.size() > 1 && arg[0] == '-' && arg != "-h" && arg != "--help";
    if (dashed && (prev == "--cond" || prev == "--target")) {
      out.back() += "=" + arg;
    } else if (dashed && prev == "reduce") {
      out.push_back("--");
      out.push_back(arg);
    } else {
      out.push_back(arg);
    }
  }
  return out;
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-variable orthomodular lattice toolkit", "oml"};
  app.footer(kNotation);
  app.require_subcommand(1);

  int threads = 0;
  std::string format = "text";
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string reduce_text;
  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical form in the free OML on a, b");
  reduce_cmd->add_option("expr", reduce_text, "Expression")->required();

  int count_v = 0, count_n = 0;
  auto* count_cmd = app.add_subcommand("count", "Number of expressions with V variables and N negations");
  count_cmd->add_option("V", count_v)->required();
  count_cmd->add_option("N", count_n)->required();

  int vars = 0, negs = 0, max_vars = 7;
  std::string ops_text, target_text, filter_o6;
  bool common = false, minimal = false;
  auto* search_cmd = app.add_subcommand("search", "Enumerate expressions over a set of operations");
  search_cmd->add_option("--vars", vars, "Variable occurrences");
  search_cmd->add_option("--negs", negs, "Negations");
  search_cmd->add_option("--ops", ops_text, "Comma-separated operations, e.g. u1,u2,u3")->required();
  search_cmd->add_flag("--common", common, "Keep expressions equal under every operation");
  search_cmd->add_option("--target", target_text, "Keep expressions equal to this one");
  search_cmd->add_option("--filter-o6", filter_o6, "Keep target equations that pass or fail on O6")
      ->check(CLI::IsMember({"pass", "fail"}));
  search_cmd->add_flag("--minimal", minimal, "Report the first nonempty (vars, negs) level for the target");
  search_cmd->add_option("--max-vars", max_vars, "Largest level tried by --minimal");

  std::string model_spec, cond_text;
  auto* check_cmd = app.add_subcommand("check", "Check a Horn condition on a finite model");
  check_cmd->add_option("--model", model_spec, "Model")->required();
  check_cmd->add_option("--cond", cond_text, "Condition")->required();

  std::string greechie_file;
  bool check_oml = false;
  std::vector<int> generate;
  auto* greechie_cmd = app.add_subcommand("greechie", "Build or generate Greechie diagrams");
  auto* file_opt = greechie_cmd->add_option("--file", greechie_file, "Diagram file, one block per line");
  greechie_cmd->add_flag("--check-oml", check_oml, "Exit 1 unless the pasting is orthomodular");
  auto* gen_opt = greechie_cmd->add_option("--generate", generate, "MAX_ATOMS BLOCKS")->expected(2);
  file_opt->excludes(gen_opt);

  std::string scan_model;
  bool dual = false;
  auto* scan_cmd = app.add_subcommand("scan-distrib", "Mixed distributivity scan over 6^5 operation tuples");
  scan_cmd->add_option("--model", scan_model, "Model")->required();
  scan_cmd->add_flag("--dual", dual, "Interchange joins and meets");

  std::string catalog_models = "battery", report = "text";
  auto* catalog_cmd = app.add_subcommand("catalog", "Law catalog");
  catalog_cmd->require_subcommand(1);
  auto* catalog_run = catalog_cmd->add_subcommand("run", "Check the catalog on models");
  catalog_run->add_option("--models", catalog_models, "Comma-separated models, or battery");
  catalog_run->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
  auto* catalog_list = catalog_cmd->add_subcommand("list", "Print entry ids and conditions");

  std::vector<std::string> protect = protect_expressions(args);
  std::vector<std::string> reversed(protect.rbegin(), protect.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("OML_THREADS")) threads = std::atoi(env);
  }
  set_threads(threads);
  const bool as_json = format == "json";

  std::string current_text;
  try {
    if (*reduce_cmd) {
      current_text = reduce_text;
      const CanonicalForm& f = reduce(parse(reduce_text));
      if (as_json) {
        json j{{"index", f.index}, {"beran", f.beran_xref ? json(*f.beran_xref) : json(nullptr)}, {"text", f.text}};
        out << j.dump() << '\n';
      } else {
        out << f.index << '\t' << (f.beran_xref ? std::to_string(*f.beran_xref) : "-") << '\t' << f.text << '\n';
      }
      return 0;
    }

    if (*count_cmd) {
      std::uint64_t n = 0;
      try {
        n = count_expressions(count_v, count_n);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      out << n << '\n';
      return 0;
    }

    if (*search_cmd) {
      std::vector<OpCode> ops = parse_ops(ops_text);
      std::optional<Expr> target;
      if (!target_text.empty()) {
        current_text = target_text;
        target = parse(target_text);
      }
      O6Filter filter = filter_o6.empty() ? O6Filter::None : filter_o6 == "pass" ? O6Filter::Pass : O6Filter::Fail;
      if (minimal) {
        if (!target) throw UsageError("--minimal needs --target");
        MinimalResult r = find_minimal(*target, {ops, max_vars, filter});
        if (as_json) {
          json j{{"vars", r.v}, {"negs", r.n}, {"raw", r.raw.size()}, {"collapsed", json::array()}};
          for (const auto& e : r.collapsed) j["collapsed"].push_back(render(e));
          out << j.dump() << '\n';
        } else {
          out << "vars " << r.v << " negs " << r.n << " raw " << r.raw.size() << " collapsed " << r.collapsed.size()
              << '\n';
          for (const auto& e : r.collapsed) out << render(e) << '\n';
        }
        return 0;
      }
      SearchSpec spec;
      spec.v = vars;
      spec.n = negs;
      spec.opset = ops;
      spec.common_only = common;
      spec.target = target;
      spec.o6_filter = filter;
      try {
        count_expressions(vars, negs);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      std::uint64_t hits = 0;
      enumerate(spec, [&](const Enumerated& e) {
        ++hits;
        if (as_json) {
          json forms = json::array();
          for (F2Element f : e.forms) forms.push_back(canonical_form(f).index);
          out << json{{"expr", render(e.expr)}, {"forms", forms}}.dump() << '\n';
        } else {
          out << render(e.expr) << '\t';
          for (std::size_t k = 0; k < e.forms.size(); ++k) out << (k ? "," : "") << canonical_form(e.forms[k]).index;
          out << '\n';
        }
      });
      if (!as_json) out << "total " << hits << '\n';
      return 0;
    }

    if (*check_cmd) {
      OrthoModel m = model_from_spec(model_spec);
      current_text = cond_text;
      Condition c = parse_condition(cond_text);
      CheckResult r = check_horn(m, c);
      if (as_json) {
        json j{{"model", m.name()}, {"verdict", r.pass ? "pass" : "fail"}};
        if (r.counterexample) j["counterexample"] = format_valuation(m, c, *r.counterexample);
        out << j.dump() << '\n';
      } else if (r.pass) {
        out << "pass\n";
      } else {
        out << "fail\t" << format_valuation(m, c, *r.counterexample) << '\n';
      }
      return r.pass ? 0 : 1;
    }

    if (*greechie_cmd) {
      if (!generate.empty()) {
        auto diagrams = generate_greechie(generate[0], generate[1]);
        for (std::size_t k = 0; k < diagrams.size(); ++k) {
          if (k) out << '\n';
          out << format_greechie(diagrams[k]);
        }
        return 0;
      }
      if (greechie_file.empty()) throw UsageError("greechie needs --file or --generate");
      GreechieDiagram d = parse_greechie(read_file(greechie_file));
      json j;
      bool oml = false;
      try {
        OrthoModel m = greechie_to_lattice(d);
        oml = m.is_orthomodular();
        j = {{"elements", m.size()}, {"lattice", true}, {"ortholattice", true}, {"orthomodular", oml}};
      } catch (const NotALatticeError& e) {
        j = {{"elements", nullptr}, {"lattice", false}, {"ortholattice", false}, {"orthomodular", false},
             {"reason", e.what()}};
      } catch (const OrthoAxiomError& e) {
        j = {{"elements", nullptr}, {"lattice", true}, {"ortholattice", false}, {"orthomodular", false},
             {"reason", e.what()}};
      }
      if (auto loop = shortest_loop(d)) j["shortest_loop"] = *loop;
      if (as_json) {
        out << j.dump() << '\n';
      } else {
        out << "elements " << (j["elements"].is_null() ? "-" : std::to_string(j["elements"].get<int>())) << '\n'
            << "lattice " << (j["lattice"].get<bool>() ? "yes" : "no") << '\n'
            << "ortholattice " << (j["ortholattice"].get<bool>() ? "yes" : "no") << '\n'
            << "orthomodular " << (oml ? "yes" : "no") << '\n';
        if (j.contains("reason")) out << "reason " << j["reason"].get<std::string>() << '\n';
      }
      return check_oml && !oml ? 1 : 0;
    }

    if (*scan_cmd) {
      OrthoModel m = model_from_spec(scan_model);
      auto tuples = scan_mixed_distributivity(m, dual);
      if (as_json) {
        out << json(tuples).dump() << '\n';
      } else {
        for (const auto& t : tuples) out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << ' ' << t[4] << '\n';
      }
      return 0;
    }

    if (*catalog_list) {
      for (const auto& e : corpus()) {
        out << e.id << '\t' << expect_name(e.oml);
        for (const auto& c : e.clauses) out << '\t' << render_condition(c);
        out << '\n';
      }
      return 0;
    }

    if (*catalog_run) {
      CatalogReport r = run_catalog(parse_models(catalog_models));
      out << (report == "json" ? report_json(r) : report_text(r));
      return r.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << parse_error_message(e, current_text) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace oml::cli
