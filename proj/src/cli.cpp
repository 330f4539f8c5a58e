#include "tiltlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tiltlab/bijectlab.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/io.hpp"
#include "tiltlab/oracle.hpp"

namespace tiltlab {

namespace {

constexpr int kTableBudgetA = 6;
constexpr int kTableBudgetD = 5;

struct RunConfig {
  std::string family;
  std::string quiver_file;
  unsigned p = 2;
  std::string set;
  bool sincere = false;
  std::string json_path;
  std::string oracle = "on";
  bool oracle_explicit = false;
  int max_dim = kDefaultSubRepBound;
  int max_n = 0;
};

std::string quiver_label(const RunConfig& cfg) { return cfg.family.empty() ? cfg.quiver_file : cfg.family; }

Quiver load_quiver(const RunConfig& cfg) {
  if (cfg.family.empty() == cfg.quiver_file.empty())
    throw InputError("usage", "give exactly one of --family and --quiver");
  Quiver q = cfg.family.empty() ? read_quiver_file(cfg.quiver_file) : family_quiver(cfg.family);
  require_dynkin(q);
  if (!is_prime(cfg.p) || cfg.p > 65521) throw InputError("bad-prime", "--p must be a prime below 65536");
  return q;
}

void write_json(const RunConfig& cfg, const Json& j) {
  if (cfg.json_path.empty()) return;
  std::ofstream f(cfg.json_path);
  if (!f) throw InputError("bad-file", "cannot write " + cfg.json_path);
  f << j.dump(2) << '\n';
}

std::string root_text(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string class_text(const Census& c, const ModuleClass& mc) {
  std::string s = "{";
  bool first = true;
  mc.for_each([&](int i) {
    s += (first ? "" : " ") + root_text(c.root(i));
    first = false;
  });
  return s + "}";
}

void print_table(std::ostream& out, const std::string& title, const Table& t) {
  out << title << ":\n";
  for (const auto& row : t) {
    out << " ";
    for (int x : row) out << ' ' << x;
    out << '\n';
  }
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  const auto c = Census::build(load_quiver(cfg), cfg.p, Exec::parallel);
  out << quiver_label(cfg) << " over F_" << cfg.p << ": " << c.size() << " indecomposables\n";
  for (int i = 0; i < c.size(); ++i) out << "  " << i << "  " << root_text(c.root(i)) << '\n';
  print_table(out, "Hom dimensions", c.hom_table());
  print_table(out, "Ext dimensions", c.ext_table());
  write_json(cfg, census_to_json(c));
  return kExitPass;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto kind = parse_set_name(cfg.set);
  if (!kind) throw InputError("bad-set", "unknown set '" + cfg.set + "'");
  const auto c = Census::build(load_quiver(cfg), cfg.p, Exec::parallel);
  auto items = enumerate_set(c, *kind, Exec::parallel);
  if (cfg.sincere) {
    const int n = c.quiver().vertex_count();
    std::erase_if(items, [&](const ModuleClass& x) { return element_support(c, x).size() != n; });
  }
  out << quiver_label(cfg) << " over F_" << cfg.p << ": " << items.size() << ' ' << (cfg.sincere ? "sincere " : "")
      << cfg.set << " entries\n";
  Json elements = Json::array();
  for (const auto& x : items) {
    out << "  " << class_text(c, x) << '\n';
    elements.push_back(class_to_json(x));
  }
  write_json(cfg, Json{{"quiver", quiver_to_json(c.quiver())},
                       {"p", cfg.p},
                       {"set", cfg.set},
                       {"sincere", cfg.sincere},
                       {"count", items.size()},
                       {"elements", std::move(elements)}});
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto q = load_quiver(cfg);
  const auto c = Census::build(q, cfg.p, Exec::parallel);
  const auto report = verify_bijections(c, Exec::parallel);
  const auto op = Census::build(q.opposite(), cfg.p, Exec::parallel);

  Json oracle{{"ran", false}};
  bool oracle_ok = true;
  const bool within_bounds = c.size() <= ClosureSpec{}.max_indecs &&
                             std::all_of(c.indecs().begin(), c.indecs().end(),
                                         [&](const Representation& x) { return x.total_dim() <= cfg.max_dim; });
  if (cfg.oracle == "on" && !within_bounds && cfg.oracle_explicit)
    throw InputError("oracle-bound", "census is beyond the oracle bounds; use --oracle off");
  if (cfg.oracle == "on" && within_bounds) {
    oracle["ran"] = true;
    auto compare = [&](ClosureKind kind, SetKind set, const char* key) {
      ClosureSpec spec;
      spec.kind = kind;
      spec.dim_bound = cfg.max_dim;
      const auto classes = all_closed_classes(c, spec, Exec::parallel);
      const bool match = classes == enumerate_set(c, op, set, Exec::parallel);
      // Each closed class is covered (cocovered) by the sum of its members.
      const bool covers = std::all_of(classes.begin(), classes.end(), [&](const IndexSet& s) {
        return s.is_subset_of(kind == ClosureKind::torsionfree ? cogen_class(c, s) : gen_class(c, s));
      });
      oracle[key] = Json{{"count", classes.size()}, {"match", match}, {"covers", covers}};
      oracle_ok = oracle_ok && match && covers;
    };
    compare(ClosureKind::torsion, SetKind::torsion, "torsion");
    compare(ClosureKind::torsionfree, SetKind::torsionfree, "torsionfree");
    compare(ClosureKind::thick, SetKind::thick, "thick");
  }
  const bool pass = report.passed() && oracle_ok;

  auto j = report_to_json(report);
  j["quiver"] = quiver_to_json(q);
  j["oracle"] = oracle;
  j["pass"] = pass;
  write_json(cfg, j);

  out << quiver_label(cfg) << " over F_" << cfg.p << ": " << (pass ? "PASS" : "FAIL") << '\n';
  out << "  counts";
  for (auto n : report.counts) out << ' ' << n;
  out << "\n  sincere";
  for (auto n : report.sincere_counts) out << ' ' << n;
  out << "\n  root poset antichains " << report.root_poset_antichains << '\n';
  std::size_t checks = 0, passed = 0;
  for (const auto* group : {&report.roundtrips, &report.supplements, &report.support, &report.duality})
    for (const auto& k : *group) {
      ++checks;
      passed += k.pass;
      if (!k.pass) {
        err << "failed: " << k.name;
        if (!k.witness.empty()) err << " witness " << class_text(c, IndexSet::of(k.witness));
        if (!k.detail.empty()) err << " (" << k.detail << ")";
        err << '\n';
      }
    }
  out << "  checks " << passed << '/' << checks << " passed\n";
  if (oracle["ran"].get<bool>()) {
    out << "  oracle torsion " << oracle["torsion"]["count"] << ", torsionfree " << oracle["torsionfree"]["count"]
        << ", thick " << oracle["thick"]["count"] << (oracle_ok ? " (agree)" : " (DISAGREE)") << '\n';
  } else {
    out << "  oracle skipped\n";
  }
  return pass ? kExitPass : kExitFailure;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const std::string fam = cfg.family;
  if (fam != "A" && fam != "D") throw InputError("usage", "table needs --family A or --family D");
  const int budget = fam == "A" ? kTableBudgetA : kTableBudgetD;
  const int max_n = cfg.max_n > 0 ? cfg.max_n : budget;
  if (max_n > budget)
    throw InputError("budget", "--max-n " + std::to_string(max_n) + " exceeds the budget " + std::to_string(budget));
  const int first = fam == "A" ? 1 : 4;
  if (!is_prime(cfg.p) || cfg.p > 65521) throw InputError("bad-prime", "--p must be a prime below 65536");

  out << "support-tilting classes by support rank, family " << fam << ", F_" << cfg.p << '\n';
  out << "n   total  by rank 0..n\n";
  Json rows = Json::array();
  for (int n = first; n <= max_n; ++n) {
    const auto c = Census::build(family_quiver(fam + std::to_string(n)), cfg.p, Exec::parallel);
    std::vector<std::size_t> by_rank(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& t : support_tilting_census(c, Exec::parallel)) ++by_rank[static_cast<std::size_t>(support_rank(c, t))];
    std::size_t total = 0;
    for (auto x : by_rank) total += x;
    out << std::left << std::setw(4) << n << std::setw(7) << total;
    for (auto x : by_rank) out << ' ' << x;
    out << '\n';
    rows.push_back(Json{{"n", n}, {"total", total}, {"byRank", by_rank}});
  }
  write_json(cfg, Json{{"family", fam}, {"p", cfg.p}, {"rows", std::move(rows)}});
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seven-way bijection checker for Dynkin quivers over prime fields", "tiltlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_quiver = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "built-in quiver such as A3, D4 or A3:><");
    sub->add_option("--quiver", cfg.quiver_file, "quiver JSON file");
    sub->add_option("--p", cfg.p, "prime field modulus")->capture_default_str();
    sub->add_option("--json", cfg.json_path, "write machine-readable output here");
  };
  auto* census = app.add_subcommand("census", "build every indecomposable and the Hom/Ext tables");
  add_quiver(census);
  auto* enumerate = app.add_subcommand("enumerate", "list one of the seven sets");
  add_quiver(enumerate);
  enumerate->add_option("--set", cfg.set, "antichains|thick|normal|support-tilting|torsion|conormal|torsionfree")
      ->required();
  enumerate->add_flag("--sincere", cfg.sincere, "keep only elements with full support");
  auto* verify = app.add_subcommand("verify", "check every bijection, the oracle and the root poset");
  add_quiver(verify);
  auto* oracle_opt = verify->add_option("--oracle", cfg.oracle, "on|off")->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--max-dim", cfg.max_dim, "subrepresentation dimension bound for the oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* table = app.add_subcommand("table", "support-tilting counts by support rank for A or D");
  table->add_option("--family", cfg.family, "A or D")->required();
  table->add_option("--p", cfg.p, "prime field modulus")->capture_default_str();
  table->add_option("--max-n", cfg.max_n, "largest rank (A: at most 6, D: at most 5)");
  table->add_option("--json", cfg.json_path, "write machine-readable output here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << diagnostic_json("usage", e.what(), {}).dump() << '\n';
    return kExitUsage;
  }
  cfg.oracle_explicit = oracle_opt->count() > 0;

  try {
    if (census->parsed()) return cmd_census(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    return cmd_table(cfg, out);
  } catch (const InputError& e) {
    err << diagnostic_json(e.code(), e.what(), e.witness()).dump() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << diagnostic_json("internal", e.what(), {}).dump() << '\n';
    return kExitFailure;
  }
}

}  // namespace tiltlab
