// moonrel: decomposition, relation search and relation graphs from the
// command line.
//
// Exit status: 0 result printed, 3 no relation / indecomposable / no chain,
// 1 usage error, 2 data error (category printed on stderr).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "moonrel/moongraph.hpp"
#include "moonrel/parse.hpp"

using namespace moonrel;

namespace {

constexpr int kResult = 0;
constexpr int kUsage = 1;
constexpr int kDataError = 2;
constexpr int kNothing = 3;

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  return out;
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
  auto in = open_in(path);
  return load_catalog(in);
}

RelationGraph read_graph(const std::string& path) {
  auto in = open_in(path);
  return load_graph_jsonlines(in);
}

const CatalogEntry& entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& c : catalog)
    if (c.name == name) return c;
  throw Error(ErrorKind::unknown_node, name);
}

void fail_verification(const std::string& what) { throw Error(ErrorKind::verification_failure, what); }

std::string degrees(const std::vector<RatFun>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + std::to_string(p.degree());
  return out;
}

// Re-parses printed text so --verify checks exactly what was printed.
RatFun reparse(const RatFun& f) { return parse_ratfun(f.to_string()); }

int run_decompose(const std::string& text, bool chains, bool verify) {
  RatFun f = parse_ratfun(text);
  std::cout << "f = " << f.to_string() << "\n";
  if (chains) {
    auto all = all_chains(f);
    if (all.size() == 1 && all.front().components.size() == 1) {
      std::cout << "indecomposable\n";
      return kNothing;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& c = all[i].components;
      std::cout << "chain " << i + 1 << " length " << c.size() << " degrees " << degrees(c) << ":";
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? " o " : " ") << "[" << c[k].to_string() << "]";
      std::cout << "\n";
      if (verify) {
        DecompositionChain back;
        for (const auto& g : c) back.components.push_back(reparse(g));
        if (back.compose_all() != f) fail_verification("chain " + std::to_string(i + 1) + " does not recompose");
        for (const auto& g : back.components)
          if (!is_indecomposable(g)) fail_verification("chain " + std::to_string(i + 1) + " has a decomposable link");
      }
    }
    return kResult;
  }
  auto splits = decompose_one_level(f);
  if (splits.empty()) {
    std::cout << "indecomposable\n";
    return kNothing;
  }
  for (const auto& d : splits) {
    std::cout << "degrees " << d.outer.degree() << "*" << d.inner.degree() << ": [" << d.outer.to_string()
              << "] o [" << d.inner.to_string() << "]\n";
    if (verify && compose(reparse(d.outer), reparse(d.inner)) != f) fail_verification("split does not recompose");
  }
  return kResult;
}

void print_relation(const std::string& prefix, const Relation& rel) {
  std::cout << prefix << "r=" << rel.r << " e=" << rel.e << " f=" << rel.f.to_string()
            << " verified_to=" << rel.verified_to << "\n";
}

void check_relation(const CatalogEntry& a, const CatalogEntry& b, const Relation& rel) {
  Relation back{rel.r, reparse(rel.f), rel.e, 0};
  long v = verify_relation(a.series, b.series, back);
  if (v != relation_precision(a.series, b.series, back.r, back.f))
    fail_verification("relation stops vanishing after q^" + std::to_string(v));
}

std::string_view outcome_name(RelationOutcome o) {
  switch (o) {
    case RelationOutcome::found: return "found";
    case RelationOutcome::none: return "none";
    case RelationOutcome::underdetermined: return "underdetermined-system";
    case RelationOutcome::insufficient_precision: return "insufficient-precision";
  }
  return "?";
}

int run_relate(const std::string& catalog_path, const std::string& from, const std::string& to,
               std::optional<unsigned> e_fixed, std::optional<unsigned> e_max, bool all_r, bool verify) {
  auto catalog = read_catalog(catalog_path);
  const auto& a = entry(catalog, from);
  const auto& b = entry(catalog, to);

  std::vector<unsigned> degrees_to_try;
  if (e_fixed) {
    degrees_to_try.push_back(*e_fixed);
  } else if (e_max) {
    for (unsigned e = 1; e <= *e_max; ++e) degrees_to_try.push_back(e);
  } else {
    auto e = degree_from_areas(a.area, b.area);
    if (!e) {
      std::cout << "none (area ratio " << Rational(b.area / a.area).get_str() << " is not a natural number)\n";
      return kNothing;
    }
    degrees_to_try.push_back(*e);
  }

  bool any = false;
  for (unsigned e : degrees_to_try) {
    if (all_r) {
      for (const auto& att : find_relations_all_r(a.series, b.series, e)) {
        if (att.relation) {
          print_relation("e=" + std::to_string(e) + " found ", *att.relation);
          if (verify) check_relation(a, b, *att.relation);
          any = true;
        } else {
          std::cout << "e=" << e << " r=" << att.r << " " << outcome_name(att.outcome) << "\n";
        }
      }
      continue;
    }
    std::optional<Relation> rel;
    try {
      rel = find_relation(a.series, b.series, e);
    } catch (const Error& err) {
      // A scan simply stops where the data runs out.
      if (e_fixed || err.kind() != ErrorKind::insufficient_precision) throw;
      break;
    }
    if (rel) {
      print_relation("", *rel);
      if (verify) check_relation(a, b, *rel);
      return kResult;
    }
  }
  if (!any) std::cout << "none\n";
  return any ? kResult : kNothing;
}

void write_report(const std::string& path, const GraphReport& report) {
  if (path.empty()) return;
  auto out = open_out(path);
  report.write(out);
}

void write_graph(const std::string& path, const RelationGraph& g) {
  auto out = open_out(path);
  out << export_graph(g, ExportFormat::jsonlines);
}

void verify_graph(const RelationGraph& g) {
  for (const auto& e : g.edges()) {
    const auto& a = g.node(e.from).series;
    const auto& b = g.node(e.to).series;
    Relation rel{e.r, reparse(e.f), e.d, 0};
    long v = verify_relation(a, b, rel);
    if (v != relation_precision(a, b, e.r, rel.f)) fail_verification("edge " + e.from + " -> " + e.to);
  }
}

int run_graph_build(const std::string& catalog_path, const std::string& out, const std::string& report_path,
                    unsigned e_max, unsigned jobs, bool verify) {
  auto catalog = read_catalog(catalog_path);
  GraphReport report;
  RelationGraph g = build_graph(catalog, e_max, &report, jobs);
  if (verify) verify_graph(g);
  write_graph(out, g);
  write_report(report_path, report);
  std::cout << "nodes " << g.nodes().size() << " edges " << g.edges().size() << "\n";
  return kResult;
}

int run_graph_refine(const std::string& in, const std::string& out, const std::string& report_path, bool verify) {
  RelationGraph g = read_graph(in);
  GraphReport report;
  RelationGraph refined = refine_graph(g, &report);
  if (verify) verify_graph(refined);
  write_graph(out, refined);
  write_report(report_path, report);
  std::cout << "nodes " << refined.nodes().size() << " edges " << refined.edges().size() << "\n";
  return kResult;
}

int run_chains(const std::string& in, const std::string& from, const std::string& to) {
  RelationGraph g = read_graph(in);
  auto paths = maximal_chains(g, from, to);
  if (paths.empty()) {
    std::cout << "none\n";
    return kNothing;
  }
  for (const auto& path : paths) {
    std::cout << path.front().from;
    for (const auto& e : path) std::cout << " -[d=" << e.d << ",r=" << e.r << "]-> " << e.to;
    std::cout << "\n";
  }
  return kResult;
}

int run_modpoly(const std::string& catalog_path, const std::string& target, unsigned e_max, bool verify) {
  auto catalog = read_catalog(catalog_path);
  auto found = double_relations(catalog, target, e_max);
  if (found.empty()) {
    std::cout << "none\n";
    return kNothing;
  }
  for (const auto& d : found) {
    std::cout << "via " << d.partner << ": r=" << d.first.r << " f1=" << d.first.f.to_string() << "; r=" << d.second.r
              << " f2=" << d.second.f.to_string() << "\n";
    std::cout << "P(" << target << "(q^" << d.k1 << "), " << target << "(q^" << d.k2
              << ")) = 0 verified_to=" << d.verified_to << "\n";
    std::cout << "P(x,y) = " << d.p.to_string('x', 'y') << "\n";
    if (verify) {
      Laurent v = eval_modular_polynomial(d.p, entry(catalog, target).series, d.k1, d.k2);
      if (!v.is_zero()) fail_verification("P does not vanish via " + d.partner);
    }
  }
  return kResult;
}

int run_export(const std::string& in, const std::string& format) {
  RelationGraph g = read_graph(in);
  std::cout << export_graph(g, format == "dot" ? ExportFormat::dot : ExportFormat::jsonlines);
  return kResult;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational relations between q-series and decompositions of rational functions"};
  app.require_subcommand(1);
  bool verify = false;
  app.add_flag("--verify", verify, "Re-parse and re-check every printed result");

  std::string text;
  bool chains = false;
  auto* decompose = app.add_subcommand("decompose", "Decompose a rational function in x");
  decompose->add_option("f", text, "Rational function, e.g. \"x^2/(x-1)\"")->required();
  decompose->add_flag("--chains", chains, "Print every complete chain");
  decompose->add_flag("--verify", verify);

  std::string catalog, from, to, target, in, out, report, format;
  std::optional<unsigned> e_fixed, e_max_opt;
  bool all_r = false;
  auto* relate = app.add_subcommand("relate", "Search for from(q^r) = f(to(q))");
  relate->add_option("--catalog", catalog)->required()->check(CLI::ExistingFile);
  relate->add_option("--from", from)->required();
  relate->add_option("--to", to)->required();
  auto* e_opt = relate->add_option("--e", e_fixed, "Relation degree")->check(CLI::PositiveNumber);
  relate->add_option("--emax", e_max_opt, "Scan degrees 1..emax")->check(CLI::PositiveNumber)->excludes(e_opt);
  relate->add_flag("--all-r", all_r, "Report every r instead of the first success");
  relate->add_flag("--verify", verify);

  unsigned e_max = 12, jobs = 1;
  auto* build = app.add_subcommand("graph-build", "Pairwise relation graph of a catalog");
  build->add_option("--catalog", catalog)->required()->check(CLI::ExistingFile);
  build->add_option("--out", out)->required();
  build->add_option("--report", report);
  build->add_option("--emax", e_max)->check(CLI::PositiveNumber);
  build->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  build->add_flag("--verify", verify);

  auto* refine = app.add_subcommand("graph-refine", "Split decomposable edges through intermediate nodes");
  refine->add_option("--in", in)->required()->check(CLI::ExistingFile);
  refine->add_option("--out", out)->required();
  refine->add_option("--report", report);
  refine->add_flag("--verify", verify);

  auto* chain_cmd = app.add_subcommand("chains", "Maximal chains of indecomposable edges");
  chain_cmd->add_option("--in", in)->required()->check(CLI::ExistingFile);
  chain_cmd->add_option("--from", from)->required();
  chain_cmd->add_option("--to", to)->required();

  auto* modpoly = app.add_subcommand("modpoly", "Polynomial relation from two relations with distinct r");
  modpoly->add_option("--catalog", catalog)->required()->check(CLI::ExistingFile);
  modpoly->add_option("--target", target)->required();
  modpoly->add_option("--emax", e_max)->check(CLI::PositiveNumber);
  modpoly->add_flag("--verify", verify);

  auto* exp = app.add_subcommand("export", "Print a graph as DOT or JSON lines");
  exp->add_option("--in", in)->required()->check(CLI::ExistingFile);
  exp->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "jsonlines"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*decompose) return run_decompose(text, chains, verify);
    if (*relate) return run_relate(catalog, from, to, e_fixed, e_max_opt, all_r, verify);
    if (*build) return run_graph_build(catalog, out, report, e_max, jobs, verify);
    if (*refine) return run_graph_refine(in, out, report, verify);
    if (*chain_cmd) return run_chains(in, from, to);
    if (*modpoly) return run_modpoly(catalog, target, e_max, verify);
    if (*exp) return run_export(in, format);
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
