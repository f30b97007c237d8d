#pragma once

// Catalog ingestion, pairwise relation graphs, refinement of edges through
// decompositions of their rational functions, chain extraction, modular
// polynomials and graph export.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moonrel/decomp.hpp"
#include "moonrel/relate.hpp"

namespace moonrel {

struct CatalogEntry {
  std::string name;
  Rational area;  // only ratios are meaningful
  QSeries series;
};

// One JSON object per line: {"name": ..., "area": "p/q", "coeffs": ["c0", ...]}.
// Blank lines are ignored.
std::vector<CatalogEntry> load_catalog(std::istream& in);
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& catalog);

enum class NodeOrigin { catalog, synthetic };

struct GraphNode {
  std::string name;
  QSeries series;
  NodeOrigin origin = NodeOrigin::catalog;
  std::optional<Rational> area;
};

/// from(q^r) = f(to(q)), deg f = d.
struct GraphEdge {
  std::string from;
  std::string to;
  unsigned d = 0;
  unsigned r = 0;
  RatFun f;
  long verified_to = 0;
};

class RelationGraph {
public:
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  const GraphNode* find(const std::string& name) const;
  const GraphNode& node(const std::string& name) const;  // throws unknown-node

  void add_node(GraphNode node);  // throws duplicate-name
  // False when a (from, to, r) edge is already present.
  bool add_edge(GraphEdge edge);
  void set_edges(std::vector<GraphEdge> edges);
  // Sorts edges by (from, to, r).
  void sort_edges();

  friend bool operator==(const RelationGraph& a, const RelationGraph& b);

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
};

// Line-delimited skips, warnings and synthetic-node notes.
struct ReportRecord {
  std::string kind;  // "skip", "warning", "synthetic", "match"
  std::string from;
  std::string to;
  std::string detail;
};

struct GraphReport {
  std::vector<ReportRecord> records;
  void write(std::ostream& out) const;
};

RelationGraph graph_from_catalog(const std::vector<CatalogEntry>& catalog);

// Runs the relation search on every ordered pair whose area ratio is an
// integer e <= e_max. Pairs are independent and may run on `jobs` threads;
// the edge list is sorted afterwards.
RelationGraph build_graph(const std::vector<CatalogEntry>& catalog, unsigned e_max,
                          GraphReport* report = nullptr, unsigned jobs = 1);

// Splits every decomposable edge through intermediate nodes until no edge
// splits further.
RelationGraph refine_graph(const RelationGraph& g, GraphReport* report = nullptr);

using EdgePath = std::vector<GraphEdge>;

std::vector<EdgePath> maximal_chains(const RelationGraph& g, const std::string& from,
                                     const std::string& to);

// P(x, y) = num1(x) den2(y) - num2(y) den1(x), obtained as a resultant and
// made primitive over the integers. Outer variable x, inner y.
PolyOverPoly modular_polynomial(const RatFun& f1, unsigned k1, const RatFun& f2, unsigned k2);

// Substitutes x = s(q^k1), y = s(q^k2) and returns the result.
Laurent eval_modular_polynomial(const PolyOverPoly& p, const QSeries& s, unsigned k1, unsigned k2);

// Two relations target(q^r1) = f1(s(q)), target(q^r2) = f2(s(q)) with
// r1 != r2, and the polynomial they induce: P(s(q^k1), s(q^k2)) = 0 with
// k1 = r2 / g, k2 = r1 / g, g = gcd(r1, r2).
struct DoubleRelation {
  std::string partner;
  Relation first;
  Relation second;
  unsigned k1 = 0;
  unsigned k2 = 0;
  PolyOverPoly p;
  long verified_to = 0;
};

DoubleRelation make_double_relation(const std::string& partner, const QSeries& s, const Relation& first,
                                    const Relation& second);

// Scans every other catalog entry A against `target` (the inner series) for
// e = 1..e_max in exhaustive-r mode and pairs the two lowest distinct r.
std::vector<DoubleRelation> double_relations(const std::vector<CatalogEntry>& catalog,
                                             const std::string& target, unsigned e_max);

enum class ExportFormat { dot, jsonlines };

std::string export_graph(const RelationGraph& g, ExportFormat format);
RelationGraph load_graph_jsonlines(std::istream& in);

}  // namespace moonrel
