#include "moonrel/moongraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace moonrel {

const GraphNode* RelationGraph::find(const std::string& name) const {
  for (const auto& n : nodes_)
    if (n.name == name) return &n;
  return nullptr;
}

const GraphNode& RelationGraph::node(const std::string& name) const {
  const GraphNode* n = find(name);
  if (!n) throw Error(ErrorKind::unknown_node, name);
  return *n;
}

void RelationGraph::add_node(GraphNode node) {
  if (find(node.name)) throw Error(ErrorKind::duplicate_name, node.name);
  nodes_.push_back(std::move(node));
}

bool RelationGraph::add_edge(GraphEdge edge) {
  for (const auto& e : edges_)
    if (e.from == edge.from && e.to == edge.to && e.r == edge.r) return false;
  edges_.push_back(std::move(edge));
  return true;
}

void RelationGraph::set_edges(std::vector<GraphEdge> edges) {
  edges_.clear();
  for (auto& e : edges) add_edge(std::move(e));
}

void RelationGraph::sort_edges() {
  std::stable_sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.from, a.to, a.r) < std::tie(b.from, b.to, b.r);
  });
}

bool operator==(const RelationGraph& a, const RelationGraph& b) {
  auto node_eq = [](const GraphNode& x, const GraphNode& y) {
    return x.name == y.name && x.series == y.series && x.origin == y.origin && x.area == y.area;
  };
  auto edge_eq = [](const GraphEdge& x, const GraphEdge& y) {
    return x.from == y.from && x.to == y.to && x.d == y.d && x.r == y.r && x.f == y.f &&
           x.verified_to == y.verified_to;
  };
  return std::equal(a.nodes_.begin(), a.nodes_.end(), b.nodes_.begin(), b.nodes_.end(), node_eq) &&
         std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), edge_eq);
}

RelationGraph graph_from_catalog(const std::vector<CatalogEntry>& catalog) {
  RelationGraph g;
  for (const auto& c : catalog) g.add_node({c.name, c.series, NodeOrigin::catalog, c.area});
  return g;
}

// ---------------------------------------------------------------------------
// Pairwise construction

RelationGraph build_graph(const std::vector<CatalogEntry>& catalog, unsigned e_max,
                          GraphReport* report, unsigned jobs) {
  if (catalog.empty()) throw Error(ErrorKind::invalid_argument, "empty catalog");
  RelationGraph g = graph_from_catalog(catalog);

  struct PairResult {
    std::optional<GraphEdge> edge;
    std::optional<ReportRecord> note;
  };
  const std::size_t n = catalog.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<PairResult> results(pairs.size());

  auto run_pair = [&](std::size_t idx) {
    const CatalogEntry& a = catalog[pairs[idx].first];
    const CatalogEntry& b = catalog[pairs[idx].second];
    PairResult& out = results[idx];
    auto skip = [&](std::string why) { out.note = ReportRecord{"skip", a.name, b.name, std::move(why)}; };
    auto e = degree_from_areas(a.area, b.area);
    if (!e) return skip("area ratio is not a natural number");
    if (*e > e_max) return skip("degree " + std::to_string(*e) + " exceeds e_max");
    long need = 2L * *e + 1;
    if (a.series.prec() < need || b.series.prec() < need)
      return skip("precision below 2e+1 for e=" + std::to_string(*e));
    try {
      auto rel = find_relation(a.series, b.series, *e);
      if (!rel) return skip("no relation of degree " + std::to_string(*e));
      if (rel->e == 1) return skip("degree-1 relation suppressed");
      out.edge = GraphEdge{a.name, b.name, rel->e, rel->r, rel->f, rel->verified_to};
    } catch (const Error& err) {
      skip(err.what());
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) run_pair(i);
  } else {
    std::size_t next = 0;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= pairs.size()) return;
            i = next++;
          }
          run_pair(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (auto& res : results) {
    if (res.edge) g.add_edge(std::move(*res.edge));
    if (res.note && report) report->records.push_back(std::move(*res.note));
  }
  g.sort_edges();
  return g;
}

// ---------------------------------------------------------------------------
// Refinement

namespace {

constexpr std::size_t kKeyLength = 16;

// x -> c*x + k as a RatFun.
RatFun affine(const Rational& c, const Rational& k) { return RatFun(Poly{k, c}); }

struct SplitResult {
  GraphEdge upper;  // from -> mid
  GraphEdge lower;  // mid -> to
  std::optional<GraphNode> new_node;
};

class Refiner {
public:
  Refiner(RelationGraph g, GraphReport* report) : g_(std::move(g)), report_(report) {
    for (const auto& n : g_.nodes())
      if (n.origin == NodeOrigin::synthetic) ++synthetic_count_;
  }

  RelationGraph run() {
    // Each split strictly lowers edge degrees, so the number of rounds is
    // bounded by the longest possible chain.
    std::size_t max_rounds = 1;
    for (const auto& e : g_.edges())
      max_rounds += static_cast<std::size_t>(std::ceil(std::log2(std::max(2u, e.d))));
    for (std::size_t round = 0;; ++round) {
      if (round > max_rounds) throw Error(ErrorKind::verification_failure, "refinement did not reach a fixpoint");
      if (!step()) break;
    }
    g_.sort_edges();
    return std::move(g_);
  }

private:
  const std::vector<Decomposition>& splits_of(const RatFun& f) {
    std::string key = f.to_string();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, decompose_one_level(f)).first;
    return it->second;
  }

  void note(std::string kind, const GraphEdge& e, std::string detail) {
    if (report_) report_->records.push_back({std::move(kind), e.from, e.to, std::move(detail)});
  }

  bool step() {
    bool changed = false;
    std::vector<GraphEdge> next;
    for (const auto& edge : g_.edges()) {
      if (edge.d < 4 || skipped_.count(edge_key(edge))) {
        next.push_back(edge);
        continue;
      }
      bool accepted = false;
      for (const auto& d : splits_of(edge.f)) {
        auto split = try_split(edge, d);
        if (!split) continue;
        accepted = true;
        next.push_back(std::move(split->upper));
        next.push_back(std::move(split->lower));
      }
      if (accepted) {
        changed = true;
      } else {
        skipped_.insert(edge_key(edge));
        next.push_back(edge);
      }
    }
    g_.set_edges(std::move(next));
    return changed;
  }

  static std::string edge_key(const GraphEdge& e) {
    return e.from + "\n" + e.to + "\n" + std::to_string(e.r);
  }

  std::optional<SplitResult> try_split(const GraphEdge& edge, const Decomposition& dec) {
    const GraphNode target = g_.node(edge.to);
    RatFun g = dec.outer;
    RatFun h = dec.inner;

    // Put the pole of h at infinity, then make its expansion start with q^-s.
    ExtRational at_inf = h.at_infinity();
    if (!at_inf.infinite) {
      MoebiusUnit w(0, 1, 1, -at_inf.value);
      h = compose(w.to_ratfun(), h);
      g = compose(g, unit_inverse(w).to_ratfun());
    }
    const long pole = h.num().degree() - h.den().degree();
    Rational lead = h.num().leading() / h.den().leading();
    h = compose(affine(1 / lead, 0), h);
    g = compose(g, affine(lead, 0));

    Laurent t = eval_ratfun_at_series(h, target.series);
    const long s = power_support(t);
    if (s != pole) {
      note("warning", edge,
           "split with inner degree " + std::to_string(h.degree()) + " gives an intermediate q^-" +
               std::to_string(pole / s) + " series; skipped");
      return std::nullopt;
    }
    if (edge.r % s != 0) {
      note("warning", edge, "power support " + std::to_string(s) + " does not divide r=" +
                                std::to_string(edge.r) + "; skipped");
      return std::nullopt;
    }
    QSeries mid = QSeries::from_laurent(compress_power(t, s));

    // Match an existing node up to an additive constant, otherwise create a
    // synthetic one with zero constant term.
    std::optional<GraphNode> created;
    std::string mid_name;
    Rational shift;
    const GraphNode* match = find_match(mid);
    if (match) {
      mid_name = match->name;
      shift = match->series.coeffs()[0] - mid.coeffs()[0];
      if (report_) report_->records.push_back({"match", edge.from, edge.to, mid_name});
    } else {
      do {
        mid_name = "X" + std::to_string(++synthetic_count_);
      } while (g_.find(mid_name));
      shift = -mid.coeffs()[0];
    }
    h = compose(affine(1, shift), h);
    g = compose(g, affine(1, -shift));
    if (!match) {
      std::vector<Rational> c = mid.coeffs();
      c[0] += shift;
      created = GraphNode{mid_name, QSeries(std::move(c)), NodeOrigin::synthetic, std::nullopt};
      g_.add_node(*created);
      if (report_) report_->records.push_back({"synthetic", edge.from, edge.to, mid_name});
    }
    const QSeries& mid_series = g_.node(mid_name).series;
    const QSeries& from_series = g_.node(edge.from).series;

    SplitResult out{{edge.from, mid_name, g.degree(), static_cast<unsigned>(edge.r / s), g, 0},
                    {mid_name, edge.to, h.degree(), static_cast<unsigned>(s), h, 0},
                    created};
    for (GraphEdge* e : {&out.upper, &out.lower}) {
      const QSeries& src = e == &out.upper ? from_series : mid_series;
      const QSeries& dst = e == &out.upper ? mid_series : target.series;
      Relation rel{e->r, e->f, e->d, 0};
      long v = verify_relation(src, dst, rel);
      if (v != relation_precision(src, dst, e->r, e->f))
        throw Error(ErrorKind::verification_failure,
                    "split edge " + e->from + " -> " + e->to + " fails to verify (stops at q^" +
                        std::to_string(v + 1) + ")");
      e->verified_to = v;
    }
    return out;
  }

  const GraphNode* find_match(const QSeries& s) const {
    for (const auto& n : g_.nodes()) {
      long common = std::min(n.series.prec(), s.prec());
      long key_end = std::min<long>(common, static_cast<long>(kKeyLength) - 1);
      if (key_end < 1) continue;
      bool same = true;
      for (long k = 1; k <= key_end && same; ++k)
        same = n.series.coeffs()[static_cast<std::size_t>(k)] == s.coeffs()[static_cast<std::size_t>(k)];
      if (!same) continue;
      for (long k = key_end + 1; k <= common; ++k)
        if (n.series.coeffs()[static_cast<std::size_t>(k)] != s.coeffs()[static_cast<std::size_t>(k)])
          throw Error(ErrorKind::verification_failure,
                      "series agrees with node " + n.name + " on its key prefix but differs at q^" +
                          std::to_string(k));
      return &n;
    }
    return nullptr;
  }

  RelationGraph g_;
  GraphReport* report_;
  std::size_t synthetic_count_ = 0;
  std::map<std::string, std::vector<Decomposition>> cache_;
  std::set<std::string> skipped_;
};

}  // namespace

RelationGraph refine_graph(const RelationGraph& g, GraphReport* report) {
  return Refiner(g, report).run();
}

// ---------------------------------------------------------------------------
// Chains

std::vector<EdgePath> maximal_chains(const RelationGraph& g, const std::string& from,
                                     const std::string& to) {
  g.node(from);
  g.node(to);
  if (from == to) return {EdgePath{}};

  std::map<std::string, bool> indecomposable;
  auto usable = [&](const GraphEdge& e) {
    std::string key = e.f.to_string();
    auto it = indecomposable.find(key);
    if (it == indecomposable.end()) it = indecomposable.emplace(key, is_indecomposable(e.f)).first;
    return it->second;
  };

  std::vector<EdgePath> out;
  EdgePath path;
  std::set<std::string> visited = {from};
  std::function<void(const std::string&)> dfs = [&](const std::string& at) {
    if (at == to) {
      out.push_back(path);
      return;
    }
    for (const auto& e : g.edges()) {
      if (e.from != at || visited.count(e.to) || !usable(e)) continue;
      visited.insert(e.to);
      path.push_back(e);
      dfs(e.to);
      path.pop_back();
      visited.erase(e.to);
    }
  };
  dfs(from);
  std::stable_sort(out.begin(), out.end(), [](const EdgePath& a, const EdgePath& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].to != b[i].to) return a[i].to < b[i].to;
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Modular polynomials

PolyOverPoly modular_polynomial(const RatFun& f1, unsigned k1, const RatFun& f2, unsigned k2) {
  if (k1 == k2) throw Error(ErrorKind::identical_k, "k1 and k2 must differ");
  if (f1.is_constant() || f2.is_constant())
    throw Error(ErrorKind::invalid_argument, "relations must be non-constant");

  // Eliminate z from num1(x) - z den1(x) and num2(y) - z den2(y): the
  // resultant in z is taken with y specialized at deg f2 + 1 points and
  // interpolated back.
  PolyOverPoly a({f1.num(), -f1.den()});
  const unsigned need = f2.degree() + 1;
  std::vector<Rational> nodes;
  std::vector<Poly> values;
  for (long y0 = 0; nodes.size() < need; ++y0) {
    Rational y = y0;
    Rational d2 = f2.den().eval(y);
    if (d2 == 0) continue;
    PolyOverPoly b({Poly::constant(f2.num().eval(y)), Poly::constant(-d2)});
    nodes.push_back(y);
    values.push_back(resultant(a, b));
  }
  // Lagrange interpolation in y, coefficientwise in x.
  std::size_t xdeg = 0;
  for (const auto& v : values) xdeg = std::max<std::size_t>(xdeg, v.coeffs().size());
  std::vector<Poly> by_x(xdeg);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rational scale = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      basis *= Poly{-nodes[j], 1};
      scale *= nodes[i] - nodes[j];
    }
    basis *= 1 / scale;
    for (std::size_t xi = 0; xi < xdeg; ++xi) by_x[xi] += basis * values[i][xi];
  }

  // Primitive over the integers with positive leading coefficient.
  Integer num = 0, den = 1;
  for (const auto& p : by_x)
    for (const auto& c : p.coeffs()) {
      if (c == 0) continue;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  PolyOverPoly raw(by_x);
  if (raw.is_zero()) return raw;
  Rational scale{den, num};
  scale.canonicalize();
  if (raw.coeffs().back().leading() < 0) scale = -scale;
  for (auto& p : by_x) p *= scale;
  return PolyOverPoly(std::move(by_x));
}

Laurent eval_modular_polynomial(const PolyOverPoly& p, const QSeries& s, unsigned k1, unsigned k2) {
  Laurent x = substitute_power(s, k1);
  Laurent y = substitute_power(s, k2);
  Laurent acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + eval_poly_at_series(*it, y);
  return acc;
}

DoubleRelation make_double_relation(const std::string& partner, const QSeries& s, const Relation& first,
                                    const Relation& second) {
  const unsigned g = std::gcd(first.r, second.r);
  DoubleRelation out{partner, first, second, second.r / g, first.r / g, {}, 0};
  out.p = modular_polynomial(first.f, out.k1, second.f, out.k2);
  Laurent v = eval_modular_polynomial(out.p, s, out.k1, out.k2);
  out.verified_to = v.is_zero() ? v.prec() : v.lead_exp() - 1;
  return out;
}

std::vector<DoubleRelation> double_relations(const std::vector<CatalogEntry>& catalog,
                                             const std::string& target, unsigned e_max) {
  const CatalogEntry* inner = nullptr;
  for (const auto& c : catalog)
    if (c.name == target) inner = &c;
  if (!inner) throw Error(ErrorKind::unknown_node, target);

  std::vector<DoubleRelation> out;
  for (const auto& a : catalog) {
    if (a.name == target) continue;
    std::map<unsigned, Relation> by_r;
    for (unsigned e = 1; e <= e_max && by_r.size() < 2; ++e) {
      if (std::min(a.series.prec(), inner->series.prec()) < 2 * static_cast<long>(e) + 1) break;
      for (const auto& att : find_relations_all_r(a.series, inner->series, e))
        if (att.relation && !by_r.count(att.r)) by_r.emplace(att.r, *att.relation);
    }
    if (by_r.size() < 2) continue;
    auto it = by_r.begin();
    const Relation& r1 = it->second;
    const Relation& r2 = (++it)->second;
    out.push_back(make_double_relation(a.name, inner->series, r1, r2));
  }
  return out;
}

}  // namespace moonrel
