// Acceptance gate: one PASS/FAIL line per criterion. All checks are exact;
// runtime limits are wall-clock seconds on the measured block.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "support.hpp"

using namespace moonrel;
using moonrel::testing::Gen;
using moonrel::testing::paper_f;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& what) {
  std::printf("%s %-3s %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

RatFun R(const char* text) { return parse_ratfun(text); }

// Decompositions seen anywhere in this run, for the divisibility check.
std::vector<std::pair<RatFun, Decomposition>> seen;

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  RatFun f = paper_f();
  auto chains = all_chains(f);
  for (const auto& d : decompose_one_level(f)) seen.emplace_back(f, d);
  double dt = seconds_since(t0);

  DecompositionChain three{{R("x^3"), R("x*(x-12)/(x-3)"), R("x*(x+6)/(x-3)")}};
  DecompositionChain two{{R("x^3*(x+24)/(x-3)"), R("x*(x^2-6*x+36)/(x^2+3*x+9)")}};
  bool has3 = false, has2 = false, all_exact = true;
  std::vector<std::size_t> lengths;
  for (const auto& c : chains) {
    if (equivalent(c, three)) has3 = true;
    if (equivalent(c, two)) has2 = true;
    all_exact = all_exact && c.compose_all() == f;
    lengths.push_back(c.components.size());
  }
  bool displayed_exact = three.compose_all() == f && two.compose_all() == f;
  report("1a", has3 && has2 && all_exact && displayed_exact && dt < 5,
         "both displayed chains (lengths 3 and 2) found, all chains recompose exactly, " + fmt(dt));
  std::string ls;
  for (auto l : lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
  report("1b", chains.size() == 2,
         "exactly two inequivalent complete chains: found " + std::to_string(chains.size()) + " (lengths " + ls +
             "; extra chain G o x^3 with G = x(x+216)^3/(x-27)^3)");
}

void criterion2() {
  auto cat = moonrel::testing::load_data("j.jsonl");
  const auto& c = cat.at(0).series.coeffs();
  std::vector<Rational> want = {744, 196884, 21493760, 864299970, Rational(Integer("20245856256"))};
  bool ok = c.size() >= 5 && std::equal(want.begin(), want.end(), c.begin());
  report("2", ok, "bundled j coefficients c0..c4");
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  QSeries j = moonrel::testing::load_data("j.jsonl").at(0).series;
  RatFun f = paper_f();
  Laurent target = substitute_power(j, 3);
  QSeries s2 = inner_series_solve(f, target, 40);
  Laurent back = eval_ratfun_at_series(f, s2);
  bool exists = j.prec() >= 25 && (back - target).is_zero();
  report("3a", exists, "s2 = inner_series_solve(f, j(q^3)) exists over Q and maps back to j(q^3)");

  auto rel = find_relation(j, s2, 12);
  double dt = seconds_since(t0);
  bool ok = rel && rel->r == 3 && rel->f == f && dt < 60;
  std::string got = rel ? "r=" + std::to_string(rel->r) + (rel->f == f ? " with f" : " with another f") : "none";
  report("3b", ok, "find_relation(j, s2, 12) returns r=3 and f: first success is " + got + ", " + fmt(dt));

  auto all = find_relations_all_r(j, s2, 12);
  std::string rs;
  bool paper_at_3 = false;
  for (const auto& a : all) {
    if (!a.relation) continue;
    rs += (rs.empty() ? "" : ",") + std::to_string(a.r);
    if (a.r == 3 && a.relation->f == f) paper_at_3 = true;
  }
  report("3c", paper_at_3, "exhaustive-r mode recovers exactly f at r=3 (relations at r=" + rs + ")");
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  Gen gen(4);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    unsigned e = static_cast<unsigned>(gen.integer(2, 8));
    unsigned r = static_cast<unsigned>(gen.integer(1, e));
    RatFun f;
    do f = RatFun(gen.poly(static_cast<int>(e), 9, true), gen.poly(static_cast<int>(e - r), 9, true));
    while (f.num().degree() != static_cast<int>(e) || f.den().degree() != static_cast<int>(e - r));
    const long prec = 2 * e + 1;
    QSeries s1 = gen.series(prec, 5);
    QSeries s2 = inner_series_solve(f, substitute_power(s1, r), prec);
    auto rel = find_relation(s1, s2, e);
    if (rel && rel->r == r && rel->f == f) ++ok;
  }
  double dt = seconds_since(t0);
  report("4", ok == 50 && dt < 60, "planted relations recovered " + std::to_string(ok) + "/50, " + fmt(dt));
}

void criterion5() {
  Gen gen(5);
  int found = 0;
  for (int i = 0; i < 100; ++i) {
    RatFun g = gen.ratfun(static_cast<unsigned>(gen.integer(2, 3)), 5);
    RatFun h = gen.ratfun(static_cast<unsigned>(gen.integer(2, 3)), 5);
    RatFun f = compose(g, h);
    auto ds = decompose_one_level(f);
    bool hit = false;
    for (const auto& d : ds) {
      seen.emplace_back(f, d);
      if (d.inner.degree() == h.degree() && equivalent(d, Decomposition{g, h})) hit = true;
    }
    if (hit) ++found;
  }
  report("5a", found == 100, "random g o h recovered up to equivalence " + std::to_string(found) + "/100");

  int empty = 0;
  const unsigned primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 100; ++i) {
    RatFun f = gen.ratfun(primes[i % 4], 5);
    if (decompose_one_level(f).empty()) ++empty;
  }
  report("5b", empty == 100, "prime-degree functions indecomposable " + std::to_string(empty) + "/100");
}

void criterion6() {
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& [f, d] : seen) {
    auto nf = to_normal_form(f);
    ok = ok && is_normal_form(nf.fbar) &&
         compose(compose(unit_inverse(nf.u).to_ratfun(), nf.fbar), unit_inverse(nf.v).to_ratfun()) == f;
    // fbar = (u o g) o (h o v); a unit w sending h(v(0)) to 0 and h(v(inf))
    // to inf puts both components in normal form.
    RatFun hv = compose(d.inner, nf.v.to_ratfun());
    ExtRational at0 = hv.evaluate(Rational(0)), atinf = hv.at_infinity();
    if (at0.infinite || at0 == atinf) {
      ok = false;
      continue;
    }
    MoebiusUnit w = atinf.infinite ? MoebiusUnit(1, -at0.value, 0, 1) : MoebiusUnit(1, -at0.value, 1, -atinf.value);
    RatFun inner = compose(w.to_ratfun(), hv);
    RatFun outer = compose(compose(nf.u.to_ratfun(), d.outer), unit_inverse(w).to_ratfun());
    ok = ok && is_normal_form(inner) && is_normal_form(outer) && compose(outer, inner) == nf.fbar;
    ok = ok && divides(inner.num(), nf.fbar.num()) && divides(inner.den(), nf.fbar.den());
    ++checked;
  }
  report("6", ok && checked == seen.size() && checked > 0,
         "normal form round trips and inner_N | f_N, inner_D | f_D on " + std::to_string(checked) + " splits");
}

void criterion7() {
  auto cat = moonrel::testing::load_data("planted_four.jsonl");
  RelationGraph g = build_graph(cat, 12);
  RelationGraph refined = refine_graph(g);
  bool fixpoint = refine_graph(refined) == refined;

  auto verifies = [&](const GraphEdge& e) {
    const auto& a = refined.node(e.from).series;
    const auto& b = refined.node(e.to).series;
    Relation rel{e.r, e.f, e.d, 0};
    return verify_relation(a, b, rel) == relation_precision(a, b, e.r, e.f);
  };
  bool conserved = true;
  for (const auto& e : g.edges()) {
    std::set<std::pair<unsigned, unsigned>> labels;
    std::function<void(const std::string&, unsigned, unsigned)> walk = [&](const std::string& at, unsigned d,
                                                                           unsigned r) {
      if (at == e.to) labels.insert({d, r});
      for (const auto& x : refined.edges())
        if (x.from == at) walk(x.to, d * x.d, r * x.r);
    };
    walk(e.from, 1, 1);
    conserved = conserved && labels.count({e.d, e.r});
  }
  bool synthetic_ok = true;
  std::size_t synthetic = 0;
  for (const auto& n : refined.nodes()) {
    if (n.origin != NodeOrigin::synthetic) continue;
    ++synthetic;
    int incident = 0;
    for (const auto& e : refined.edges())
      if (e.from == n.name || e.to == n.name) {
        ++incident;
        synthetic_ok = synthetic_ok && verifies(e);
      }
    synthetic_ok = synthetic_ok && incident >= 2;
  }
  report("7", fixpoint && conserved && synthetic_ok && synthetic > 0,
         "refinement fixpoint, path products conserved, " + std::to_string(synthetic) +
             " synthetic node(s) verified on both sides (" + std::to_string(g.edges().size()) + " -> " +
             std::to_string(refined.edges().size()) + " edges)");
}

void criterion8() {
  RatFun h = R("(x^2+3*x+1)/(x+2)");
  Laurent c(-1, {1, 0, 1}, 80);  // 1/q + q
  QSeries b = inner_series_solve(h, c, 40);
  QSeries cq = QSeries::from_laurent(c.truncate(40));
  std::vector<CatalogEntry> cat = {{"C", 1, cq}, {"B", 2, b}};
  auto found = double_relations(cat, "B", 4);
  bool ok = found.size() == 1;
  std::string detail = "no double relation";
  if (ok) {
    const auto& d = found[0];
    Laurent v = eval_modular_polynomial(d.p, b, d.k1, d.k2);
    ok = v.is_zero() && v.prec() > 0 && d.first.r != d.second.r;
    detail = "P(B(q^" + std::to_string(d.k1) + "), B(q^" + std::to_string(d.k2) + ")) = O(q^" +
             std::to_string(v.prec() + 1) + ") from r=" + std::to_string(d.first.r) + "," +
             std::to_string(d.second.r);
  }
  report("8", ok, "planted double relation: " + detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("SKIP 9   full-catalog relation counts, degree histogram and runtimes (declared not reproducible)\n");
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
