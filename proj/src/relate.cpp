#include "moonrel/relate.hpp"

#include <algorithm>

namespace moonrel {

std::optional<std::vector<Rational>> solve_linear(const LinearSystem& sys) {
  const std::size_t cols = sys.cols;
  Matrix aug = sys.matrix;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols);
    aug[i].push_back(sys.rhs[i]);
  }
  RowEchelon re = row_reduce(std::move(aug), cols + 1);
  if (!re.pivots.empty() && re.pivots.back() == cols) return std::nullopt;
  if (re.pivots.size() < cols)
    throw Error(ErrorKind::underdetermined_system,
                "rank " + std::to_string(re.pivots.size()) + " < " + std::to_string(cols) + " unknowns");
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < re.pivots.size(); ++r) x[re.pivots[r]] = re.rows[r][cols];
  return x;
}

std::optional<unsigned> degree_from_areas(const Rational& a1, const Rational& a2) {
  if (a1 <= 0 || a2 <= 0) throw Error(ErrorKind::nonpositive_area, "areas must be positive");
  Rational e = a2 / a1;
  if (e.get_den() != 1 || !e.get_num().fits_uint_p()) return std::nullopt;
  return static_cast<unsigned>(e.get_num().get_ui());
}

RatFun RelationAnsatz::build(const std::vector<Rational>& solution) const {
  std::vector<Rational> num(solution.begin(), solution.begin() + e);
  num.emplace_back(1);
  std::vector<Rational> den(solution.begin() + e, solution.end());
  den.emplace_back(1);
  return RatFun(Poly(std::move(num)), Poly(std::move(den)));
}

LinearSystem relation_system(const QSeries& s1, const QSeries& s2, const RelationAnsatz& ansatz) {
  const unsigned e = ansatz.e;
  const unsigned r = ansatz.r;
  if (r < 1 || r > e) throw Error(ErrorKind::invalid_argument, "need 1 <= r <= e");
  const Laurent s1r = substitute_power(s1, r);
  const Laurent s = s2.as_laurent();

  std::vector<Laurent> pow(e + 1);  // s2^i
  pow[0] = Laurent::constant(1);
  for (unsigned i = 1; i <= e; ++i) pow[i] = pow[i - 1] * s;
  std::vector<Laurent> lifted(e - r + 1);  // s1(q^r) s2^i
  for (unsigned i = 0; i <= e - r; ++i) lifted[i] = s1r * pow[i];

  long prec = Laurent::kExact;
  for (const auto& p : pow) prec = std::min(prec, p.prec());
  for (const auto& p : lifted) prec = std::min(prec, p.prec());

  LinearSystem sys;
  sys.cols = ansatz.unknowns();
  for (long k = -static_cast<long>(e); k <= prec; ++k) {
    std::vector<Rational> row(sys.cols);
    for (unsigned i = 0; i < e; ++i) row[i] = -pow[i].coeff(k);
    for (unsigned i = 0; i + r < e; ++i) row[e + i] = lifted[i].coeff(k);
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(pow[e].coeff(k) - lifted[e - r].coeff(k));
  }
  return sys;
}

long relation_precision(const QSeries& s1, const QSeries& s2, unsigned r, const RatFun& f) {
  return (substitute_power(s1, r) - eval_ratfun_at_series(f, s2)).prec();
}

long verify_relation(const QSeries& s1, const QSeries& s2, const Relation& rel) {
  Laurent diff = substitute_power(s1, rel.r) - eval_ratfun_at_series(rel.f, s2);
  return diff.is_zero() ? diff.prec() : diff.lead_exp() - 1;
}

namespace {

std::optional<Relation> try_r(const QSeries& s1, const QSeries& s2, unsigned e, unsigned r) {
  RelationAnsatz ansatz{e, r};
  LinearSystem sys = relation_system(s1, s2, ansatz);
  if (sys.matrix.size() < ansatz.unknowns() + 2)
    throw Error(ErrorKind::insufficient_precision,
                std::to_string(sys.matrix.size()) + " certified equations for " +
                    std::to_string(ansatz.unknowns()) + " unknowns (e=" + std::to_string(e) +
                    ", r=" + std::to_string(r) + ")");
  auto sol = solve_linear(sys);
  if (!sol) return std::nullopt;
  Relation rel{r, ansatz.build(*sol), e, 0};
  if (rel.f.degree() != e) return std::nullopt;
  rel.verified_to = verify_relation(s1, s2, rel);
  if (rel.verified_to != relation_precision(s1, s2, r, rel.f)) return std::nullopt;
  return rel;
}

}  // namespace

std::optional<Relation> find_relation(const QSeries& s1, const QSeries& s2, unsigned e) {
  if (e < 1) throw Error(ErrorKind::invalid_argument, "degree must be positive");
  for (unsigned r = 1; r <= e; ++r) {
    if (auto rel = try_r(s1, s2, e, r)) return rel;
  }
  return std::nullopt;
}

std::vector<RelationAttempt> find_relations_all_r(const QSeries& s1, const QSeries& s2, unsigned e) {
  if (e < 1) throw Error(ErrorKind::invalid_argument, "degree must be positive");
  std::vector<RelationAttempt> out;
  for (unsigned r = 1; r <= e; ++r) {
    try {
      auto rel = try_r(s1, s2, e, r);
      out.push_back({r, rel ? RelationOutcome::found : RelationOutcome::none, rel});
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::underdetermined_system) {
        out.push_back({r, RelationOutcome::underdetermined, std::nullopt});
      } else if (err.kind() == ErrorKind::insufficient_precision) {
        out.push_back({r, RelationOutcome::insufficient_precision, std::nullopt});
      } else {
        throw;
      }
    }
  }
  return out;
}

}  // namespace moonrel
