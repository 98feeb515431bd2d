#include "hn/lp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hn/errors.hpp"

namespace hn::lp {

namespace {

// `dual_route`: empty picks the route from the program shape.
LPCertificate solve_unverified(const LinearProgram& lp, PivotRule rule, std::optional<bool> dual_route);

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Consecutive degenerate pivots tolerated under Dantzig pricing before
// switching to Bland's rule until the next nondegenerate pivot.
constexpr std::size_t kStallLimit = 8;

std::atomic<std::size_t> g_solves{0};
std::atomic<std::size_t> g_verified{0};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

void accumulate(Rational& acc, const Rational& a, const Rational& b) {
  if (b == 1) {
    acc += a;
  } else if (b == -1) {
    acc -= a;
  } else {
    acc += a * b;
  }
}

// maximize obj^T x' + offset, rows over canonical variables, every variable
// either nonnegative or free. Original variable j equals
// var_shift[j] + var_sign[j] * x'[var_index[j]].
struct Canonical {
  std::vector<Rational> objective;
  std::vector<bool> is_free;
  std::vector<Constraint> rows;
  std::vector<std::size_t> canon_row_of;  // per original row; npos for dropped duplicates
  std::vector<std::size_t> var_index;
  std::vector<int> var_sign;
  std::vector<Rational> var_shift;
  int sense_sign = 1;
};

std::string row_key(const Constraint& row) {
  std::ostringstream key;
  key << static_cast<int>(row.relation) << '|' << row.rhs.get_str();
  for (const auto& t : row.terms) key << '|' << t.var << ':' << t.coef.get_str();
  return key.str();
}

Canonical canonicalize(const LinearProgram& lp) {
  Canonical c;
  c.sense_sign = lp.sense() == Sense::maximize ? 1 : -1;
  std::vector<Constraint> bound_rows;
  for (const auto& v : lp.variables()) {
    const std::size_t k = c.objective.size();
    if (v.lower) {
      c.var_index.push_back(k);
      c.var_sign.push_back(1);
      c.var_shift.push_back(*v.lower);
      c.is_free.push_back(false);
      if (v.upper) bound_rows.push_back({{{k, Rational(1)}}, Relation::less_equal, *v.upper - *v.lower});
    } else if (v.upper) {
      c.var_index.push_back(k);
      c.var_sign.push_back(-1);
      c.var_shift.push_back(*v.upper);
      c.is_free.push_back(false);
    } else {
      c.var_index.push_back(k);
      c.var_sign.push_back(1);
      c.var_shift.push_back(0);
      c.is_free.push_back(true);
    }
    c.objective.push_back(c.sense_sign * v.objective * c.var_sign.back());
  }

  std::map<std::string, std::size_t> seen;
  for (const auto& row : lp.rows()) {
    Constraint out{{}, row.relation, row.rhs};
    for (const auto& t : row.terms) {
      out.terms.push_back({c.var_index[t.var], t.coef * c.var_sign[t.var]});
      out.rhs -= t.coef * c.var_shift[t.var];
    }
    auto [it, inserted] = seen.emplace(row_key(out), c.rows.size());
    if (inserted) {
      c.canon_row_of.push_back(c.rows.size());
      c.rows.push_back(std::move(out));
    } else {
      c.canon_row_of.push_back(npos);
    }
  }
  for (auto& row : bound_rows) c.rows.push_back(std::move(row));
  return c;
}

// min cost^T x, A x = b, x >= 0 with b >= 0.
struct Standard {
  enum class Kind { structural, slack, artificial };
  std::size_t m = 0;
  std::vector<SparseVector> cols;
  std::vector<Rational> cost;
  std::vector<Rational> b;
  std::vector<int> row_sign;
  std::vector<Kind> kind;
  std::vector<std::size_t> origin;  // canonical variable for structurals
  std::vector<int> origin_sign;
  std::vector<std::size_t> initial_basis;
};

Standard standardize(const Canonical& c) {
  Standard s;
  s.m = c.rows.size();
  const std::size_t nv = c.objective.size();
  std::vector<std::size_t> first_col(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    first_col[k] = s.cols.size();
    s.cols.emplace_back();
    s.cost.push_back(-c.objective[k]);
    s.kind.push_back(Standard::Kind::structural);
    s.origin.push_back(k);
    s.origin_sign.push_back(1);
    if (c.is_free[k]) {
      s.cols.emplace_back();
      s.cost.push_back(c.objective[k]);
      s.kind.push_back(Standard::Kind::structural);
      s.origin.push_back(k);
      s.origin_sign.push_back(-1);
    }
  }
  s.initial_basis.assign(s.m, npos);
  for (std::size_t i = 0; i < s.m; ++i) {
    const auto& row = c.rows[i];
    int sign = 1;
    if (row.rhs < 0 || (row.rhs == 0 && row.relation == Relation::greater_equal)) sign = -1;
    s.row_sign.push_back(sign);
    s.b.push_back(sign * row.rhs);
    for (const auto& t : row.terms) {
      if (t.coef == 0) continue;
      const std::size_t k = t.var;
      s.cols[first_col[k]].emplace_back(i, sign * t.coef);
      if (c.is_free[k]) s.cols[first_col[k] + 1].emplace_back(i, -sign * t.coef);
    }
    if (row.relation != Relation::equal) {
      int slack = (row.relation == Relation::less_equal ? 1 : -1) * sign;
      s.cols.push_back({{i, Rational(slack)}});
      s.cost.push_back(0);
      s.kind.push_back(Standard::Kind::slack);
      s.origin.push_back(npos);
      s.origin_sign.push_back(0);
      if (slack == 1) s.initial_basis[i] = s.cols.size() - 1;
    }
  }
  for (std::size_t i = 0; i < s.m; ++i) {
    if (s.initial_basis[i] != npos) continue;
    s.cols.push_back({{i, Rational(1)}});
    s.cost.push_back(0);
    s.kind.push_back(Standard::Kind::artificial);
    s.origin.push_back(npos);
    s.origin_sign.push_back(0);
    s.initial_basis[i] = s.cols.size() - 1;
  }
  return s;
}

// Revised simplex with an explicit dense basis inverse.
class RevisedSimplex {
 public:
  enum class Outcome { optimal, unbounded };

  RevisedSimplex(const Standard& sf, PivotRule rule) : sf_(sf), rule_(rule) {
    const std::size_t m = sf.m;
    basis_ = sf.initial_basis;
    basic_pos_.assign(sf.cols.size(), npos);
    for (std::size_t i = 0; i < m; ++i) basic_pos_[basis_[i]] = i;
    binv_.assign(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) binv_[i][i] = 1;
    xb_ = sf.b;
  }

  Outcome optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    std::size_t stall = 0;
    for (;;) {
      const auto pi = prices(cost);
      const bool bland = rule_ == PivotRule::bland || stall >= kStallLimit;
      std::size_t entering = npos;
      Rational best = 0;
      Rational d;
      for (std::size_t j = 0; j < sf_.cols.size(); ++j) {
        if (basic_pos_[j] != npos) continue;
        if (!allow_artificial && sf_.kind[j] == Standard::Kind::artificial) continue;
        d = cost[j];
        for (const auto& [r, a] : sf_.cols[j]) {
          if (pi[r] != 0) accumulate(d, -pi[r], a);
        }
        if (d < 0) {
          if (bland) {
            entering = j;
            break;
          }
          if (entering == npos || d < best) {
            best = d;
            entering = j;
          }
        }
      }
      if (entering == npos) return Outcome::optimal;

      auto alpha = column(entering);
      std::size_t leave = npos;
      Rational best_ratio;
      for (std::size_t i = 0; i < sf_.m; ++i) {
        if (alpha[i] <= 0) continue;
        Rational ratio = xb_[i] / alpha[i];
        if (leave == npos || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == npos) {
        ray_column_ = entering;
        ray_alpha_ = std::move(alpha);
        return Outcome::unbounded;
      }
      stall = best_ratio == 0 ? stall + 1 : 0;
      pivot(leave, entering, alpha);
    }
  }

  // pi^T = c_B^T B^{-1}
  std::vector<Rational> prices(const std::vector<Rational>& cost) const {
    std::vector<Rational> pi(sf_.m, Rational(0));
    for (std::size_t i = 0; i < sf_.m; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t r = 0; r < sf_.m; ++r) {
        if (binv_[i][r] != 0) pi[r] += cb * binv_[i][r];
      }
    }
    return pi;
  }

  // B^{-1} A_j
  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> alpha(sf_.m, Rational(0));
    for (const auto& [r, a] : sf_.cols[j]) {
      for (std::size_t i = 0; i < sf_.m; ++i) {
        if (binv_[i][r] != 0) accumulate(alpha[i], binv_[i][r], a);
      }
    }
    return alpha;
  }

  void pivot(std::size_t r, std::size_t entering, const std::vector<Rational>& alpha) {
    const std::size_t m = sf_.m;
    const Rational pivot_value = alpha[r];
    const Rational theta = xb_[r] / pivot_value;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && alpha[i] != 0) xb_[i] -= theta * alpha[i];
    }
    xb_[r] = theta;
    for (auto& v : binv_[r]) {
      if (v != 0) v /= pivot_value;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || alpha[i] == 0) continue;
      const Rational factor = alpha[i];
      for (std::size_t k = 0; k < m; ++k) {
        if (binv_[r][k] != 0) binv_[i][k] -= factor * binv_[r][k];
      }
    }
    basic_pos_[basis_[r]] = npos;
    basis_[r] = entering;
    basic_pos_[entering] = r;
    ++iterations_;
  }

  // Pivots basic artificials out wherever a structural or slack column allows.
  void expel_artificials() {
    for (std::size_t r = 0; r < sf_.m; ++r) {
      if (sf_.kind[basis_[r]] != Standard::Kind::artificial) continue;
      for (std::size_t j = 0; j < sf_.cols.size(); ++j) {
        if (basic_pos_[j] != npos || sf_.kind[j] == Standard::Kind::artificial) continue;
        Rational entry = 0;
        for (const auto& [row, a] : sf_.cols[j]) {
          if (binv_[r][row] != 0) accumulate(entry, binv_[r][row], a);
        }
        if (entry != 0) {
          pivot(r, j, column(j));
          break;
        }
      }
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < sf_.m; ++i) total += cost[basis_[i]] * xb_[i];
    return total;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(sf_.cols.size(), Rational(0));
    for (std::size_t i = 0; i < sf_.m; ++i) x[basis_[i]] = xb_[i];
    return x;
  }

  std::vector<Rational> ray() const {
    std::vector<Rational> d(sf_.cols.size(), Rational(0));
    d[ray_column_] = 1;
    for (std::size_t i = 0; i < sf_.m; ++i) d[basis_[i]] = -ray_alpha_[i];
    return d;
  }

  std::size_t iterations() const { return iterations_; }

 private:
  const Standard& sf_;
  PivotRule rule_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> basic_pos_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::size_t ray_column_ = npos;
  std::vector<Rational> ray_alpha_;
  std::size_t iterations_ = 0;
};

// Solution of a canonical program.
struct CanonicalResult {
  Status status = Status::infeasible;
  std::vector<Rational> x;      // canonical variables (feasible point when unbounded)
  std::vector<Rational> duals;  // canonical rows; Farkas multipliers when infeasible
  std::vector<Rational> ray;    // canonical variables
  std::size_t iterations = 0;
};

std::vector<Rational> to_canonical_vars(const Canonical& c, const Standard& s, const std::vector<Rational>& xs) {
  std::vector<Rational> x(c.objective.size(), Rational(0));
  for (std::size_t j = 0; j < s.cols.size(); ++j) {
    if (s.kind[j] == Standard::Kind::structural && xs[j] != 0) x[s.origin[j]] += s.origin_sign[j] * xs[j];
  }
  return x;
}

CanonicalResult solve_primal(const Canonical& c, PivotRule rule) {
  const Standard s = standardize(c);
  RevisedSimplex simplex(s, rule);
  CanonicalResult result;

  std::vector<Rational> phase1(s.cols.size(), Rational(0));
  bool needs_phase1 = false;
  for (std::size_t j = 0; j < s.cols.size(); ++j) {
    if (s.kind[j] == Standard::Kind::artificial) {
      phase1[j] = 1;
      needs_phase1 = true;
    }
  }
  if (needs_phase1) {
    simplex.optimize(phase1, true);
    if (simplex.objective(phase1) > 0) {
      const auto sigma = simplex.prices(phase1);
      result.status = Status::infeasible;
      result.duals.resize(s.m);
      for (std::size_t i = 0; i < s.m; ++i) result.duals[i] = -s.row_sign[i] * sigma[i];
      result.iterations = simplex.iterations();
      return result;
    }
    simplex.expel_artificials();
  }

  const auto outcome = simplex.optimize(s.cost, false);
  result.iterations = simplex.iterations();
  result.x = to_canonical_vars(c, s, simplex.solution());
  if (outcome == RevisedSimplex::Outcome::unbounded) {
    result.status = Status::unbounded;
    result.ray = to_canonical_vars(c, s, simplex.ray());
    return result;
  }
  result.status = Status::optimal;
  const auto pi = simplex.prices(s.cost);
  result.duals.resize(s.m);
  for (std::size_t i = 0; i < s.m; ++i) result.duals[i] = -s.row_sign[i] * pi[i];
  return result;
}

// Solves the LP dual of the canonical program (one row per canonical
// variable) and reads the primal solution from its multipliers. Only an
// optimal outcome is meaningful; other outcomes are reported as infeasible
// and the caller falls back to the primal route.
CanonicalResult solve_via_dual(const Canonical& c, PivotRule rule) {
  LinearProgram dual(Sense::minimize);
  for (const auto& row : c.rows) {
    switch (row.relation) {
      case Relation::less_equal: dual.add_variable(row.rhs, Rational(0), std::nullopt); break;
      case Relation::greater_equal: dual.add_variable(row.rhs, std::nullopt, Rational(0)); break;
      case Relation::equal: dual.add_variable(row.rhs, std::nullopt, std::nullopt); break;
    }
  }
  std::vector<std::vector<Term>> columns(c.objective.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    for (const auto& t : c.rows[i].terms) columns[t.var].push_back({i, t.coef});
  }
  for (std::size_t k = 0; k < c.objective.size(); ++k) {
    dual.add_row(std::move(columns[k]), c.is_free[k] ? Relation::equal : Relation::greater_equal, c.objective[k]);
  }
  const LPCertificate d = solve_unverified(dual, rule, false);

  CanonicalResult result;
  result.iterations = d.iterations;
  if (d.status != Status::optimal) {
    result.status = Status::infeasible;
    return result;
  }
  result.status = Status::optimal;
  result.x = d.duals;
  result.duals = d.primal;
  return result;
}

LPCertificate finish(const LinearProgram& lp, const Canonical& c, const CanonicalResult& r) {
  LPCertificate cert;
  cert.status = r.status;
  cert.iterations = r.iterations;
  const std::size_t n = lp.n_vars();

  auto to_original = [&](const std::vector<Rational>& xc, bool direction) {
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = c.var_sign[j] * xc[c.var_index[j]];
      if (!direction) x[j] += c.var_shift[j];
    }
    return x;
  };

  if (r.status == Status::infeasible) {
    cert.duals.assign(lp.n_rows(), Rational(0));
    for (std::size_t i = 0; i < lp.n_rows(); ++i) {
      if (c.canon_row_of[i] != npos) cert.duals[i] = r.duals[c.canon_row_of[i]];
    }
    return cert;
  }
  cert.primal = to_original(r.x, false);
  cert.objective = lp.objective_value(cert.primal);
  if (r.status == Status::unbounded) {
    cert.ray = to_original(r.ray, true);
    return cert;
  }
  cert.duals.assign(lp.n_rows(), Rational(0));
  for (std::size_t i = 0; i < lp.n_rows(); ++i) {
    if (c.canon_row_of[i] != npos) cert.duals[i] = c.sense_sign * r.duals[c.canon_row_of[i]];
  }
  cert.reduced_costs.resize(n);
  for (std::size_t j = 0; j < n; ++j) cert.reduced_costs[j] = lp.variables()[j].objective;
  for (std::size_t i = 0; i < lp.n_rows(); ++i) {
    if (cert.duals[i] == 0) continue;
    for (const auto& t : lp.rows()[i].terms) cert.reduced_costs[t.var] -= cert.duals[i] * t.coef;
  }
  return cert;
}

bool prefer_dual(const Canonical& c) {
  return c.rows.size() > 2 * c.objective.size() + 8;
}

std::string relation_text(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

LPCertificate solve_unverified(const LinearProgram& lp, PivotRule rule, std::optional<bool> dual_route) {
  const Canonical canon = canonicalize(lp);
  bool use_dual = dual_route.value_or(prefer_dual(canon));
  CanonicalResult result;
  if (use_dual) {
    result = solve_via_dual(canon, rule);
    if (result.status != Status::optimal) use_dual = false;
  }
  if (!use_dual) result = solve_primal(canon, rule);
  return finish(lp, canon, result);
}

}  // namespace

std::size_t LinearProgram::add_variable(Rational objective, std::optional<Rational> lower,
                                        std::optional<Rational> upper) {
  vars_.push_back({std::move(objective), std::move(lower), std::move(upper)});
  return vars_.size() - 1;
}

std::size_t LinearProgram::add_row(std::vector<Term> terms, Relation relation, Rational rhs) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (t.var >= vars_.size()) throw std::invalid_argument("row references unknown variable " + std::to_string(t.var));
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  rows_.push_back({std::move(merged), relation, std::move(rhs)});
  return rows_.size() - 1;
}

std::size_t LinearProgram::add_dense_row(const std::vector<Rational>& coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != vars_.size()) {
    throw std::invalid_argument("dense row has " + std::to_string(coefficients.size()) + " entries for " +
                                std::to_string(vars_.size()) + " variables");
  }
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] != 0) terms.push_back({j, coefficients[j]});
  }
  return add_row(std::move(terms), relation, std::move(rhs));
}

Rational LinearProgram::objective_value(const std::vector<Rational>& x) const {
  Rational total = 0;
  for (std::size_t j = 0; j < vars_.size(); ++j) total += vars_[j].objective * x.at(j);
  return total;
}

Rational LinearProgram::row_activity(std::size_t row, const std::vector<Rational>& x) const {
  Rational total = 0;
  for (const auto& t : rows_.at(row).terms) total += t.coef * x.at(t.var);
  return total;
}

LPCertificate solve(const LinearProgram& lp, const SolveOptions& options) {
  std::optional<bool> dual_route;
  if (options.strategy != Strategy::automatic) dual_route = options.strategy == Strategy::dual;
  LPCertificate cert = solve_unverified(lp, options.rule, dual_route);
  ++g_solves;
  if (options.verify) {
    if (auto problem = check_certificate(lp, cert); !problem.empty()) {
      throw InternalError("LP certificate check failed: " + problem);
    }
    ++g_verified;
  }
  return cert;
}

std::string check_certificate(const LinearProgram& lp, const LPCertificate& cert) {
  const auto& vars = lp.variables();
  const auto& rows = lp.rows();
  const bool maximize = lp.sense() == Sense::maximize;

  auto primal_feasible = [&](const std::vector<Rational>& x) -> std::string {
    if (x.size() != vars.size()) return "primal vector has wrong size";
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].lower && x[j] < *vars[j].lower) return "variable " + std::to_string(j) + " below its lower bound";
      if (vars[j].upper && x[j] > *vars[j].upper) return "variable " + std::to_string(j) + " above its upper bound";
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational a = lp.row_activity(i, x);
      bool ok = rows[i].relation == Relation::less_equal      ? a <= rows[i].rhs
                : rows[i].relation == Relation::greater_equal ? a >= rows[i].rhs
                                                              : a == rows[i].rhs;
      if (!ok) return "row " + std::to_string(i) + " violated";
    }
    return {};
  };

  switch (cert.status) {
    case Status::optimal: {
      if (auto p = primal_feasible(cert.primal); !p.empty()) return p;
      if (cert.duals.size() != rows.size()) return "dual vector has wrong size";
      if (cert.objective != lp.objective_value(cert.primal)) return "objective does not match primal point";
      // sign of dual for a <= row: >= 0 when maximizing
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& y = cert.duals[i];
        if (rows[i].relation == Relation::equal || y == 0) continue;
        bool positive_expected = (rows[i].relation == Relation::less_equal) == maximize;
        if ((y > 0) != positive_expected) return "dual of row " + std::to_string(i) + " has the wrong sign";
      }
      std::vector<Rational> d(vars.size());
      for (std::size_t j = 0; j < vars.size(); ++j) d[j] = vars[j].objective;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& t : rows[i].terms) d[t.var] -= cert.duals[i] * t.coef;
      }
      Rational dual_objective = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) dual_objective += cert.duals[i] * rows[i].rhs;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (d[j] == 0) continue;
        // maximizing: positive reduced cost is priced by the upper bound
        const bool use_upper = (d[j] > 0) == maximize;
        const auto& bound = use_upper ? vars[j].upper : vars[j].lower;
        if (!bound) return "reduced cost of variable " + std::to_string(j) + " not supported by a finite bound";
        dual_objective += d[j] * *bound;
      }
      if (dual_objective != cert.objective) {
        return "duality gap: primal " + to_string(cert.objective) + " vs dual " + to_string(dual_objective);
      }
      return {};
    }
    case Status::infeasible: {
      if (cert.duals.size() != rows.size()) return "Farkas vector has wrong size";
      std::vector<Rational> g(vars.size(), Rational(0));
      Rational rhs = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& y = cert.duals[i];
        if (y == 0) continue;
        if (rows[i].relation == Relation::less_equal && y < 0) return "Farkas multiplier sign on row " + std::to_string(i);
        if (rows[i].relation == Relation::greater_equal && y > 0) return "Farkas multiplier sign on row " + std::to_string(i);
        for (const auto& t : rows[i].terms) g[t.var] += y * t.coef;
        rhs += y * rows[i].rhs;
      }
      Rational box_min = 0;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (g[j] == 0) continue;
        const auto& bound = g[j] > 0 ? vars[j].lower : vars[j].upper;
        if (!bound) return "Farkas combination unbounded below on variable " + std::to_string(j);
        box_min += g[j] * *bound;
      }
      if (!(box_min > rhs)) return "Farkas combination does not separate";
      return {};
    }
    case Status::unbounded: {
      if (auto p = primal_feasible(cert.primal); !p.empty()) return p;
      if (cert.ray.size() != vars.size()) return "ray has wrong size";
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (vars[j].lower && cert.ray[j] < 0) return "ray leaves lower bound of variable " + std::to_string(j);
        if (vars[j].upper && cert.ray[j] > 0) return "ray leaves upper bound of variable " + std::to_string(j);
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational a = lp.row_activity(i, cert.ray);
        bool ok = rows[i].relation == Relation::less_equal      ? a <= 0
                  : rows[i].relation == Relation::greater_equal ? a >= 0
                                                                : a == 0;
        if (!ok) return "ray violates row " + std::to_string(i);
      }
      Rational slope = lp.objective_value(cert.ray);
      if (maximize ? slope <= 0 : slope >= 0) return "ray does not improve the objective";
      return {};
    }
  }
  return "unknown status";
}

SolveCounters counters() { return {g_solves.load(), g_verified.load()}; }

void reset_counters() {
  g_solves = 0;
  g_verified = 0;
}

std::string dump_csv(const LinearProgram& lp) {
  std::ostringstream out;
  out << "row";
  for (std::size_t j = 0; j < lp.n_vars(); ++j) out << ",x" << j;
  out << ",relation,rhs\n";
  out << "objective";
  for (const auto& v : lp.variables()) out << ',' << to_string(v.objective);
  out << ',' << (lp.sense() == Sense::maximize ? "max" : "min") << ",\n";
  for (std::size_t i = 0; i < lp.n_rows(); ++i) {
    std::vector<Rational> dense(lp.n_vars(), Rational(0));
    for (const auto& t : lp.rows()[i].terms) dense[t.var] = t.coef;
    out << i;
    for (const auto& v : dense) out << ',' << to_string(v);
    out << ',' << relation_text(lp.rows()[i].relation) << ',' << to_string(lp.rows()[i].rhs) << '\n';
  }
  return out.str();
}

LPCertificate fractional_cover(const SetCoverInstance& inst) {
  LinearProgram lp(Sense::minimize);
  for (const auto& set : inst.sets()) lp.add_variable(set.cost);
  for (PlayerId p = 0; p < inst.n_players(); ++p) {
    std::vector<Term> terms;
    for (std::size_t t : inst.sets_containing(p)) terms.push_back({t, Rational(1)});
    lp.add_row(std::move(terms), Relation::greater_equal, Rational(1));
  }
  auto cert = solve(lp);
  if (cert.status != Status::optimal) throw InstanceError("fractional cover program is infeasible");
  return cert;
}

Rational fractional_cover_value(const SetCoverInstance& inst) { return fractional_cover(inst).objective; }

}  // namespace hn::lp
