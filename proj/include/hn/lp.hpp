#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hn/instance.hpp"
#include "hn/rational.hpp"

namespace hn::lp {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation;
  Rational rhs;
};

struct Variable {
  Rational objective;
  std::optional<Rational> lower;  // nullopt: unbounded below
  std::optional<Rational> upper;  // nullopt: unbounded above
};

/// Exact-rational LP: optimize c^T x subject to rows a_i x (<=|=|>=) b_i and
/// lower <= x <= upper.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::maximize) : sense_(sense) {}

  std::size_t add_variable(Rational objective, std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt);

  /// Repeated variables within `terms` are summed. Throws std::invalid_argument
  /// for an unknown variable index.
  std::size_t add_row(std::vector<Term> terms, Relation relation, Rational rhs);

  /// `coefficients` must have one entry per variable.
  std::size_t add_dense_row(const std::vector<Rational>& coefficients, Relation relation, Rational rhs);

  Sense sense() const { return sense_; }
  std::size_t n_vars() const { return vars_.size(); }
  std::size_t n_rows() const { return rows_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& rows() const { return rows_; }

  Rational objective_value(const std::vector<Rational>& x) const;
  Rational row_activity(std::size_t row, const std::vector<Rational>& x) const;

 private:
  Sense sense_;
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
};

/// Solver output.
///
/// Dual sign convention: `duals[i]` is the rate of change of the optimal
/// objective per unit increase of rhs_i. For a maximization that makes duals
/// of <= rows nonnegative and of >= rows nonpositive; equality rows are free.
/// For a minimization the signs flip. `reduced_costs` = c - A^T duals.
///
/// When infeasible, `duals` holds Farkas multipliers in the maximization
/// convention (<= rows >= 0, >= rows <= 0) such that every feasible x would
/// satisfy g^T x <= duals^T b with g = A^T duals, while min over the variable
/// box of g^T x exceeds duals^T b.
///
/// When unbounded, `primal` is a feasible point and `ray` an improving
/// direction that stays feasible.
struct LPCertificate {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> primal;
  std::vector<Rational> duals;
  std::vector<Rational> reduced_costs;
  std::vector<Rational> ray;
  std::size_t iterations = 0;
};

enum class PivotRule {
  bland,    // smallest-index entering and leaving variable
  dantzig,  // most negative reduced cost; Bland during degenerate stalls
};

enum class Strategy {
  automatic,  // dual route when rows greatly outnumber columns
  primal,     // simplex on the given program
  dual,       // simplex on the LP dual, primal read from its multipliers
};

struct SolveOptions {
  PivotRule rule = PivotRule::dantzig;
  Strategy strategy = Strategy::automatic;
  /// Check every returned certificate exactly; a failure throws InternalError.
  bool verify = true;
};

/// Two-phase revised simplex over exact rationals. Throws std::invalid_argument
/// for malformed programs.
LPCertificate solve(const LinearProgram& lp, const SolveOptions& options = {});

/// Exact certificate check. Returns an empty string when the certificate is
/// valid, otherwise a description of the first failure.
std::string check_certificate(const LinearProgram& lp, const LPCertificate& cert);

/// Process-wide counts of solves and of certificates checked exactly.
struct SolveCounters {
  std::size_t solves = 0;
  std::size_t verified = 0;
};
SolveCounters counters();
void reset_counters();

/// Constraint matrix as CSV (one line per row: coefficients, relation, rhs).
std::string dump_csv(const LinearProgram& lp);

/// min sum c(T) x_T over x >= 0 with every player covered at least once.
/// Throws InstanceError when the program is infeasible.
LPCertificate fractional_cover(const SetCoverInstance& inst);
Rational fractional_cover_value(const SetCoverInstance& inst);

}  // namespace hn::lp
