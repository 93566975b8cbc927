#pragma once

#include <Eigen/Dense>

#include <limits>
#include <vector>

namespace dcmstab
{

/// Dense convex QP:
///
///   minimize    1/2 x' H x + g' x
///   subject to  Aeq x = beq
///               Aineq x <= bineq
///               lb <= x <= ub        (optional, +-inf entries allowed)
///
/// H must be symmetric positive semidefinite; a Tikhonov term is added to the
/// diagonal when its smallest eigenvalue falls below the solver threshold.
struct QpProblem
{
  Eigen::MatrixXd H;
  Eigen::VectorXd g;
  Eigen::MatrixXd Aeq; // 0 x n when absent
  Eigen::VectorXd beq;
  Eigen::MatrixXd Aineq; // 0 x n when absent
  Eigen::VectorXd bineq;
  Eigen::VectorXd lb; // size 0 or n
  Eigen::VectorXd ub; // size 0 or n

  int vars() const { return static_cast<int>(H.rows()); }

  static QpProblem unconstrained(Eigen::MatrixXd H, Eigen::VectorXd g);
};

enum class QpStatus
{
  Optimal,
  Infeasible,
  MaxIterations
};

const char * qpStatusName(QpStatus status);

struct QpSolution
{
  Eigen::VectorXd x;
  QpStatus status = QpStatus::MaxIterations;
  /// Scaled KKT residual: max of stationarity (relative to gradient scale),
  /// primal feasibility, dual feasibility and complementary slackness.
  double kktResidual = std::numeric_limits<double>::infinity();
  /// Active inequality rows at the solution, ascending. Rows are indexed in
  /// the expanded order: Aineq rows first, then upper bounds, then lower
  /// bounds (finite entries only, by variable index).
  std::vector<int> activeSet;
  Eigen::VectorXd eqMultipliers;
  /// Multipliers over the expanded inequality rows (zero for inactive rows).
  Eigen::VectorXd ineqMultipliers;
  int iterations = 0;
  double objective = std::numeric_limits<double>::quiet_NaN();
};

/// Primal active-set solver with a bootstrapped Phase-1. One instance per
/// thread: the solver keeps workspace buffers and the warm-start state of the
/// previous solve. Warm starting only affects iteration count, never the
/// solution.
class QpSolver
{
public:
  struct Options
  {
    int maxIterations = 200;
    double regEpsilon = 1e-10; // added to diag(H) when needed
    double regThreshold = 1e-9; // smallest-eigenvalue threshold triggering regularization
    double feasibilityTol = 1e-9;
    double multiplierTol = 1e-10;
    double stepTol = 1e-12;
    double phase1Tol = 1e-7; // residual infeasibility above which Phase-1 reports failure
  };

  QpSolver() = default;
  explicit QpSolver(const Options & options) : options_(options) {}

  const Options & options() const { return options_; }

  QpSolution solve(const QpProblem & problem);

  /// Warm-started solve: tries to start from (x0, active set) of a previous
  /// solution on a problem of identical structure.
  QpSolution solve(const QpProblem & problem, const Eigen::VectorXd & warmX, const std::vector<int> & warmActive);

private:
  struct Expanded; // internal constraint form

  Options options_;
};

} // namespace dcmstab
