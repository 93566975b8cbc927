#include <dcmstab/qp.hpp>

#include <algorithm>
#include <cmath>

namespace dcmstab
{

QpProblem QpProblem::unconstrained(Eigen::MatrixXd H, Eigen::VectorXd g)
{
  QpProblem p;
  const int n = static_cast<int>(H.rows());
  p.H = std::move(H);
  p.g = std::move(g);
  p.Aeq.resize(0, n);
  p.beq.resize(0);
  p.Aineq.resize(0, n);
  p.bineq.resize(0);
  return p;
}

const char * qpStatusName(QpStatus status)
{
  switch(status)
  {
    case QpStatus::Optimal:
      return "optimal";
    case QpStatus::Infeasible:
      return "infeasible";
    case QpStatus::MaxIterations:
      return "max_iterations";
  }
  return "?";
}

/// Inequalities in the expanded row form C x <= d (Aineq rows, then finite
/// upper bounds, then finite lower bounds).
struct QpSolver::Expanded
{
  Eigen::MatrixXd C;
  Eigen::VectorXd d;

  static Expanded fromProblem(const QpProblem & p)
  {
    const int n = p.vars();
    const int mi = static_cast<int>(p.Aineq.rows());
    int extra = 0;
    if(p.ub.size() == n)
    {
      for(int j = 0; j < n; ++j)
      {
        if(std::isfinite(p.ub(j))) { ++extra; }
      }
    }
    if(p.lb.size() == n)
    {
      for(int j = 0; j < n; ++j)
      {
        if(std::isfinite(p.lb(j))) { ++extra; }
      }
    }
    Expanded e;
    e.C.setZero(mi + extra, n);
    e.d.setZero(mi + extra);
    if(mi > 0)
    {
      e.C.topRows(mi) = p.Aineq;
      e.d.head(mi) = p.bineq;
    }
    int r = mi;
    if(p.ub.size() == n)
    {
      for(int j = 0; j < n; ++j)
      {
        if(std::isfinite(p.ub(j)))
        {
          e.C(r, j) = 1.0;
          e.d(r) = p.ub(j);
          ++r;
        }
      }
    }
    if(p.lb.size() == n)
    {
      for(int j = 0; j < n; ++j)
      {
        if(std::isfinite(p.lb(j)))
        {
          e.C(r, j) = -1.0;
          e.d(r) = -p.lb(j);
          ++r;
        }
      }
    }
    return e;
  }
};

namespace
{

struct CoreResult
{
  Eigen::VectorXd x;
  Eigen::VectorXd eqMultipliers;
  Eigen::VectorXd ineqMultipliers; // dense over all rows of C
  std::vector<int> working;
  int iterations = 0;
  bool converged = false;
};

/// Primal active-set loop on: min 1/2 x'Hx + g'x, Aeq x = beq, C x <= d,
/// starting from a feasible x with an independent working set. H must be
/// positive definite (regularized by the caller); the loop minimizes with
/// that same matrix. Ties in the ratio test and multiplier selection resolve
/// by iteration order, which is deterministic.
CoreResult activeSetLoop(const Eigen::MatrixXd & H,
                         const Eigen::LLT<Eigen::MatrixXd> & hFactor,
                         const Eigen::VectorXd & g,
                         const Eigen::MatrixXd & Aeq,
                         const Eigen::MatrixXd & C,
                         const Eigen::VectorXd & d,
                         Eigen::VectorXd x,
                         std::vector<int> working,
                         const QpSolver::Options & opt,
                         int maxIterations)
{
  const int n = static_cast<int>(g.size());
  const int me = static_cast<int>(Aeq.rows());
  const int mc = static_cast<int>(C.rows());

  CoreResult res;
  res.ineqMultipliers.setZero(mc);
  res.eqMultipliers.setZero(me);

  std::vector<char> inWorking(static_cast<size_t>(mc), 0);
  for(int i : working) { inWorking[static_cast<size_t>(i)] = 1; }

  Eigen::VectorXd grad(n), p(n), lambda;
  for(int iter = 0; iter < maxIterations; ++iter)
  {
    res.iterations = iter + 1;
    grad.noalias() = H * x;
    grad += g;

    const int mw = me + static_cast<int>(working.size());
    if(mw == 0)
    {
      p = -hFactor.solve(grad);
      lambda.resize(0);
    }
    else
    {
      Eigen::MatrixXd M(mw, n);
      if(me > 0) { M.topRows(me) = Aeq; }
      for(size_t k = 0; k < working.size(); ++k) { M.row(me + static_cast<int>(k)) = C.row(working[k]); }
      Eigen::MatrixXd HinvMt = hFactor.solve(M.transpose());
      Eigen::MatrixXd S = M * HinvMt;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
      lu.setThreshold(1e-12);
      if(lu.rank() < mw && !working.empty())
      {
        // Dependent working set (possible from a degenerate warm start):
        // drop the most recently added inequality and retry.
        int dropped = working.back();
        working.pop_back();
        inWorking[static_cast<size_t>(dropped)] = 0;
        continue;
      }
      lambda = lu.solve(-(M * hFactor.solve(grad)));
      p = -hFactor.solve(grad + M.transpose() * lambda);
    }

    if(p.lpNorm<Eigen::Infinity>() <= opt.stepTol * (1.0 + x.lpNorm<Eigen::Infinity>()))
    {
      // Stationary on the working set: check inequality multipliers.
      int worst = -1;
      double worstValue = -opt.multiplierTol;
      for(size_t k = 0; k < working.size(); ++k)
      {
        double lk = lambda(me + static_cast<int>(k));
        if(lk < worstValue)
        {
          worstValue = lk;
          worst = static_cast<int>(k);
        }
      }
      if(worst < 0)
      {
        res.x = x;
        res.working = working;
        if(me > 0) { res.eqMultipliers = lambda.head(me); }
        for(size_t k = 0; k < working.size(); ++k)
        {
          res.ineqMultipliers(working[k]) = std::max(0.0, lambda(me + static_cast<int>(k)));
        }
        res.converged = true;
        return res;
      }
      int droppedRow = working[static_cast<size_t>(worst)];
      working.erase(working.begin() + worst);
      inWorking[static_cast<size_t>(droppedRow)] = 0;
      continue;
    }

    // Ratio test toward the constrained minimizer.
    double alpha = 1.0;
    int blocking = -1;
    for(int i = 0; i < mc; ++i)
    {
      if(inWorking[static_cast<size_t>(i)]) { continue; }
      double cp = C.row(i).dot(p);
      if(cp <= opt.stepTol) { continue; }
      double slack = d(i) - C.row(i).dot(x);
      double ratio = std::max(slack, 0.0) / cp;
      if(ratio < alpha)
      {
        alpha = ratio;
        blocking = i;
      }
    }
    x += alpha * p;
    if(blocking >= 0)
    {
      working.push_back(blocking);
      inWorking[static_cast<size_t>(blocking)] = 1;
    }
  }

  res.x = x;
  res.working = working;
  res.converged = false;
  return res;
}

/// Greedy selection of linearly independent rows (together with Aeq).
std::vector<int> independentRows(const Eigen::MatrixXd & Aeq,
                                 const Eigen::MatrixXd & C,
                                 const std::vector<int> & candidates,
                                 int maxRows)
{
  const int n = static_cast<int>(C.cols());
  const int me = static_cast<int>(Aeq.rows());
  std::vector<int> kept;
  if(maxRows <= 0) { return kept; }
  Eigen::MatrixXd M(me + std::min<int>(maxRows, static_cast<int>(candidates.size())), n);
  if(me > 0) { M.topRows(me) = Aeq; }
  int rows = me;
  int rank = 0;
  if(me > 0)
  {
    rank = static_cast<int>(Aeq.completeOrthogonalDecomposition().rank());
  }
  for(int c : candidates)
  {
    if(rows - me >= maxRows) { break; }
    M.row(rows) = C.row(c);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M.topRows(rows + 1));
    if(static_cast<int>(cod.rank()) > rank)
    {
      rank = static_cast<int>(cod.rank());
      kept.push_back(c);
      ++rows;
    }
  }
  return kept;
}

double scaledKktResidual(const QpProblem & p,
                         const Eigen::MatrixXd & C,
                         const Eigen::VectorXd & d,
                         const Eigen::VectorXd & x,
                         const Eigen::VectorXd & nu,
                         const Eigen::VectorXd & lambda)
{
  Eigen::VectorXd stat = p.H * x + p.g;
  if(p.Aeq.rows() > 0) { stat += p.Aeq.transpose() * nu; }
  if(C.rows() > 0) { stat += C.transpose() * lambda; }
  double gradScale = 1.0 + p.g.lpNorm<Eigen::Infinity>() + (p.H * x).lpNorm<Eigen::Infinity>();
  double r = stat.lpNorm<Eigen::Infinity>() / gradScale;
  if(p.Aeq.rows() > 0)
  {
    r = std::max(r, (p.Aeq * x - p.beq).lpNorm<Eigen::Infinity>() / (1.0 + p.beq.lpNorm<Eigen::Infinity>()));
  }
  for(int i = 0; i < C.rows(); ++i)
  {
    double slack = C.row(i).dot(x) - d(i);
    r = std::max(r, slack / (1.0 + std::abs(d(i))));
    r = std::max(r, -lambda(i));
    r = std::max(r, std::abs(lambda(i) * slack) / gradScale);
  }
  return r;
}

} // namespace

QpSolution QpSolver::solve(const QpProblem & problem)
{
  return solve(problem, Eigen::VectorXd(), {});
}

QpSolution QpSolver::solve(const QpProblem & problem, const Eigen::VectorXd & warmX, const std::vector<int> & warmActive)
{
  const int n = problem.vars();
  Expanded ex = Expanded::fromProblem(problem);
  const int mc = static_cast<int>(ex.C.rows());
  const int me = static_cast<int>(problem.Aeq.rows());

  QpSolution sol;
  sol.ineqMultipliers.setZero(mc);
  sol.eqMultipliers.setZero(me);

  // Regularize when the smallest eigenvalue estimate is below threshold.
  Eigen::MatrixXd H = 0.5 * (problem.H + problem.H.transpose());
  double minEig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  double reg = 0.0;
  if(minEig < options_.regThreshold) { reg = options_.regEpsilon; }
  Eigen::LLT<Eigen::MatrixXd> hFactor;
  for(;;)
  {
    Eigen::MatrixXd Hreg = H;
    if(reg > 0.0) { Hreg.diagonal().array() += reg; }
    hFactor.compute(Hreg);
    if(hFactor.info() == Eigen::Success)
    {
      H = Hreg;
      break;
    }
    reg = (reg == 0.0) ? options_.regEpsilon : 10.0 * reg;
    if(reg > 1e-2)
    {
      sol.status = QpStatus::MaxIterations;
      sol.x.setZero(n);
      return sol;
    }
  }

  double bScale = 1.0 + (mc > 0 ? ex.d.lpNorm<Eigen::Infinity>() : 0.0);

  // Starting point: warm start when provided and feasible, otherwise an
  // equality-consistent point pushed to feasibility by Phase-1 if needed.
  Eigen::VectorXd x0;
  std::vector<int> working;
  bool haveStart = false;
  if(warmX.size() == n)
  {
    bool feasible = true;
    if(me > 0 && (problem.Aeq * warmX - problem.beq).lpNorm<Eigen::Infinity>() > options_.feasibilityTol * bScale)
    {
      feasible = false;
    }
    for(int i = 0; feasible && i < mc; ++i)
    {
      if(ex.C.row(i).dot(warmX) - ex.d(i) > options_.feasibilityTol * bScale) { feasible = false; }
    }
    if(feasible)
    {
      x0 = warmX;
      std::vector<int> candidates;
      for(int i : warmActive)
      {
        if(i >= 0 && i < mc && std::abs(ex.C.row(i).dot(x0) - ex.d(i)) <= 1e-7 * bScale) { candidates.push_back(i); }
      }
      working = independentRows(problem.Aeq, ex.C, candidates, n - me);
      haveStart = true;
    }
  }

  if(!haveStart)
  {
    if(me > 0)
    {
      x0 = problem.Aeq.completeOrthogonalDecomposition().solve(problem.beq);
      if((problem.Aeq * x0 - problem.beq).lpNorm<Eigen::Infinity>()
         > 1e-8 * (1.0 + problem.beq.lpNorm<Eigen::Infinity>()))
      {
        sol.status = QpStatus::Infeasible;
        sol.x = x0;
        return sol;
      }
    }
    else
    {
      x0.setZero(n);
    }

    std::vector<int> violated;
    for(int i = 0; i < mc; ++i)
    {
      if(ex.C.row(i).dot(x0) - ex.d(i) > options_.feasibilityTol * bScale) { violated.push_back(i); }
    }

    if(!violated.empty())
    {
      // Phase 1: minimize the slack sum over violated rows. The slack start
      // point is strictly feasible for this problem by construction.
      const int ns = static_cast<int>(violated.size());
      const int n1 = n + ns;
      const double eps1 = 1e-8;
      Eigen::MatrixXd H1 = Eigen::MatrixXd::Identity(n1, n1) * eps1;
      Eigen::VectorXd g1(n1);
      g1.head(n) = -eps1 * x0;
      g1.tail(ns).setOnes();
      Eigen::MatrixXd Aeq1(me, n1);
      if(me > 0)
      {
        Aeq1.setZero();
        Aeq1.leftCols(n) = problem.Aeq;
      }
      Eigen::MatrixXd C1(mc + ns, n1);
      Eigen::VectorXd d1(mc + ns);
      C1.setZero();
      C1.topLeftCorner(mc, n) = ex.C;
      d1.head(mc) = ex.d;
      for(int k = 0; k < ns; ++k)
      {
        C1(violated[static_cast<size_t>(k)], n + k) = -1.0; // c_i x - s_k <= d_i
        C1(mc + k, n + k) = -1.0; // s_k >= 0
        d1(mc + k) = 0.0;
      }
      Eigen::VectorXd z0(n1);
      z0.head(n) = x0;
      for(int k = 0; k < ns; ++k)
      {
        int i = violated[static_cast<size_t>(k)];
        z0(n + k) = (ex.C.row(i).dot(x0) - ex.d(i)) + 1e-6;
      }
      Eigen::LLT<Eigen::MatrixXd> h1Factor(H1);
      CoreResult phase1 =
          activeSetLoop(H1, h1Factor, g1, Aeq1, C1, d1, z0, {}, options_, 4 * options_.maxIterations);
      sol.iterations += phase1.iterations;
      double residual = phase1.x.tail(ns).cwiseMax(0.0).sum();
      if(!phase1.converged || residual > options_.phase1Tol * bScale)
      {
        sol.status = QpStatus::Infeasible;
        sol.x = phase1.x.head(n);
        return sol;
      }
      x0 = phase1.x.head(n);
    }

    std::vector<int> candidates;
    for(int i = 0; i < mc; ++i)
    {
      if(std::abs(ex.C.row(i).dot(x0) - ex.d(i)) <= 1e-9 * bScale) { candidates.push_back(i); }
    }
    working = independentRows(problem.Aeq, ex.C, candidates, n - me);
  }

  CoreResult core =
      activeSetLoop(H, hFactor, problem.g, problem.Aeq, ex.C, ex.d, x0, working, options_, options_.maxIterations);
  sol.iterations += core.iterations;
  sol.x = core.x;
  sol.eqMultipliers = core.eqMultipliers;
  sol.ineqMultipliers = core.ineqMultipliers;
  sol.activeSet = core.working;
  std::sort(sol.activeSet.begin(), sol.activeSet.end());
  sol.objective = 0.5 * core.x.dot(problem.H * core.x) + problem.g.dot(core.x);
  if(!core.converged)
  {
    sol.status = QpStatus::MaxIterations;
    return sol;
  }
  sol.kktResidual = scaledKktResidual(problem, ex.C, ex.d, core.x, core.eqMultipliers, core.ineqMultipliers);
  sol.status = QpStatus::Optimal;
  return sol;
}

} // namespace dcmstab
