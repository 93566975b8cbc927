#include <dcmstab/wrench_distribution.hpp>

namespace dcmstab
{

namespace
{

Vec6 ankleWeightSqrt(const DistributionWeights & weights)
{
  double e = std::sqrt(weights.epsilon);
  Vec6 w;
  w << e, e, e, 1.0, 1.0, e; // (fx, fy, fz, tx, ty, tz): full weight on ankle roll/pitch torques
  return w;
}

Mat6 soleToAnkle(const ContactSpec & spec)
{
  return wrenchTransformMatrix(Transform::fromTranslation(-spec.ankleOffset));
}

} // namespace

double distributionCost(const Wrench6 & netWrench,
                        const ContactSpec & left,
                        const ContactSpec & right,
                        double rho,
                        const DistributionWeights & weights,
                        const Vec6 & leftSole,
                        const Vec6 & rightSole)
{
  Mat6 Dl = wrenchTransformMatrix(left.solePose);
  Mat6 Dr = wrenchTransformMatrix(right.solePose);
  Vec6 netResidual = Dl * leftSole + Dr * rightSole - netWrench.vector();
  Vec6 wSqrt = ankleWeightSqrt(weights);
  Vec6 la = wSqrt.cwiseProduct(soleToAnkle(left) * leftSole);
  Vec6 ra = wSqrt.cwiseProduct(soleToAnkle(right) * rightSole);
  double pressureTerm = (1.0 - rho) * leftSole(2) - rho * rightSole(2);
  return weights.netWrench * netResidual.squaredNorm() + weights.ankleTorque * (la.squaredNorm() + ra.squaredNorm())
         + weights.pressureRatio * pressureTerm * pressureTerm;
}

DistributionResult WrenchDistributor::distributeDouble(const Wrench6 & netWrench,
                                                       const ContactSpec & left,
                                                       const ContactSpec & right,
                                                       double rho,
                                                       const DistributionWeights & weights,
                                                       double supportHeight)
{
  // Variables
  // ---------
  // x = [w_lc (6), w_rc (6)]: per-foot contact wrenches in sole-center frames.
  //
  // Objective (weighted least squares)
  // ----------------------------------
  // w_left0 + w_right0 == netWrench      (world frame, weight 10000)
  // w_lankle == 0, w_rankle == 0         (anisotropic W_ankle, weight 100)
  // (1 - rho) f_lz == rho f_rz           (weight 1)
  //
  // Constraints
  // -----------
  // U w_lc <= 0, U w_rc <= 0             (contact wrench cones)
  // f_lz >= p_min, f_rz >= p_min
  const int n = 12;
  Mat6 Dl = wrenchTransformMatrix(left.solePose);
  Mat6 Dr = wrenchTransformMatrix(right.solePose);

  Eigen::MatrixXd A1(6, n);
  A1.leftCols<6>() = Dl;
  A1.rightCols<6>() = Dr;
  Eigen::VectorXd b1 = netWrench.vector();

  Vec6 wSqrt = ankleWeightSqrt(weights);
  Eigen::MatrixXd A2(12, n);
  A2.setZero();
  A2.topLeftCorner<6, 6>() = wSqrt.asDiagonal() * soleToAnkle(left);
  A2.bottomRightCorner<6, 6>() = wSqrt.asDiagonal() * soleToAnkle(right);

  Eigen::RowVectorXd a3(n);
  a3.setZero();
  a3(2) = 1.0 - rho;
  a3(8) = -rho;

  QpProblem qp;
  qp.H.setZero(n, n);
  qp.g.setZero(n);
  qp.H += 2.0 * weights.netWrench * A1.transpose() * A1;
  qp.g -= 2.0 * weights.netWrench * A1.transpose() * b1;
  qp.H += 2.0 * weights.ankleTorque * A2.transpose() * A2;
  qp.H += 2.0 * weights.pressureRatio * a3.transpose() * a3;
  qp.Aeq.resize(0, n);
  qp.beq.resize(0);

  qp.Aineq.setZero(34, n);
  qp.bineq.setZero(34);
  qp.Aineq.topLeftCorner<16, 6>() = buildCwc(left);
  qp.Aineq.block<16, 6>(16, 6) = buildCwc(right);
  qp.Aineq(32, 2) = -1.0;
  qp.bineq(32) = -left.minPressure;
  qp.Aineq(33, 8) = -1.0;
  qp.bineq(33) = -right.minPressure;

  QpSolution s = solver_.solve(qp, warmDoubleX_, warmDoubleActive_);

  DistributionResult res;
  res.status = s.status;
  res.iterations = s.iterations;
  res.leftWrench = Wrench6::fromVector(s.x.head<6>(), FrameId::LeftSoleCenter);
  res.rightWrench = Wrench6::fromVector(s.x.tail<6>(), FrameId::RightSoleCenter);
  if(s.status != QpStatus::Optimal)
  {
    return res;
  }
  warmDoubleX_ = s.x;
  warmDoubleActive_ = s.activeSet;

  Vec6 world = Dl * s.x.head<6>() + Dr * s.x.tail<6>();
  res.netResidual = (world - b1).norm();
  Wrench6 sum = Wrench6::fromVector(world, FrameId::World);
  res.zmp = zmpAtHeight(sum, supportHeight);
  res.leftCop = copOfWrench(res.leftWrench);
  res.rightCop = copOfWrench(res.rightWrench);
  res.leftPressure = res.leftWrench.force.z();
  res.rightPressure = res.rightWrench.force.z();
  return res;
}

DistributionResult WrenchDistributor::saturateSingle(const Wrench6 & netWrench,
                                                     const ContactSpec & support,
                                                     bool supportIsLeft,
                                                     double supportHeight)
{
  // Nearest feasible wrench in the world-frame metric: the net-wrench cost
  // alone defines a single optimum in single support.
  const int n = 6;
  Mat6 D = wrenchTransformMatrix(support.solePose);
  Eigen::VectorXd b = netWrench.vector();

  QpProblem qp;
  qp.H = 2.0 * (D.transpose() * D);
  qp.g = -2.0 * (D.transpose() * b);
  qp.Aeq.resize(0, n);
  qp.beq.resize(0);
  qp.Aineq.setZero(17, n);
  qp.bineq.setZero(17);
  qp.Aineq.topRows<16>() = buildCwc(support);
  qp.Aineq(16, 2) = -1.0;
  qp.bineq(16) = -support.minPressure;

  QpSolution s = solver_.solve(qp, warmSingleX_, warmSingleActive_);

  DistributionResult res;
  res.status = s.status;
  res.iterations = s.iterations;
  FrameId frame = supportIsLeft ? FrameId::LeftSoleCenter : FrameId::RightSoleCenter;
  Wrench6 w = Wrench6::fromVector(s.x, frame);
  if(s.status != QpStatus::Optimal)
  {
    (supportIsLeft ? res.leftWrench : res.rightWrench) = w;
    return res;
  }
  warmSingleX_ = s.x;
  warmSingleActive_ = s.activeSet;

  Vec6 world = D * s.x;
  res.netResidual = (world - b).norm();
  Wrench6 sum = Wrench6::fromVector(world, FrameId::World);
  res.zmp = zmpAtHeight(sum, supportHeight);
  Vec3 cop = copOfWrench(w);
  if(supportIsLeft)
  {
    res.leftWrench = w;
    res.rightWrench = Wrench6::zero(FrameId::RightSoleCenter);
    res.leftCop = cop;
    res.leftPressure = w.force.z();
  }
  else
  {
    res.rightWrench = w;
    res.leftWrench = Wrench6::zero(FrameId::LeftSoleCenter);
    res.rightCop = cop;
    res.rightPressure = w.force.z();
  }
  return res;
}

void WrenchDistributor::resetWarmStart()
{
  warmDoubleX_.resize(0);
  warmDoubleActive_.clear();
  warmSingleX_.resize(0);
  warmSingleActive_.clear();
}

} // namespace dcmstab
