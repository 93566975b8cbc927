#pragma once

#include <dcmstab/contact.hpp>
#include <dcmstab/qp.hpp>

namespace dcmstab
{

/// Cost weights of the distribution QP. The three levels approximate a
/// lexicographic order: realize the net wrench, then minimize ankle torques,
/// then track the prescribed pressure ratio.
struct DistributionWeights
{
  double netWrench = 10000.0;
  double ankleTorque = 100.0;
  double pressureRatio = 1.0;
  double epsilon = 1e-4; // weight of non-ankle-torque components in W_ankle
};

struct DistributionResult
{
  Wrench6 leftWrench; // left sole-center frame
  Wrench6 rightWrench; // right sole-center frame
  Vec3 zmp = Vec3::Zero(); // world ZMP of the summed wrench at the support plane
  Vec3 leftCop = Vec3::Zero(); // p_qp, left sole frame
  Vec3 rightCop = Vec3::Zero();
  double leftPressure = 0.0; // f_z targets, N
  double rightPressure = 0.0;
  QpStatus status = QpStatus::Infeasible;
  int iterations = 0;
  double netResidual = 0.0; // ||w_left0 + w_right0 - w_net0||
};

/// Quadratic cost of a double-support candidate (left/right wrenches in sole
/// frames), as weighed by the QP. Exposed so independent oracles can compare
/// candidate points against solver output.
double distributionCost(const Wrench6 & netWrench,
                        const ContactSpec & left,
                        const ContactSpec & right,
                        double rho,
                        const DistributionWeights & weights,
                        const Vec6 & leftSole,
                        const Vec6 & rightSole);

/// Wrench distribution between the two feet. Holds the solver workspace and
/// warm-start state; one instance per control thread.
class WrenchDistributor
{
public:
  WrenchDistributor() = default;

  /// Double support: split the commanded net wrench (world frame, torque
  /// about the origin) between both feet under cone and minimum-pressure
  /// constraints. rho in [0, 1] is the prescribed left-pressure fraction.
  /// supportHeight is the plane on which the returned ZMP is computed.
  DistributionResult distributeDouble(const Wrench6 & netWrench,
                                      const ContactSpec & left,
                                      const ContactSpec & right,
                                      double rho,
                                      const DistributionWeights & weights,
                                      double supportHeight);

  /// Single support: saturate the commanded net wrench to the support foot's
  /// feasibility set (nearest feasible wrench in the world-frame metric).
  DistributionResult saturateSingle(const Wrench6 & netWrench,
                                    const ContactSpec & support,
                                    bool supportIsLeft,
                                    double supportHeight);

  void resetWarmStart();

private:
  QpSolver solver_;
  Eigen::VectorXd warmDoubleX_;
  std::vector<int> warmDoubleActive_;
  Eigen::VectorXd warmSingleX_;
  std::vector<int> warmSingleActive_;
};

} // namespace dcmstab
