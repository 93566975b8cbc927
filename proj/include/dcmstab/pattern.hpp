#pragma once

#include <dcmstab/footsteps.hpp>
#include <dcmstab/lipm.hpp>
#include <dcmstab/qp.hpp>
#include <dcmstab/swing.hpp>

namespace dcmstab
{

struct MpcParams
{
  double horizon = 1.6; // s
  double samplePeriod = 0.1; // s
  double zmpWeight = 1000.0;
  double velWeight = 10.0;
  double jerkWeight = 1.0;
  double polygonMargin = 0.02; // m, shrink applied to support rectangles
};

/// Diagnostics of one receding-horizon solve (both axes).
struct MpcSolveRecord
{
  double t = 0.0;
  double terminalDcmResidual = 0.0; // |xi(T) - z_ideal(T)|, max over axes
  double terminalZmpResidual = 0.0; // |z(T) - z_ideal(T)|, max over axes
  double maxPolygonViolation = 0.0; // over horizon samples
  QpStatus status = QpStatus::Optimal;
  int iterations = 0;
};

/// One control-period sample of the reference trajectories.
struct PatternSample
{
  double t = 0.0;
  Vec3 com = Vec3::Zero();
  Vec3 comVel = Vec3::Zero();
  Vec3 comAcc = Vec3::Zero();
  Vec3 dcm = Vec3::Zero(); // horizontal, z = 0
  Vec3 dcmVel = Vec3::Zero();
  Vec3 zmp = Vec3::Zero(); // z component = support plane height
  Transform leftPose;
  Transform rightPose;
  Vec3 leftVel = Vec3::Zero();
  Vec3 rightVel = Vec3::Zero();
  bool leftContact = true;
  bool rightContact = true;
  GaitPhase::Kind phaseKind = GaitPhase::Kind::Standing;
  Foot support = Foot::Left;
  int phaseIndex = 0;
  double rho = 0.5;
  double supportHeight = 0.0;
};

/// Reference trajectories sampled at the control period, produced ahead of
/// the control loop and immutable afterwards.
class WalkingPattern
{
public:
  WalkingPattern() = default;
  WalkingPattern(double dt, GaitSchedule schedule, std::vector<PatternSample> samples, std::vector<MpcSolveRecord> solves)
  : dt_(dt), schedule_(std::move(schedule)), samples_(std::move(samples)), solves_(std::move(solves))
  {
  }

  double dt() const { return dt_; }
  double duration() const { return samples_.empty() ? 0.0 : samples_.back().t; }
  const GaitSchedule & schedule() const { return schedule_; }
  const std::vector<PatternSample> & samples() const { return samples_; }
  const std::vector<MpcSolveRecord> & solves() const { return solves_; }

  /// Nearest sample at or before t (clamped to the sampled range).
  const PatternSample & sample(double t) const;

private:
  double dt_ = 0.005;
  GaitSchedule schedule_;
  std::vector<PatternSample> samples_;
  std::vector<MpcSolveRecord> solves_;
};

/// Generate the walking pattern by receding-horizon linear MPC on the
/// triple-integrator CoM, re-solved every samplePeriod with open-loop
/// integration in between. Throws PatternInfeasible when the support
/// constraints cannot be met.
WalkingPattern generatePattern(const GaitSchedule & schedule,
                               const MpcParams & params,
                               const LipmParams & lipm,
                               double controlPeriod);

} // namespace dcmstab
