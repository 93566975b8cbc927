#include <dcmstab/admittance.hpp>

#include <algorithm>

namespace dcmstab
{

Eigen::Vector2d footDamping(const Vec3 & copTarget,
                            const Vec3 & forceMeasured,
                            const Vec3 & torqueMeasured,
                            const AdmittanceGains & gains)
{
  if(forceMeasured.z() < gains.pressureDeadband)
  {
    return Eigen::Vector2d::Zero();
  }
  Vec3 torqueError = copTarget.cross(forceMeasured) - torqueMeasured;
  double roll = gains.copY * torqueError.x();
  double pitch = gains.copX * torqueError.y();
  roll = std::clamp(roll, -gains.ankleRateLimit, gains.ankleRateLimit);
  pitch = std::clamp(pitch, -gains.ankleRateLimit, gains.ankleRateLimit);
  return {roll, pitch};
}

FfdcResult footForceDifference(double leftVelDesired,
                               double rightVelDesired,
                               double leftPressureTarget,
                               double rightPressureTarget,
                               double leftPressureMeasured,
                               double rightPressureMeasured,
                               double desiredAltitudeSum,
                               double commandedAltitudeSum,
                               const AdmittanceGains & gains)
{
  FfdcResult r;
  r.dfzVelocity =
      gains.dfz * ((leftPressureTarget - rightPressureTarget) - (leftPressureMeasured - rightPressureMeasured));
  r.vdcVelocity = gains.vdcFrequency * (desiredAltitudeSum - commandedAltitudeSum);
  r.leftVelocity = leftVelDesired - 0.5 * r.dfzVelocity + 0.5 * r.vdcVelocity;
  r.rightVelocity = rightVelDesired + 0.5 * r.dfzVelocity + 0.5 * r.vdcVelocity;
  return r;
}

Vec3 comAdmittance(const Vec3 & comAccelDesired,
                   const Vec3 & zmpMeasured,
                   const Vec3 & zmpDistributed,
                   const AdmittanceGains & gains,
                   bool zmpValid)
{
  if(!zmpValid)
  {
    return comAccelDesired;
  }
  Vec3 out = comAccelDesired;
  out.x() += gains.comX * (zmpMeasured.x() - zmpDistributed.x());
  out.y() += gains.comY * (zmpMeasured.y() - zmpDistributed.y());
  return out;
}

Vec3 taskTrackingAccel(const Vec3 & pos,
                       const Vec3 & vel,
                       const Vec3 & posCmd,
                       const Vec3 & velCmd,
                       const Vec3 & accCmd,
                       double stiffness,
                       double damping)
{
  return stiffness * (posCmd - pos) + damping * (velCmd - vel) + accCmd;
}

double taskTrackingAccel(double pos, double vel, double posCmd, double velCmd, double accCmd, double stiffness, double damping)
{
  return stiffness * (posCmd - pos) + damping * (velCmd - vel) + accCmd;
}

} // namespace dcmstab
