#pragma once

#include <dcmstab/spatial.hpp>

namespace dcmstab
{

enum class Foot
{
  Left,
  Right
};

inline const char * footName(Foot f)
{
  return f == Foot::Left ? "left" : "right";
}

inline Foot otherFoot(Foot f)
{
  return f == Foot::Left ? Foot::Right : Foot::Left;
}

struct AdmittanceGains
{
  double copX = 0.1; // s/kg, ankle pitch reaction to sagittal CoP error
  double copY = 0.1; // s/kg, ankle roll reaction to lateral CoP error
  double dfz = 1e-4; // s/kg, foot force difference damping
  double vdcFrequency = 1.0; // 1/T_vdc, Hz
  double comX = 20.0; // 1/kg
  double comY = 10.0; // 1/kg
  double pressureDeadband = 10.0; // N, below which force feedback holds feedforward
  double ankleRateLimit = 1.0; // rad/s
  double footVelLimit = 0.1; // m/s
};

/// Ankle roll/pitch rate command of one foot plus its vertical sole velocity.
struct FootCommand
{
  double rollRate = 0.0; // rad/s
  double pitchRate = 0.0; // rad/s
  double verticalVelocity = 0.0; // m/s
  Foot foot = Foot::Left;
};

/// Foot damping control: ankle rates tracking a desired CoP,
///   [roll; pitch] = A_cop (p_qp x f_m - tau_m)
/// with A_cop,y on the roll row and A_cop,x on the pitch row. Inputs are in
/// the foot sole frame; output is zero below the pressure deadband.
Eigen::Vector2d footDamping(const Vec3 & copTarget,
                            const Vec3 & forceMeasured,
                            const Vec3 & torqueMeasured,
                            const AdmittanceGains & gains);

struct FfdcResult
{
  double leftVelocity = 0.0; // v_Lz^c
  double rightVelocity = 0.0; // v_Rz^c
  double dfzVelocity = 0.0; // v_dfz
  double vdcVelocity = 0.0; // v_vdc
};

/// Foot force difference control (double support only): antisymmetric
/// pressure-difference damping plus vertical drift compensation. Velocity
/// limits are applied by the caller when building foot commands so that the
/// antisymmetry identity of the law itself stays exact.
FfdcResult footForceDifference(double leftVelDesired,
                               double rightVelDesired,
                               double leftPressureTarget,
                               double rightPressureTarget,
                               double leftPressureMeasured,
                               double rightPressureMeasured,
                               double desiredAltitudeSum,
                               double commandedAltitudeSum,
                               const AdmittanceGains & gains);

/// CoM admittance: commanded acceleration offset toward the measured ZMP,
///   cddot_c = cddot_d + A_com (z_m - z_qp).
/// Horizontal components only. Falls back to the feedforward when the
/// measured ZMP is invalid (pressure below deadband).
Vec3 comAdmittance(const Vec3 & comAccelDesired,
                   const Vec3 & zmpMeasured,
                   const Vec3 & zmpDistributed,
                   const AdmittanceGains & gains,
                   bool zmpValid = true);

/// Acceleration-based tracking law xddot = K (x_c - x) + B (xdot_c - xdot) + xddot_c.
Vec3 taskTrackingAccel(const Vec3 & pos,
                       const Vec3 & vel,
                       const Vec3 & posCmd,
                       const Vec3 & velCmd,
                       const Vec3 & accCmd,
                       double stiffness,
                       double damping);

double taskTrackingAccel(double pos, double vel, double posCmd, double velCmd, double accCmd, double stiffness, double damping);

} // namespace dcmstab
