#pragma once

#include <dcmstab/spatial.hpp>

namespace dcmstab
{

/// Rectangular frictional contact of one sole.
struct ContactSpec
{
  double halfLength = 0.112; // X, m
  double halfWidth = 0.065; // Y, m
  double friction = 0.7;
  Transform solePose = Transform::identity(); // world pose of the sole-center frame
  Vec3 ankleOffset{0.0, 0.0, 0.093}; // ankle origin in sole-center coordinates
  double minPressure = 15.0; // N

  Transform anklePose() const
  {
    return solePose * Transform::fromTranslation(ankleOffset);
  }
};

/// 16x6 contact wrench cone U of a rectangular sole, acting on a stacked
/// (force, torque) wrench in sole-center coordinates: U w <= 0 iff the wrench
/// is realizable by the contact. Rows 0-3 bound the friction pyramid, rows
/// 4-7 keep the CoP inside the support rectangle, rows 8-15 bound the net yaw
/// moment.
using CwcMatrix = Eigen::Matrix<double, 16, 6>;

CwcMatrix buildCwc(const ContactSpec & spec);

/// Analytic counterparts of the three row families, used to cross-check the
/// linear matrix. Margins are <= 0 for feasible wrenches.
struct CwcMargins
{
  double friction; // max(|fx|, |fy|) - mu fz
  double cop; // max(|tx| - Y fz, |ty| - X fz)
  double yaw; // max(tz_min - tz, tz - tz_max)
};

CwcMargins cwcAnalyticMargins(const ContactSpec & spec, const Wrench6 & soleWrench);

} // namespace dcmstab
