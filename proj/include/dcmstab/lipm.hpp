#pragma once

#include <dcmstab/spatial.hpp>

namespace dcmstab
{

/// Natural frequency omega = sqrt(g / h) of the pendulum.
/// Throws NonPositiveHeight when h <= 0 (or g <= 0).
double naturalFrequency(double gravity, double comHeight);

/// Point-mass pendulum parameters. omega is derived once from the nominal CoM
/// height and held constant for a whole scenario, including on stairs.
struct LipmParams
{
  double mass = 40.0; // kg
  double gravity = 9.81; // m/s^2
  double comHeight = 0.78; // m, nominal height above the support surface
  double omega = 0.0; // 1/s

  static LipmParams make(double mass, double gravity, double comHeight)
  {
    return {mass, gravity, comHeight, naturalFrequency(gravity, comHeight)};
  }
};

struct LipmState
{
  Vec3 com = Vec3::Zero();
  Vec3 comVel = Vec3::Zero();
  Vec3 comAcc = Vec3::Zero();
};

/// Horizontal pendulum acceleration omega^2 (c - z); z-component is zero.
Vec3 lipmAccel(const Vec3 & com, const Vec3 & zmp, double omega);

/// Divergent component of motion xi = c + cdot / omega (z-component zeroed).
Vec3 dcmOfState(const Vec3 & com, const Vec3 & comVel, double omega);

inline Vec3 dcmOfState(const LipmState & s, double omega)
{
  return dcmOfState(s.com, s.comVel, omega);
}

/// xidot = omega (xi - z): the DCM diverges away from the ZMP.
Vec3 dcmDerivative(const Vec3 & dcm, const Vec3 & zmp, double omega);

/// cdot = omega (xi - c): the CoM converges to the DCM.
Vec3 comDerivative(const Vec3 & com, const Vec3 & dcm, double omega);

} // namespace dcmstab
