#pragma once

#include <dcmstab/lipm.hpp>
#include <dcmstab/spatial.hpp>

namespace dcmstab
{

/// DCM feedback gains, all in Hz except the integrator time constant.
struct DcmGains
{
  double kp = 5.0;
  double ki = 20.0;
  double kz = 2.0;
  double ti = 20.0; // s
};

/// Exponential moving average of its input: bounded by the largest input
/// magnitude seen, which is the anti-windup property the integral term needs.
struct LeakyIntegrator
{
  Vec3 value = Vec3::Zero();
  double timeConstant = 20.0;

  LeakyIntegrator updated(const Vec3 & input, double dt) const
  {
    double decay = std::exp(-dt / timeConstant);
    LeakyIntegrator next;
    next.timeConstant = timeConstant;
    next.value = decay * value + (1.0 - decay) * input;
    return next;
  }
};

struct DcmFeedbackOutput
{
  Vec3 zmpCommand = Vec3::Zero();
  LeakyIntegrator integrator;
};

/// Commanded ZMP from DCM error:
///   z = z_d - [1 + kp/w](xi_d - xi_m) - (ki/w) avg(xi_d - xi_m) + (kz/w)(z_d - z_m)
/// The integrator is advanced with the current error unless frozen (short
/// phases, distribution failures).
DcmFeedbackOutput dcmFeedback(const Vec3 & dcmDesired,
                              const Vec3 & zmpDesired,
                              const Vec3 & dcmMeasured,
                              const Vec3 & zmpMeasured,
                              const DcmGains & gains,
                              const LeakyIntegrator & integrator,
                              double omega,
                              double dt,
                              bool updateIntegrator = true);

/// Commanded net contact wrench equivalent to a commanded ZMP:
///   f_xy = m w^2 (c - z)_xy, f_z = m g, zero torque about the CoM.
/// Returned about the world origin, ready for the distribution QP.
Wrench6 netWrenchFromZmp(const Vec3 & com, const Vec3 & zmpCommand, const LipmParams & params);

} // namespace dcmstab
