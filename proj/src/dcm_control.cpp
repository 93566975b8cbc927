#include <dcmstab/dcm_control.hpp>

namespace dcmstab
{

DcmFeedbackOutput dcmFeedback(const Vec3 & dcmDesired,
                              const Vec3 & zmpDesired,
                              const Vec3 & dcmMeasured,
                              const Vec3 & zmpMeasured,
                              const DcmGains & gains,
                              const LeakyIntegrator & integrator,
                              double omega,
                              double dt,
                              bool updateIntegrator)
{
  Vec3 dcmError = dcmDesired - dcmMeasured;
  DcmFeedbackOutput out;
  out.integrator = updateIntegrator ? integrator.updated(dcmError, dt) : integrator;
  out.zmpCommand = zmpDesired - (1.0 + gains.kp / omega) * dcmError - (gains.ki / omega) * out.integrator.value
                   + (gains.kz / omega) * (zmpDesired - zmpMeasured);
  out.zmpCommand.z() = zmpDesired.z();
  return out;
}

Wrench6 netWrenchFromZmp(const Vec3 & com, const Vec3 & zmpCommand, const LipmParams & params)
{
  Vec3 accel = lipmAccel(com, zmpCommand, params.omega);
  Wrench6 aboutCom;
  aboutCom.force = {params.mass * accel.x(), params.mass * accel.y(), params.mass * params.gravity};
  aboutCom.torque.setZero();
  aboutCom.frame = FrameId::World;
  // Re-express the torque about the world origin.
  return transformWrench(aboutCom, Transform::fromTranslation(com), FrameId::World);
}

} // namespace dcmstab
