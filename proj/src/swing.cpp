#include <dcmstab/swing.hpp>

#include <algorithm>
#include <cmath>

namespace dcmstab
{

namespace
{

// Cubic step with zero end slopes, on s in [0, 1].
double hermite01(double s)
{
  return s * s * (3.0 - 2.0 * s);
}

double hermite01Dot(double s)
{
  return 6.0 * s * (1.0 - s);
}

// Quintic step with zero end velocity and acceleration.
double quintic01(double s)
{
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double quintic01Dot(double s)
{
  return 30.0 * s * s * (1.0 - s) * (1.0 - s);
}

} // namespace

SwingSample swingTrajectory(const Transform & from,
                            const Transform & to,
                            double apexHeight,
                            double duration,
                            double t)
{
  if(duration <= 0.0)
  {
    throw OutOfPhase("swing duration must be positive");
  }
  if(t < -1e-12 || t > duration + 1e-12)
  {
    throw OutOfPhase("swing time " + std::to_string(t) + " outside [0, " + std::to_string(duration) + "]");
  }
  t = std::clamp(t, 0.0, duration);

  double z0 = from.translation.z();
  double z1 = to.translation.z();
  double zApex = std::max(z0, z1) + apexHeight;
  double tApex = 0.5 * duration;

  SwingSample out;

  // Vertical: lift then land, each a zero-slope Hermite segment.
  double z, zDot;
  if(t <= tApex)
  {
    double s = t / tApex;
    z = z0 + (zApex - z0) * hermite01(s);
    zDot = (zApex - z0) * hermite01Dot(s) / tApex;
  }
  else
  {
    double s = (t - tApex) / (duration - tApex);
    z = zApex + (z1 - zApex) * hermite01(s);
    zDot = (z1 - zApex) * hermite01Dot(s) / (duration - tApex);
  }

  // Horizontal: quintic profile between endpoints.
  double s = t / duration;
  double q = quintic01(s);
  double qDot = quintic01Dot(s) / duration;
  Eigen::Vector2d p0 = from.translation.head<2>();
  Eigen::Vector2d p1 = to.translation.head<2>();
  Eigen::Vector2d xy = p0 + q * (p1 - p0);
  Eigen::Vector2d xyDot = qDot * (p1 - p0);

  out.pose.translation = {xy.x(), xy.y(), z};
  out.linearVelocity = {xyDot.x(), xyDot.y(), zDot};

  // Orientation: geodesic interpolation with the same quintic profile.
  Eigen::AngleAxisd rel(from.rotation.transpose() * to.rotation);
  out.pose.rotation = from.rotation * Eigen::AngleAxisd(q * rel.angle(), rel.axis()).toRotationMatrix();
  out.angularVelocity = from.rotation * (qDot * rel.angle() * rel.axis());
  return out;
}

} // namespace dcmstab
