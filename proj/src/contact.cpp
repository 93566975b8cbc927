#include <dcmstab/contact.hpp>

namespace dcmstab
{

CwcMatrix buildCwc(const ContactSpec & spec)
{
  const double X = spec.halfLength;
  const double Y = spec.halfWidth;
  const double mu = spec.friction;
  CwcMatrix U;
  // Wrench ordering: (fx, fy, fz, tx, ty, tz).
  U << -1, 0, -mu, 0, 0, 0, //
      1, 0, -mu, 0, 0, 0, //
      0, -1, -mu, 0, 0, 0, //
      0, 1, -mu, 0, 0, 0, //
      0, 0, -Y, -1, 0, 0, //
      0, 0, -Y, 1, 0, 0, //
      0, 0, -X, 0, -1, 0, //
      0, 0, -X, 0, 1, 0, //
      -Y, -X, -(X + Y) * mu, mu, mu, -1, //
      -Y, X, -(X + Y) * mu, mu, -mu, -1, //
      Y, -X, -(X + Y) * mu, -mu, mu, -1, //
      Y, X, -(X + Y) * mu, -mu, -mu, -1, //
      Y, X, -(X + Y) * mu, mu, mu, 1, //
      Y, -X, -(X + Y) * mu, mu, -mu, 1, //
      -Y, X, -(X + Y) * mu, -mu, mu, 1, //
      -Y, -X, -(X + Y) * mu, -mu, -mu, 1;
  return U;
}

CwcMargins cwcAnalyticMargins(const ContactSpec & spec, const Wrench6 & w)
{
  const double X = spec.halfLength;
  const double Y = spec.halfWidth;
  const double mu = spec.friction;
  const double fx = w.force.x();
  const double fy = w.force.y();
  const double fz = w.force.z();
  const double tx = w.torque.x();
  const double ty = w.torque.y();
  const double tz = w.torque.z();

  CwcMargins m;
  m.friction = std::max(std::abs(fx), std::abs(fy)) - mu * fz;
  m.cop = std::max(std::abs(tx) - Y * fz, std::abs(ty) - X * fz);
  double tzMin = -mu * (X + Y) * fz + std::abs(Y * fx - mu * tx) + std::abs(X * fy - mu * ty);
  double tzMax = mu * (X + Y) * fz - std::abs(Y * fx + mu * tx) - std::abs(X * fy + mu * ty);
  m.yaw = std::max(tzMin - tz, tz - tzMax);
  return m;
}

} // namespace dcmstab
