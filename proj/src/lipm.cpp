#include <dcmstab/lipm.hpp>

#include <cmath>

namespace dcmstab
{

double naturalFrequency(double gravity, double comHeight)
{
  if(comHeight <= 0.0)
  {
    throw NonPositiveHeight(comHeight);
  }
  if(gravity <= 0.0)
  {
    throw NonPositiveHeight(gravity);
  }
  return std::sqrt(gravity / comHeight);
}

Vec3 lipmAccel(const Vec3 & com, const Vec3 & zmp, double omega)
{
  Vec3 d = com - zmp;
  return {omega * omega * d.x(), omega * omega * d.y(), 0.0};
}

Vec3 dcmOfState(const Vec3 & com, const Vec3 & comVel, double omega)
{
  return {com.x() + comVel.x() / omega, com.y() + comVel.y() / omega, 0.0};
}

Vec3 dcmDerivative(const Vec3 & dcm, const Vec3 & zmp, double omega)
{
  Vec3 d = dcm - zmp;
  return {omega * d.x(), omega * d.y(), 0.0};
}

Vec3 comDerivative(const Vec3 & com, const Vec3 & dcm, double omega)
{
  Vec3 d = dcm - com;
  return {omega * d.x(), omega * d.y(), 0.0};
}

} // namespace dcmstab
