#include <dcmstab/spatial.hpp>

namespace dcmstab
{

const char * frameName(FrameId frame)
{
  switch(frame)
  {
    case FrameId::World:
      return "world";
    case FrameId::LeftSoleCenter:
      return "leftSoleCenter";
    case FrameId::RightSoleCenter:
      return "rightSoleCenter";
    case FrameId::LeftAnkle:
      return "leftAnkle";
    case FrameId::RightAnkle:
      return "rightAnkle";
  }
  return "?";
}

bool Transform::isRigid(double tol) const
{
  Mat3 shouldBeIdentity = rotation.transpose() * rotation;
  if((shouldBeIdentity - Mat3::Identity()).cwiseAbs().maxCoeff() > tol)
  {
    return false;
  }
  return std::abs(rotation.determinant() - 1.0) <= tol && translation.allFinite();
}

Mat6 wrenchTransformMatrix(const Transform & X)
{
  Mat6 D = Mat6::Zero();
  D.topLeftCorner<3, 3>() = X.rotation;
  D.bottomRightCorner<3, 3>() = X.rotation;
  D.bottomLeftCorner<3, 3>() = crossMatrix(X.translation) * X.rotation;
  return D;
}

Wrench6 transformWrench(const Wrench6 & w, const Transform & X, FrameId target)
{
  Wrench6 out;
  out.force = X.rotation * w.force;
  out.torque = X.rotation * w.torque + X.translation.cross(out.force);
  out.frame = target;
  return out;
}

Vec3 copOfWrench(const Wrench6 & w)
{
  if(w.force.z() <= 0.0)
  {
    throw NonPositivePressure(w.force.z());
  }
  return {-w.torque.y() / w.force.z(), w.torque.x() / w.force.z(), 0.0};
}

Vec3 zmpAtHeight(const Wrench6 & w, double planeHeight)
{
  if(w.force.z() <= 0.0)
  {
    throw NonPositivePressure(w.force.z());
  }
  double px = (-w.torque.y() + planeHeight * w.force.x()) / w.force.z();
  double py = (w.torque.x() + planeHeight * w.force.y()) / w.force.z();
  return {px, py, planeHeight};
}

} // namespace dcmstab
