#pragma once

#include <Eigen/Dense>

#include <dcmstab/errors.hpp>

namespace dcmstab
{

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// The five frames of the reduced biped: world plus per-foot sole-center and
/// ankle frames.
enum class FrameId
{
  World,
  LeftSoleCenter,
  RightSoleCenter,
  LeftAnkle,
  RightAnkle
};

const char * frameName(FrameId frame);

/// Rigid transform: p_target = rotation * p_source + translation.
struct Transform
{
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static Transform identity() { return {}; }

  static Transform fromTranslation(const Vec3 & t) { return {Mat3::Identity(), t}; }

  static Transform rotZ(double yaw)
  {
    Transform X;
    X.rotation = Eigen::AngleAxisd(yaw, Vec3::UnitZ()).toRotationMatrix();
    return X;
  }

  Vec3 apply(const Vec3 & p) const { return rotation * p + translation; }

  Transform inverse() const { return {rotation.transpose(), -(rotation.transpose() * translation)}; }

  /// Composition: (a * b) applies b first, then a.
  Transform operator*(const Transform & other) const
  {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  /// True when the rotation block is orthonormal with determinant +1.
  bool isRigid(double tol = 1e-9) const;
};

/// 6D contact wrench (force, torque) expressed in a tagged frame; the torque
/// is taken about that frame's origin.
struct Wrench6
{
  Vec3 force = Vec3::Zero();
  Vec3 torque = Vec3::Zero();
  FrameId frame = FrameId::World;

  static Wrench6 zero(FrameId frame) { return {Vec3::Zero(), Vec3::Zero(), frame}; }

  Vec6 vector() const
  {
    Vec6 w;
    w << force, torque;
    return w;
  }

  static Wrench6 fromVector(const Vec6 & w, FrameId frame) { return {w.head<3>(), w.tail<3>(), frame}; }
};

inline Mat3 crossMatrix(const Vec3 & v)
{
  Mat3 S;
  S << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return S;
}

/// 6x6 matrix changing wrench coordinates under X (source -> target), acting
/// on stacked (force, torque) vectors.
Mat6 wrenchTransformMatrix(const Transform & X);

/// Change of frame for a wrench: X maps coordinates of the source frame (the
/// one the wrench is expressed in) to the target frame. The returned torque is
/// about the target frame's origin.
Wrench6 transformWrench(const Wrench6 & w, const Transform & X, FrameId target);

/// Center of pressure of a wrench expressed in a sole frame with z-axis
/// normal to the contact surface. Throws NonPositivePressure when fz <= 0.
Vec3 copOfWrench(const Wrench6 & w);

/// ZMP of a world-frame wrench (torque about the origin) on the horizontal
/// plane z = planeHeight. Throws NonPositivePressure when fz <= 0.
Vec3 zmpAtHeight(const Wrench6 & w, double planeHeight);

} // namespace dcmstab
