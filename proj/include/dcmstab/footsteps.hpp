#pragma once

#include <dcmstab/admittance.hpp> // Foot
#include <dcmstab/errors.hpp>
#include <dcmstab/spatial.hpp>

#include <vector>

namespace dcmstab
{

/// One planned foot placement: world pose of the sole center plus the
/// rectangular support surface half-extents.
struct Footstep
{
  Transform solePose = Transform::identity();
  Foot foot = Foot::Left;
  double halfLength = 0.112; // X
  double halfWidth = 0.065; // Y
};

struct FootstepPlan
{
  Footstep initialLeft;
  Footstep initialRight;
  std::vector<Footstep> steps;
};

struct GaitTiming
{
  double initialStanding = 1.0; // s
  double doubleSupport = 0.2; // s
  double singleSupport = 1.4; // s
  double finalStanding = 2.0; // s
};

/// Axis-aligned ZMP bounds of the active support area.
struct SupportInterval
{
  double xMin, xMax, yMin, yMax;

  SupportInterval shrunk(double margin) const
  {
    return {xMin + margin, xMax - margin, yMin + margin, yMax - margin};
  }

  bool contains(const Vec3 & p, double tol = 0.0) const
  {
    return p.x() >= xMin - tol && p.x() <= xMax + tol && p.y() >= yMin - tol && p.y() <= yMax + tol;
  }
};

struct GaitPhase
{
  enum class Kind
  {
    Standing,
    DoubleSupport,
    SingleSupport
  };

  Kind kind = Kind::Standing;
  double tStart = 0.0;
  double duration = 0.0;
  /// Stance foot during single support; transfer target during double support.
  Foot support = Foot::Left;
  /// Prescribed left-pressure fraction at phase start and end. In steady gait
  /// these are {0,1} pairs; double supports adjacent to standing phases use
  /// 0.5 on the standing side so the prescribed ratio stays continuous.
  double rhoInit = 0.5;
  double rhoEnd = 0.5;
  /// Footholds at phase start.
  Footstep left;
  Footstep right;
  /// Swing data, single support only.
  Foot swingFoot = Foot::Right;
  Footstep swingTarget;
  double swingApex = 0.0;
  /// Ideal-ZMP segment across the phase (straight line, constant in SS).
  Vec3 zmpStart = Vec3::Zero();
  Vec3 zmpEnd = Vec3::Zero();

  double tEnd() const { return tStart + duration; }
};

const char * phaseKindName(GaitPhase::Kind kind);

/// Prescribed pressure ratio within a double-support phase: linear from
/// rhoInit to rhoEnd. Throws OutOfPhase for other phases or times outside.
double pressureRatio(const GaitPhase & phase, double t);

/// The full contact schedule of a scenario.
class GaitSchedule
{
public:
  GaitSchedule() = default;
  explicit GaitSchedule(std::vector<GaitPhase> phases);

  const std::vector<GaitPhase> & phases() const { return phases_; }
  bool empty() const { return phases_.empty(); }
  double duration() const { return duration_; }

  int phaseIndexAt(double t) const;
  const GaitPhase & phaseAt(double t) const { return phases_[static_cast<size_t>(phaseIndexAt(t))]; }

  /// Left-pressure fraction at time t (0.5 standing, 0/1 in single support).
  double rhoAt(double t) const;

  /// Height of the support plane: rho-blended between the two foothold
  /// surfaces so it stays continuous across transfers.
  double supportHeightAt(double t) const;

  /// Axis-aligned ZMP bounds at time t: the support rectangle in single
  /// support, the interval hull of both rectangles otherwise.
  SupportInterval supportIntervalAt(double t) const;

  /// Ideal ZMP trajectory: straight lines connecting support ankle points.
  /// Times are clamped to [0, duration]. Throws EmptyPlan on an empty
  /// schedule.
  Vec3 zmpReference(double t) const;

private:
  std::vector<GaitPhase> phases_;
  double duration_ = 0.0;
};

/// Expand a footstep plan into the phase sequence
/// standing, [transfer DS, swing SS]*, final DS, standing.
/// ankleOffset (sole-frame) locates the ankle points that the ideal ZMP
/// interpolates between.
GaitSchedule makeSchedule(const FootstepPlan & plan,
                          const GaitTiming & timing,
                          double swingApex,
                          const Vec3 & ankleOffset = Vec3::Zero());

SupportInterval footRectangle(const Footstep & foothold);

} // namespace dcmstab
