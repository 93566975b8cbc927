#include <dcmstab/footsteps.hpp>

#include <algorithm>
#include <cmath>

namespace dcmstab
{

const char * phaseKindName(GaitPhase::Kind kind)
{
  switch(kind)
  {
    case GaitPhase::Kind::Standing:
      return "standing";
    case GaitPhase::Kind::DoubleSupport:
      return "double_support";
    case GaitPhase::Kind::SingleSupport:
      return "single_support";
  }
  return "?";
}

double pressureRatio(const GaitPhase & phase, double t)
{
  if(phase.kind != GaitPhase::Kind::DoubleSupport)
  {
    throw OutOfPhase("pressure ratio is prescribed in double support only");
  }
  if(t < phase.tStart - 1e-12 || t > phase.tEnd() + 1e-12)
  {
    throw OutOfPhase("time " + std::to_string(t) + " outside phase [" + std::to_string(phase.tStart) + ", "
                     + std::to_string(phase.tEnd()) + "]");
  }
  double s = std::clamp((t - phase.tStart) / phase.duration, 0.0, 1.0);
  return phase.rhoInit + s * (phase.rhoEnd - phase.rhoInit);
}

GaitSchedule::GaitSchedule(std::vector<GaitPhase> phases) : phases_(std::move(phases))
{
  duration_ = phases_.empty() ? 0.0 : phases_.back().tEnd();
}

int GaitSchedule::phaseIndexAt(double t) const
{
  if(phases_.empty())
  {
    throw EmptyPlan();
  }
  if(t <= 0.0)
  {
    return 0;
  }
  for(size_t i = 0; i < phases_.size(); ++i)
  {
    if(t < phases_[i].tEnd())
    {
      return static_cast<int>(i);
    }
  }
  return static_cast<int>(phases_.size()) - 1;
}

double GaitSchedule::rhoAt(double t) const
{
  const GaitPhase & phase = phaseAt(t);
  switch(phase.kind)
  {
    case GaitPhase::Kind::Standing:
      return 0.5;
    case GaitPhase::Kind::SingleSupport:
      return phase.support == Foot::Left ? 1.0 : 0.0;
    case GaitPhase::Kind::DoubleSupport:
      return pressureRatio(phase, std::clamp(t, phase.tStart, phase.tEnd()));
  }
  return 0.5;
}

double GaitSchedule::supportHeightAt(double t) const
{
  const GaitPhase & phase = phaseAt(t);
  double rho = rhoAt(t);
  double zl = phase.left.solePose.translation.z();
  double zr = phase.right.solePose.translation.z();
  if(phase.kind == GaitPhase::Kind::SingleSupport)
  {
    const Footstep & s = phase.support == Foot::Left ? phase.left : phase.right;
    return s.solePose.translation.z();
  }
  return rho * zl + (1.0 - rho) * zr;
}

SupportInterval footRectangle(const Footstep & foothold)
{
  // Axis-aligned bounds of the (possibly yawed) sole rectangle.
  SupportInterval box{1e30, -1e30, 1e30, -1e30};
  for(double sx : {-1.0, 1.0})
  {
    for(double sy : {-1.0, 1.0})
    {
      Vec3 corner = foothold.solePose.apply({sx * foothold.halfLength, sy * foothold.halfWidth, 0.0});
      box.xMin = std::min(box.xMin, corner.x());
      box.xMax = std::max(box.xMax, corner.x());
      box.yMin = std::min(box.yMin, corner.y());
      box.yMax = std::max(box.yMax, corner.y());
    }
  }
  return box;
}

SupportInterval GaitSchedule::supportIntervalAt(double t) const
{
  const GaitPhase & phase = phaseAt(t);
  if(phase.kind == GaitPhase::Kind::SingleSupport)
  {
    return footRectangle(phase.support == Foot::Left ? phase.left : phase.right);
  }
  SupportInterval l = footRectangle(phase.left);
  SupportInterval r = footRectangle(phase.right);
  return {std::min(l.xMin, r.xMin), std::max(l.xMax, r.xMax), std::min(l.yMin, r.yMin), std::max(l.yMax, r.yMax)};
}

Vec3 GaitSchedule::zmpReference(double t) const
{
  if(phases_.empty())
  {
    throw EmptyPlan();
  }
  const GaitPhase & phase = phaseAt(t);
  if(phase.duration <= 0.0)
  {
    return phase.zmpEnd;
  }
  double s = std::clamp((t - phase.tStart) / phase.duration, 0.0, 1.0);
  return phase.zmpStart + s * (phase.zmpEnd - phase.zmpStart);
}

namespace
{

Vec3 anklePoint(const Footstep & foothold, const Vec3 & ankleOffset)
{
  Vec3 p = foothold.solePose.apply(ankleOffset);
  p.z() = foothold.solePose.translation.z();
  return p;
}

} // namespace

GaitSchedule makeSchedule(const FootstepPlan & plan,
                          const GaitTiming & timing,
                          double swingApex,
                          const Vec3 & ankleOffset)
{
  std::vector<GaitPhase> phases;
  Footstep left = plan.initialLeft;
  Footstep right = plan.initialRight;
  left.foot = Foot::Left;
  right.foot = Foot::Right;

  double t = 0.0;
  double rho = 0.5;
  Vec3 zmp = 0.5 * (anklePoint(left, ankleOffset) + anklePoint(right, ankleOffset));

  auto push = [&](GaitPhase phase) {
    phase.tStart = t;
    phase.left = left;
    phase.right = right;
    t += phase.duration;
    rho = phase.rhoEnd;
    zmp = phase.zmpEnd;
    phases.push_back(phase);
  };

  if(timing.initialStanding > 0.0)
  {
    GaitPhase standing;
    standing.kind = GaitPhase::Kind::Standing;
    standing.duration = timing.initialStanding;
    standing.rhoInit = standing.rhoEnd = 0.5;
    standing.zmpStart = standing.zmpEnd = zmp;
    push(standing);
  }

  for(const Footstep & step : plan.steps)
  {
    Foot swing = step.foot;
    Foot support = otherFoot(swing);
    const Footstep & supportHold = (support == Foot::Left) ? left : right;

    GaitPhase ds;
    ds.kind = GaitPhase::Kind::DoubleSupport;
    ds.duration = timing.doubleSupport;
    ds.support = support;
    ds.rhoInit = rho;
    ds.rhoEnd = (support == Foot::Left) ? 1.0 : 0.0;
    ds.zmpStart = zmp;
    ds.zmpEnd = anklePoint(supportHold, ankleOffset);
    push(ds);

    GaitPhase ss;
    ss.kind = GaitPhase::Kind::SingleSupport;
    ss.duration = timing.singleSupport;
    ss.support = support;
    ss.rhoInit = ss.rhoEnd = ds.rhoEnd;
    ss.swingFoot = swing;
    ss.swingTarget = step;
    ss.swingTarget.foot = swing;
    ss.swingApex = swingApex;
    ss.zmpStart = ss.zmpEnd = anklePoint(supportHold, ankleOffset);
    push(ss);

    if(swing == Foot::Left)
    {
      left = ss.swingTarget;
    }
    else
    {
      right = ss.swingTarget;
    }
  }

  if(!plan.steps.empty())
  {
    GaitPhase ds;
    ds.kind = GaitPhase::Kind::DoubleSupport;
    ds.duration = timing.doubleSupport;
    ds.support = otherFoot(plan.steps.back().foot);
    ds.rhoInit = rho;
    ds.rhoEnd = 0.5;
    ds.zmpStart = zmp;
    ds.zmpEnd = 0.5 * (anklePoint(left, ankleOffset) + anklePoint(right, ankleOffset));
    push(ds);
  }

  if(timing.finalStanding > 0.0)
  {
    GaitPhase standing;
    standing.kind = GaitPhase::Kind::Standing;
    standing.duration = timing.finalStanding;
    standing.rhoInit = rho;
    standing.rhoEnd = 0.5;
    standing.zmpStart = standing.zmpEnd = 0.5 * (anklePoint(left, ankleOffset) + anklePoint(right, ankleOffset));
    push(standing);
  }

  return GaitSchedule(std::move(phases));
}

} // namespace dcmstab
