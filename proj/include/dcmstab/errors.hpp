#pragma once

#include <stdexcept>
#include <string>

namespace dcmstab
{

/// Requested a center of pressure from a wrench with no positive contact pressure.
struct NonPositivePressure : std::runtime_error
{
  explicit NonPositivePressure(double fz)
  : std::runtime_error("center of pressure undefined: contact pressure " + std::to_string(fz) + " N is not positive")
  {
  }
};

struct NonPositiveHeight : std::runtime_error
{
  explicit NonPositiveHeight(double h)
  : std::runtime_error("pendulum height must be positive, got " + std::to_string(h) + " m")
  {
  }
};

/// Time query outside the phase or trajectory it refers to.
struct OutOfPhase : std::runtime_error
{
  explicit OutOfPhase(const std::string & what) : std::runtime_error(what) {}
};

struct EmptyPlan : std::runtime_error
{
  EmptyPlan() : std::runtime_error("footstep plan has no phases") {}
};

struct EmptyLog : std::runtime_error
{
  EmptyLog() : std::runtime_error("simulation log has no rows") {}
};

struct ScenarioError : std::runtime_error
{
  explicit ScenarioError(const std::string & what) : std::runtime_error("invalid scenario: " + what) {}
};

/// Plant state left the configured bounds; the episode ends as a fall.
struct NumericalDivergence : std::runtime_error
{
  explicit NumericalDivergence(double t, const std::string & what)
  : std::runtime_error("numerical divergence at t=" + std::to_string(t) + ": " + what), time(t)
  {
  }
  double time;
};

/// Pattern generation could not satisfy the support-polygon constraints.
struct PatternInfeasible : std::runtime_error
{
  PatternInfeasible(double t, int sample)
  : std::runtime_error("pattern QP infeasible at t=" + std::to_string(t) + ", horizon sample "
                       + std::to_string(sample)),
    time(t), sampleIndex(sample)
  {
  }
  double time;
  int sampleIndex;
};

} // namespace dcmstab
