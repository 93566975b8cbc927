#pragma once

#include <dcmstab/errors.hpp>
#include <dcmstab/spatial.hpp>

namespace dcmstab
{

struct SwingSample
{
  Transform pose;
  Vec3 linearVelocity = Vec3::Zero();
  Vec3 angularVelocity = Vec3::Zero();
};

/// C1 swing foot trajectory: quintic horizontal profile, two cubic vertical
/// segments through an apex located apexHeight above the higher endpoint.
/// Starts and ends at rest. Throws OutOfPhase outside [0, duration].
SwingSample swingTrajectory(const Transform & from,
                            const Transform & to,
                            double apexHeight,
                            double duration,
                            double t);

} // namespace dcmstab
