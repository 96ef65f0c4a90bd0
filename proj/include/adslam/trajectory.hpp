/* trajectory.hpp -- timestamped SE(2) trajectories, TUM format I/O */

#pragma once

#include <string>
#include <vector>

#include "adslam/common.hpp"

namespace adslam {

struct StampedPose {
    double t = 0.0;  // seconds
    Pose pose;
};

struct Trajectory {
    std::vector<StampedPose> poses;

    std::size_t size() const { return poses.size(); }
    bool empty() const { return poses.empty(); }
};

/* TUM lines: `timestamp tx ty tz qx qy qz qw`, tz = 0, yaw-only quaternion
 * (qz = sin(yaw/2), qw = cos(yaw/2)). Throws IoError naming file and line on
 * parse failure. */
Trajectory load_tum(const std::string& path);
void save_tum(const Trajectory& traj, const std::string& path);

}  // namespace adslam
