/* odometry.cpp */

#include "adslam/odometry.hpp"

#include <cmath>

namespace adslam {

namespace {

OdometryReading perturb(const OdometryReading& odom, const OdomNoiseParams& n, Rng& rng) {
    if (n.zero()) return odom;
    const double r1 = std::fabs(odom.delta_r1);
    const double r2 = std::fabs(odom.delta_r2);
    const double t = odom.delta_t;
    OdometryReading out;
    out.delta_r1 = odom.delta_r1 + rng.gaussian(0.0, n.alpha1 * r1 + n.alpha2 * t);
    out.delta_t = odom.delta_t + rng.gaussian(0.0, n.alpha3 * t + n.alpha4 * (r1 + r2));
    out.delta_r2 = odom.delta_r2 + rng.gaussian(0.0, n.alpha1 * r2 + n.alpha2 * t);
    return out;
}

}  // namespace

OdometryReading synthesize_odometry(const Pose& prev, const Pose& next,
                                    const OdomNoiseParams& noise, Rng& rng) {
    const double dx = next.x - prev.x;
    const double dy = next.y - prev.y;
    OdometryReading odom;
    odom.delta_t = std::hypot(dx, dy);
    if (odom.delta_t < 1e-12) {
        // pure rotation: attribute the whole turn to delta_r2
        odom.delta_t = 0.0;
        odom.delta_r1 = 0.0;
        odom.delta_r2 = normalize_angle(next.theta - prev.theta);
    } else {
        odom.delta_r1 = normalize_angle(std::atan2(dy, dx) - prev.theta);
        odom.delta_r2 = normalize_angle(next.theta - prev.theta - odom.delta_r1);
    }
    return perturb(odom, noise, rng);
}

Pose motion_update(const Pose& pose, const OdometryReading& odom,
                   const OdomNoiseParams& noise, Rng& rng) {
    const OdometryReading d = perturb(odom, noise, rng);
    Pose out;
    out.x = pose.x + d.delta_t * std::cos(pose.theta + d.delta_r1);
    out.y = pose.y + d.delta_t * std::sin(pose.theta + d.delta_r1);
    out.theta = normalize_angle(pose.theta + d.delta_r1 + d.delta_r2);
    return out;
}

}  // namespace adslam
