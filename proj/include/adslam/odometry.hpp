/* odometry.hpp -- rot-trans-rot odometry decomposition and motion model */

#pragma once

#include "adslam/common.hpp"

namespace adslam {

struct OdometryReading {
    double delta_r1 = 0.0;  // rotation before translation, radians
    double delta_t = 0.0;   // translation, meters (>= 0)
    double delta_r2 = 0.0;  // rotation after translation, radians
};

/* Four-parameter alpha noise model: component stddevs scale with the motion
 * magnitudes. alpha1: rot from rot, alpha2: rot from trans, alpha3: trans
 * from trans, alpha4: trans from rot. */
struct OdomNoiseParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double alpha4 = 0.0;

    bool zero() const { return alpha1 == 0 && alpha2 == 0 && alpha3 == 0 && alpha4 == 0; }
};

/* Inverse of the motion model: a (delta_r1, delta_t, delta_r2) whose
 * noise-free application to prev yields next exactly. Optionally perturbed by
 * the alpha model. */
OdometryReading synthesize_odometry(const Pose& prev, const Pose& next,
                                    const OdomNoiseParams& noise, Rng& rng);

/* Apply the motion model: x' = x + dt*cos(theta + dr1), y' = y + dt*sin(...),
 * theta' = theta + dr1 + dr2, with the reading perturbed by the alpha model
 * when noise is nonzero. */
Pose motion_update(const Pose& pose, const OdometryReading& odom,
                   const OdomNoiseParams& noise, Rng& rng);

}  // namespace adslam
