/* beam_model.hpp -- per-beam map agreement scores and observation likelihood */

#pragma once

#include <vector>

#include "adslam/grid.hpp"
#include "adslam/particle.hpp"

namespace adslam {

struct BeamModelConfig {
    double sigma_hit = 0.01;    // kernel width: exp(-psi^2 / sigma_hit), psi in meters
    int hit_search_radius = 8;  // cells searched around the predicted endpoint
    double p_miss_floor = 0.1;  // score/likelihood floor for unknown or free space
    double score_min = 0.55;    // scan matcher acceptance, mean per scored beam
    int match_subsample = 2;    // beam stride inside the scan matcher
};

struct BeamScore {
    double s = 0.0;    // occupancy probability at the endpoint (p_miss_floor if not occupied)
    double psi = 0.0;  // distance to the nearest occupied cell, +inf when none in radius
    bool valid = false;  // false for miss (max-range) beams
};

/* Kernel term of the matching score: exp(-psi^2 / sigma_hit); 0 at psi=inf. */
double beam_kernel(double psi, const BeamModelConfig& cfg);

/* Per-beam likelihood used by the weight update, floored at p_miss_floor. */
double beam_likelihood(const BeamScore& b, const BeamModelConfig& cfg);

/* Scores every beam of the scan against the map as seen from pose. Miss
 * beams come back with valid=false and do not contribute elsewhere. */
std::vector<BeamScore> beam_scores(const OccupancyGrid& map, const Pose& pose,
                                   const LidarScan& scan, const BeamModelConfig& cfg);

/* Unscaled matching score: sum of (s_i + kernel(psi_i)) over valid beams
 * taken with the given stride. n_scored (optional) receives the number of
 * beams included in the sum. */
double match_score(const OccupancyGrid& map, const Pose& pose, const LidarScan& scan,
                   const BeamModelConfig& cfg, int stride, int* n_scored = nullptr);

/* Eq-style multiplicative weight update, in log space:
 * log_weight += sum_j log p(z_j | x), over non-miss beams. Returns the new
 * log weight. */
double weight_update(Particle& particle, const LidarScan& scan, const BeamModelConfig& cfg);

}  // namespace adslam
