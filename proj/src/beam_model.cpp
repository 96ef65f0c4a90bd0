/* beam_model.cpp */

#include "adslam/beam_model.hpp"

#include <cmath>
#include <limits>

namespace adslam {

double beam_kernel(double psi, const BeamModelConfig& cfg) {
    if (!std::isfinite(psi)) return 0.0;
    return std::exp(-psi * psi / cfg.sigma_hit);
}

double beam_likelihood(const BeamScore& b, const BeamModelConfig& cfg) {
    return std::max(beam_kernel(b.psi, cfg), cfg.p_miss_floor);
}

namespace {

BeamScore score_one(const OccupancyGrid& map, const Pose& pose,
                    double angle, double range, const BeamModelConfig& cfg) {
    BeamScore out;
    out.valid = true;
    const double a = pose.theta + angle;
    const double ex = pose.x + range * std::cos(a);
    const double ey = pose.y + range * std::sin(a);
    const int ix = map.cell_x(ex);
    const int iy = map.cell_y(ey);
    out.s = map.occupied(ix, iy) ? map.prob(ix, iy) : cfg.p_miss_floor;
    const int d2 = map.nearest_occupied_dist2(ix, iy, cfg.hit_search_radius);
    out.psi = d2 < 0 ? std::numeric_limits<double>::infinity()
                     : std::sqrt(static_cast<double>(d2)) * map.resolution();
    return out;
}

}  // namespace

std::vector<BeamScore> beam_scores(const OccupancyGrid& map, const Pose& pose,
                                   const LidarScan& scan, const BeamModelConfig& cfg) {
    if (map.width() == 0) throw ContractError("beam_scores: empty map");
    std::vector<BeamScore> out(scan.beam_count());
    for (int k = 0; k < scan.beam_count(); ++k) {
        if (scan.miss[k]) continue;  // valid=false
        out[k] = score_one(map, pose, scan.angles[k], scan.ranges[k], cfg);
    }
    return out;
}

double match_score(const OccupancyGrid& map, const Pose& pose, const LidarScan& scan,
                   const BeamModelConfig& cfg, int stride, int* n_scored) {
    double sum = 0.0;
    int n = 0;
    if (stride < 1) stride = 1;
    for (int k = 0; k < scan.beam_count(); k += stride) {
        if (scan.miss[k]) continue;
        const BeamScore b = score_one(map, pose, scan.angles[k], scan.ranges[k], cfg);
        sum += b.s + beam_kernel(b.psi, cfg);
        ++n;
    }
    if (n_scored) *n_scored = n;
    return sum;
}

double weight_update(Particle& particle, const LidarScan& scan, const BeamModelConfig& cfg) {
    if (!particle.map || particle.map->width() == 0) {
        throw ContractError("weight_update: particle map not initialized");
    }
    const OccupancyGrid& map = *particle.map;
    double log_lik = 0.0;
    for (int k = 0; k < scan.beam_count(); ++k) {
        if (scan.miss[k]) continue;
        const BeamScore b = score_one(map, particle.pose, scan.angles[k], scan.ranges[k], cfg);
        log_lik += std::log(beam_likelihood(b, cfg));
    }
    particle.log_weight += log_lik;
    return particle.log_weight;
}

}  // namespace adslam
