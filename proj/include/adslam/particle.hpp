/* particle.hpp -- weighted pose hypotheses, each owning an occupancy grid */

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adslam/grid.hpp"

namespace adslam {

struct Particle {
    Pose pose;
    double log_weight = 0.0;
    std::shared_ptr<OccupancyGrid> map;
};

struct ParticleSet {
    std::vector<Particle> particles;
    bool normalized = false;

    int size() const { return static_cast<int>(particles.size()); }
};

ParticleSet make_particle_set(int n, const Pose& init, const GridConfig& grid_cfg);

/* Shift log-weights so that sum(exp(log_weight)) == 1. */
void normalize_weights(ParticleSet& set);

/* Normalized weights as plain probabilities. */
std::vector<double> weights_of(const ParticleSet& set);

/* 1 / sum(w_i^2); requires a normalized set (ContractError otherwise). */
double effective_sample_size(const ParticleSet& set);

/* Weighted mean position with circular mean heading. */
Pose weighted_mean_pose(const ParticleSet& set);

/* Clone-on-write: returns a uniquely owned map for in-place mutation. */
OccupancyGrid& unique_map(Particle& p);

/* Per-step particle dump: text lines `x y theta log_weight`. */
void dump_particles(const ParticleSet& set, const std::string& path);
ParticleSet load_particle_dump(const std::string& path);

}  // namespace adslam
