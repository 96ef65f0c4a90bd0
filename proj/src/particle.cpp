/* particle.cpp */

#include "adslam/particle.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace adslam {

ParticleSet make_particle_set(int n, const Pose& init, const GridConfig& grid_cfg) {
    if (n < 1) throw ContractError("particle count must be >= 1");
    ParticleSet set;
    set.particles.reserve(n);
    const double lw = -std::log(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        Particle p;
        p.pose = init;
        p.log_weight = lw;
        p.map = std::make_shared<OccupancyGrid>(grid_cfg);
        set.particles.push_back(std::move(p));
    }
    set.normalized = true;
    return set;
}

void normalize_weights(ParticleSet& set) {
    if (set.particles.empty()) throw ContractError("cannot normalize an empty set");
    double max_lw = -std::numeric_limits<double>::infinity();
    for (const Particle& p : set.particles) max_lw = std::max(max_lw, p.log_weight);
    if (!std::isfinite(max_lw)) throw ContractError("all particle weights vanished");
    double sum = 0.0;
    for (const Particle& p : set.particles) sum += std::exp(p.log_weight - max_lw);
    const double lse = max_lw + std::log(sum);
    for (Particle& p : set.particles) p.log_weight -= lse;
    set.normalized = true;
}

std::vector<double> weights_of(const ParticleSet& set) {
    std::vector<double> w(set.particles.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(set.particles[i].log_weight);
    return w;
}

double effective_sample_size(const ParticleSet& set) {
    if (!set.normalized) throw ContractError("effective_sample_size requires a normalized set");
    double sum_sq = 0.0;
    for (const Particle& p : set.particles) {
        const double w = std::exp(p.log_weight);
        sum_sq += w * w;
    }
    if (sum_sq <= 0.0) throw ContractError("all particle weights vanished");
    return 1.0 / sum_sq;
}

Pose weighted_mean_pose(const ParticleSet& set) {
    const std::vector<double> w = weights_of(set);
    double sum_w = 0.0, mx = 0.0, my = 0.0, mc = 0.0, ms = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Pose& p = set.particles[i].pose;
        sum_w += w[i];
        mx += w[i] * p.x;
        my += w[i] * p.y;
        mc += w[i] * std::cos(p.theta);
        ms += w[i] * std::sin(p.theta);
    }
    if (sum_w <= 0.0) throw ContractError("all particle weights vanished");
    return Pose{mx / sum_w, my / sum_w, std::atan2(ms, mc)};
}

OccupancyGrid& unique_map(Particle& p) {
    if (!p.map) throw ContractError("particle has no map");
    if (p.map.use_count() > 1) p.map = std::make_shared<OccupancyGrid>(*p.map);
    return *p.map;
}

void dump_particles(const ParticleSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write particle dump: " + path);
    char buf[200];
    for (const Particle& p : set.particles) {
        std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g %.9g\n",
                      p.pose.x, p.pose.y, p.pose.theta, p.log_weight);
        out << buf;
    }
}

ParticleSet load_particle_dump(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open particle dump: " + path);
    ParticleSet set;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        Particle p;
        if (!(ss >> p.pose.x >> p.pose.y >> p.pose.theta >> p.log_weight)) {
            throw IoError(path + ":" + std::to_string(lineno) + ": malformed particle line");
        }
        set.particles.push_back(std::move(p));
    }
    return set;
}

}  // namespace adslam
