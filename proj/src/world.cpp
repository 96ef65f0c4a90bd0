/* world.cpp */

#include "adslam/world.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace adslam {

double ray_distance(const WorldMap& world, double ox, double oy,
                    double dx, double dy) {
    double best = -1.0;
    for (const Segment& s : world.segments) {
        const double ex = s.x2 - s.x1;
        const double ey = s.y2 - s.y1;
        const double denom = dx * ey - dy * ex;
        if (denom == 0.0) continue;  // parallel
        // o + t*d = p + u*e
        const double px = s.x1 - ox;
        const double py = s.y1 - oy;
        const double t = (px * ey - py * ex) / denom;
        const double u = (px * dy - py * dx) / denom;
        if (t >= 0.0 && u >= 0.0 && u <= 1.0) {
            if (best < 0.0 || t < best) best = t;
        }
    }
    return best;
}

LidarScan cast_scan(const WorldMap& world, const Pose& pose,
                    const LidarSpec& spec, Rng& rng) {
    if (!world.bounds.contains(pose.x, pose.y)) {
        throw std::invalid_argument("cast_scan: pose outside world bounds");
    }
    if (spec.beam_count < 1 || spec.max_range <= 0.0) {
        throw std::invalid_argument("cast_scan: invalid lidar spec");
    }
    LidarScan scan;
    scan.max_range = spec.max_range;
    scan.ranges.resize(spec.beam_count);
    scan.angles.resize(spec.beam_count);
    scan.miss.resize(spec.beam_count);
    const double step = spec.fov / spec.beam_count;
    for (int k = 0; k < spec.beam_count; ++k) {
        const double rel = -spec.fov / 2.0 + k * step;
        scan.angles[k] = rel;
        const double a = pose.theta + rel;
        const double d = ray_distance(world, pose.x, pose.y, std::cos(a), std::sin(a));
        if (d < 0.0 || d > spec.max_range) {
            scan.ranges[k] = spec.max_range;
            scan.miss[k] = 1;
        } else {
            double r = d;
            if (spec.range_noise_sigma > 0.0) {
                r += rng.gaussian(0.0, spec.range_noise_sigma);
                r = std::clamp(r, 1e-3, spec.max_range);
            }
            scan.ranges[k] = r;
            scan.miss[k] = 0;
        }
    }
    return scan;
}

WorldMap load_world(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open world file: " + path);
    WorldMap world;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        Segment s;
        if (ss >> s.x1 >> s.y1 >> s.x2 >> s.y2) {
            world.segments.push_back(s);
        } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw IoError(path + ":" + std::to_string(lineno) + ": malformed segment line");
        }
    }
    fit_bounds(world);
    return world;
}

void save_world(const WorldMap& world, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write world file: " + path);
    out << "# world segments: x1 y1 x2 y2 (meters)\n";
    char buf[160];
    for (const Segment& s : world.segments) {
        std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g %.9g\n", s.x1, s.y1, s.x2, s.y2);
        out << buf;
    }
}

void fit_bounds(WorldMap& world, double margin) {
    if (world.segments.empty()) {
        world.bounds = Rect{};
        return;
    }
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_y;
    for (const Segment& s : world.segments) {
        lo_x = std::min({lo_x, s.x1, s.x2});
        lo_y = std::min({lo_y, s.y1, s.y2});
        hi_x = std::max({hi_x, s.x1, s.x2});
        hi_y = std::max({hi_y, s.y1, s.y2});
    }
    world.bounds = Rect{lo_x - margin, lo_y - margin, hi_x + margin, hi_y + margin};
}

}  // namespace adslam
