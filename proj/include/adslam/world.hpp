/* world.hpp -- line-segment worlds and lidar ray casting */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adslam/common.hpp"

namespace adslam {

struct Segment {
    double x1, y1, x2, y2;
};

struct Rect {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

    bool contains(double x, double y) const {
        return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
    }
};

struct WorldMap {
    std::vector<Segment> segments;
    Rect bounds;
};

struct LidarSpec {
    int beam_count = 360;
    double fov = 2.0 * kPi;
    double max_range = 10.0;
    double range_noise_sigma = 0.0;
};

struct LidarScan {
    std::vector<double> ranges;      // meters, (0, max_range]
    std::vector<double> angles;      // radians, relative to robot heading
    std::vector<std::uint8_t> miss;  // 1 = no hit within max_range
    double max_range = 0.0;

    int beam_count() const { return static_cast<int>(ranges.size()); }
};

/* Distance along the ray (origin, dir) to the nearest intersection with any
 * segment; negative when nothing is hit. Analytic, exact. */
double ray_distance(const WorldMap& world, double ox, double oy,
                    double dx, double dy);

/* Simulated scan at a pose. Gaussian range noise is applied to hit beams and
 * clamped to stay positive; miss beams carry max_range exactly. Throws
 * std::invalid_argument when the pose is outside the world bounds. */
LidarScan cast_scan(const WorldMap& world, const Pose& pose,
                    const LidarSpec& spec, Rng& rng);

/* Plain-text world files: one `x1 y1 x2 y2` segment per line, '#' comments. */
WorldMap load_world(const std::string& path);
void save_world(const WorldMap& world, const std::string& path);

/* Recompute bounds as the AABB of all segments (with a small margin). */
void fit_bounds(WorldMap& world, double margin = 0.0);

}  // namespace adslam
