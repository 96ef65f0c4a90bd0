/* grid.hpp -- log-odds occupancy grid */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adslam/common.hpp"
#include "adslam/world.hpp"

namespace adslam {

struct GridConfig {
    double resolution = 0.05;  // meters per cell
    double l_occ = 0.85;       // endpoint increment
    double l_free = 0.40;      // free-space decrement (applied as -l_free)
    double l_clamp = 5.0;      // log-odds clamped to [-l_clamp, +l_clamp]
    double occ_prob = 0.65;    // occupied when p > occ_prob
    double free_prob = 0.35;   // free when p < free_prob (export only)
};

class OccupancyGrid {
public:
    explicit OccupancyGrid(const GridConfig& cfg = {});

    const GridConfig& config() const { return cfg_; }
    double resolution() const { return cfg_.resolution; }
    int width() const { return width_; }
    int height() const { return height_; }
    double origin_x() const { return origin_x_; }  // world x of cell (0,0) corner
    double origin_y() const { return origin_y_; }
    std::size_t occupied_count() const { return occupied_count_; }

    bool in_bounds(int ix, int iy) const {
        return ix >= 0 && ix < width_ && iy >= 0 && iy < height_;
    }
    int cell_x(double x) const {
        return static_cast<int>(std::floor((x - origin_x_) / cfg_.resolution));
    }
    int cell_y(double y) const {
        return static_cast<int>(std::floor((y - origin_y_) / cfg_.resolution));
    }
    double center_x(int ix) const { return origin_x_ + (ix + 0.5) * cfg_.resolution; }
    double center_y(int iy) const { return origin_y_ + (iy + 0.5) * cfg_.resolution; }

    double log_odds(int ix, int iy) const {
        return in_bounds(ix, iy) ? cells_[static_cast<std::size_t>(iy) * width_ + ix] : 0.0;
    }
    double prob(int ix, int iy) const {
        const double l = log_odds(ix, iy);
        return 1.0 - 1.0 / (1.0 + std::exp(l));
    }
    bool occupied(int ix, int iy) const {
        return in_bounds(ix, iy) &&
               cells_[static_cast<std::size_t>(iy) * width_ + ix] > occ_threshold_;
    }
    bool known(int ix, int iy) const {
        return in_bounds(ix, iy) &&
               cells_[static_cast<std::size_t>(iy) * width_ + ix] != 0.0;
    }

    /* Integrate one scan taken at pose. Grows the grid as needed (origin
     * shift); free-space decrements along each beam, endpoint increment for
     * non-miss beams only. */
    void integrate_scan(const Pose& pose, const LidarScan& scan);

    /* Squared distance (in cells) from (ix,iy) to the nearest occupied cell
     * within Euclidean radius `radius_cells`; -1 when none. Exact. */
    int nearest_occupied_dist2(int ix, int iy, int radius_cells) const;

    /* Grow so that the world-space rectangle fits (chunked, origin shift). */
    void ensure_contains(double min_x, double min_y, double max_x, double max_y);

    /* Binary PGM (P5): 0 = occupied, 254 = free, 205 = unknown, plus a
     * sidecar `<path>.meta` with resolution and origin. */
    void save_pgm(const std::string& path) const;

private:
    void add_log_odds(int ix, int iy, double delta);

    GridConfig cfg_;
    double occ_threshold_ = 0.0;  // log-odds form of occ_prob
    int width_ = 0;
    int height_ = 0;
    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    std::size_t occupied_count_ = 0;
    std::vector<float> cells_;
};

}  // namespace adslam
