/* grid.cpp */

#include "adslam/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace adslam {

OccupancyGrid::OccupancyGrid(const GridConfig& cfg) : cfg_(cfg) {
    if (cfg_.resolution <= 0.0) throw ContractError("grid resolution must be positive");
    occ_threshold_ = std::log(cfg_.occ_prob / (1.0 - cfg_.occ_prob));
}

void OccupancyGrid::ensure_contains(double min_x, double min_y,
                                    double max_x, double max_y) {
    const double res = cfg_.resolution;
    const double margin = 1.0;  // grow in 1 m chunks to limit reallocation
    if (width_ == 0) {
        origin_x_ = std::floor((min_x - margin) / res) * res;
        origin_y_ = std::floor((min_y - margin) / res) * res;
        width_ = static_cast<int>(std::ceil((max_x + margin - origin_x_) / res)) + 1;
        height_ = static_cast<int>(std::ceil((max_y + margin - origin_y_) / res)) + 1;
        cells_.assign(static_cast<std::size_t>(width_) * height_, 0.0f);
        return;
    }
    const bool fits = cell_x(min_x) >= 0 && cell_y(min_y) >= 0 &&
                      cell_x(max_x) < width_ && cell_y(max_y) < height_;
    if (fits) return;

    const double new_ox = std::min(origin_x_, std::floor((min_x - margin) / res) * res);
    const double new_oy = std::min(origin_y_, std::floor((min_y - margin) / res) * res);
    const double cur_hi_x = origin_x_ + width_ * res;
    const double cur_hi_y = origin_y_ + height_ * res;
    const double new_hi_x = std::max(cur_hi_x, max_x + margin);
    const double new_hi_y = std::max(cur_hi_y, max_y + margin);
    const int new_w = static_cast<int>(std::ceil((new_hi_x - new_ox) / res)) + 1;
    const int new_h = static_cast<int>(std::ceil((new_hi_y - new_oy) / res)) + 1;
    const int shift_x = static_cast<int>(std::llround((origin_x_ - new_ox) / res));
    const int shift_y = static_cast<int>(std::llround((origin_y_ - new_oy) / res));

    std::vector<float> fresh(static_cast<std::size_t>(new_w) * new_h, 0.0f);
    for (int y = 0; y < height_; ++y) {
        std::copy_n(cells_.begin() + static_cast<std::size_t>(y) * width_, width_,
                    fresh.begin() + static_cast<std::size_t>(y + shift_y) * new_w + shift_x);
    }
    cells_ = std::move(fresh);
    width_ = new_w;
    height_ = new_h;
    origin_x_ = new_ox;
    origin_y_ = new_oy;
}

void OccupancyGrid::add_log_odds(int ix, int iy, double delta) {
    float& cell = cells_[static_cast<std::size_t>(iy) * width_ + ix];
    const bool was_occ = cell > occ_threshold_;
    cell = static_cast<float>(std::clamp(static_cast<double>(cell) + delta,
                                         -cfg_.l_clamp, cfg_.l_clamp));
    const bool is_occ = cell > occ_threshold_;
    if (was_occ != is_occ) occupied_count_ += is_occ ? 1 : -1;
}

void OccupancyGrid::integrate_scan(const Pose& pose, const LidarScan& scan) {
    const double reach = scan.max_range + 0.5;
    ensure_contains(pose.x - reach, pose.y - reach, pose.x + reach, pose.y + reach);

    const int x0 = cell_x(pose.x);
    const int y0 = cell_y(pose.y);
    for (int k = 0; k < scan.beam_count(); ++k) {
        const double a = pose.theta + scan.angles[k];
        const double r = scan.ranges[k];
        const double ex = pose.x + r * std::cos(a);
        const double ey = pose.y + r * std::sin(a);
        const int x1 = cell_x(ex);
        const int y1 = cell_y(ey);

        // Bresenham from robot cell to endpoint cell, endpoint excluded
        int cx = x0, cy = y0;
        const int dx = std::abs(x1 - x0), dy = std::abs(y1 - y0);
        const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
        int err = dx - dy;
        while (cx != x1 || cy != y1) {
            if (in_bounds(cx, cy)) add_log_odds(cx, cy, -cfg_.l_free);
            const int e2 = 2 * err;
            if (e2 > -dy) { err -= dy; cx += sx; }
            if (e2 < dx) { err += dx; cy += sy; }
        }
        if (!scan.miss[k] && in_bounds(x1, y1)) add_log_odds(x1, y1, cfg_.l_occ);
    }
}

int OccupancyGrid::nearest_occupied_dist2(int ix, int iy, int radius_cells) const {
    if (occupied_count_ == 0) return -1;
    int best = -1;
    for (int ring = 0; ring <= radius_cells; ++ring) {
        // cells on Chebyshev ring `ring` have Euclidean distance >= ring
        if (best >= 0 && static_cast<long long>(ring) * ring >= best) break;
        const int xlo = ix - ring, xhi = ix + ring;
        const int ylo = iy - ring, yhi = iy + ring;
        auto visit = [&](int cx, int cy) {
            if (!occupied(cx, cy)) return;
            const int d2 = (cx - ix) * (cx - ix) + (cy - iy) * (cy - iy);
            if (best < 0 || d2 < best) best = d2;
        };
        if (ring == 0) {
            visit(ix, iy);
            continue;
        }
        for (int cx = xlo; cx <= xhi; ++cx) {
            visit(cx, ylo);
            visit(cx, yhi);
        }
        for (int cy = ylo + 1; cy < yhi; ++cy) {
            visit(xlo, cy);
            visit(xhi, cy);
        }
    }
    if (best < 0 || best > radius_cells * radius_cells) return -1;
    return best;
}

void OccupancyGrid::save_pgm(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write map file: " + path);
    out << "P5\n" << width_ << " " << height_ << "\n255\n";
    const double free_threshold = std::log(cfg_.free_prob / (1.0 - cfg_.free_prob));
    std::vector<unsigned char> row(width_);
    for (int y = height_ - 1; y >= 0; --y) {  // top row = max y
        for (int x = 0; x < width_; ++x) {
            const float l = cells_[static_cast<std::size_t>(y) * width_ + x];
            row[x] = l > occ_threshold_ ? 0 : (l < free_threshold ? 254 : 205);
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }

    std::ofstream meta(path + ".meta");
    if (!meta) throw IoError("cannot write map metadata: " + path + ".meta");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "resolution %.9g\norigin_x %.9g\norigin_y %.9g\n",
                  cfg_.resolution, origin_x_, origin_y_);
    meta << buf;
}

}  // namespace adslam
