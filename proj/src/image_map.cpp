/* image_map.cpp */

#include "adslam/image_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace adslam {

namespace {

struct Extent {
    double r_min, r_max;
};

Extent padded_extent(double lo, double hi, double canvas) {
    const double span = hi - lo;
    if (span < canvas) {
        const double pad = (canvas - span) / 2.0;
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

}  // namespace

std::vector<std::pair<int, int>> linear_map(const std::vector<std::pair<double, double>>& coords,
                                            const MappingConfig& cfg) {
    if (coords.empty()) throw std::invalid_argument("linear_map: no particles");
    if (!(cfg.canvas_m > 0.0) || cfg.size_px < 8) {
        throw ContractError("linear_map: invalid mapping config");
    }
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_y;
    for (const auto& [x, y] : coords) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw std::invalid_argument("linear_map: non-finite coordinate");
        }
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    const Extent ex = padded_extent(lo_x, hi_x, cfg.canvas_m);
    const Extent ey = padded_extent(lo_y, hi_y, cfg.canvas_m);
    const double sx = cfg.size_px / (ex.r_max - ex.r_min);
    const double sy = cfg.size_px / (ey.r_max - ey.r_min);

    std::vector<std::pair<int, int>> out;
    out.reserve(coords.size());
    const int top = cfg.size_px - 1;
    for (const auto& [x, y] : coords) {
        const int ix = std::clamp(static_cast<int>(std::floor((x - ex.r_min) * sx)), 0, top);
        const int iy = std::clamp(static_cast<int>(std::floor((y - ey.r_min) * sy)), 0, top);
        out.emplace_back(ix, iy);
    }
    return out;
}

std::vector<double> augment_accumulation(const std::vector<std::pair<int, int>>& indices,
                                         const MappingConfig& cfg, const AugmentConfig& acfg) {
    if (acfg.support < 1 || acfg.support % 2 == 0 || !(acfg.sigma_px > 0.0)) {
        throw ContractError("gaussian_augment: invalid augment config");
    }
    const int s = cfg.size_px;
    const int h = acfg.support / 2;

    // splat table G(di, dj) = 1/(2 pi sigma^2) exp(-(di^2+dj^2)/(2 sigma^2))
    std::vector<double> kernel(static_cast<std::size_t>(acfg.support) * acfg.support);
    const double norm = 1.0 / (2.0 * kPi * acfg.sigma_px * acfg.sigma_px);
    for (int dj = -h; dj <= h; ++dj) {
        for (int di = -h; di <= h; ++di) {
            kernel[static_cast<std::size_t>(dj + h) * acfg.support + (di + h)] =
                norm * std::exp(-(di * di + dj * dj) / (2.0 * acfg.sigma_px * acfg.sigma_px));
        }
    }

    std::vector<double> acc(static_cast<std::size_t>(s) * s, 0.0);
    for (const auto& [ix, iy] : indices) {
        if (ix < 0 || ix >= s || iy < 0 || iy >= s) {
            throw ContractError("gaussian_augment: index outside the image");
        }
        for (int dj = -h; dj <= h; ++dj) {
            const int cy = iy + dj;
            if (cy < 0 || cy >= s) continue;
            for (int di = -h; di <= h; ++di) {
                const int cx = ix + di;
                if (cx < 0 || cx >= s) continue;
                acc[static_cast<std::size_t>(cy) * s + cx] +=
                    kernel[static_cast<std::size_t>(dj + h) * acfg.support + (di + h)];
            }
        }
    }
    return acc;
}

ParticleImage gaussian_augment(const std::vector<std::pair<int, int>>& indices,
                               const MappingConfig& cfg, const AugmentConfig& acfg) {
    const std::vector<double> acc = augment_accumulation(indices, cfg, acfg);
    ParticleImage img;
    img.size_px = cfg.size_px;
    img.pixels.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        img.pixels[i] = acc[i] >= acfg.occupy_threshold ? 1.0f : 0.0f;
    }
    return img;
}

void save_image_pgm(const ParticleImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image: " + path);
    out << "P5\n" << img.size_px << " " << img.size_px << "\n255\n";
    std::vector<unsigned char> row(img.size_px);
    for (int y = 0; y < img.size_px; ++y) {
        for (int x = 0; x < img.size_px; ++x) {
            const float v = std::clamp(img.at(x, y), 0.0f, 1.0f);
            row[x] = static_cast<unsigned char>(std::lround(v * 255.0f));
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

ParticleImage load_image_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image: " + path);
    std::string magic;
    int w = 0, hgt = 0, maxval = 0;
    in >> magic >> w >> hgt >> maxval;
    if (magic != "P5" || w != hgt || w <= 0 || maxval != 255) {
        throw IoError("unsupported PGM image: " + path);
    }
    in.get();  // single whitespace after the header
    ParticleImage img;
    img.size_px = w;
    img.pixels.resize(static_cast<std::size_t>(w) * hgt);
    std::vector<unsigned char> raw(img.pixels.size());
    in.read(reinterpret_cast<char*>(raw.data()), raw.size());
    if (!in) throw IoError("truncated PGM image: " + path);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        img.pixels[i] = static_cast<float>(raw[i]) / 255.0f;
    }
    return img;
}

}  // namespace adslam
