/* image_map.hpp -- scale-invariant particle-to-image mapping and Gaussian
 * splat augmentation */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adslam/common.hpp"

namespace adslam {

struct MappingConfig {
    double canvas_m = 10.0;  // physical canvas each dimension is padded to
    int size_px = 64;
};

struct AugmentConfig {
    double sigma_px = 1.0;          // Gaussian stddev, pixels
    double occupy_threshold = 0.05; // accumulated mass needed to mark a pixel
    int support = 5;                // splat window side (odd)
};

struct ParticleImage {
    int size_px = 0;
    std::vector<float> pixels;  // row-major [iy*size_px + ix], values in [0,1]

    float at(int ix, int iy) const { return pixels[static_cast<std::size_t>(iy) * size_px + ix]; }
};

/* Continuous (x, y) coordinates to pixel indices. Each dimension is padded
 * symmetrically to canvas_m when its span is smaller, then discretized by
 * i = floor((r - r_min) * size_px / (r_max - r_min)), clamped to
 * [0, size_px-1]. Translation-invariant; scale-invariant once both spans
 * reach the canvas. */
std::vector<std::pair<int, int>> linear_map(const std::vector<std::pair<double, double>>& coords,
                                            const MappingConfig& cfg);

/* Accumulate a support x support Gaussian splat per particle (clipped at the
 * image border) and threshold the accumulated mass into a binary image. */
ParticleImage gaussian_augment(const std::vector<std::pair<int, int>>& indices,
                               const MappingConfig& cfg, const AugmentConfig& acfg);

/* Accumulated mass before thresholding (exposed for tests). */
std::vector<double> augment_accumulation(const std::vector<std::pair<int, int>>& indices,
                                         const MappingConfig& cfg, const AugmentConfig& acfg);

/* 8-bit grayscale PGM (P5); pixel 1.0 -> 255. */
void save_image_pgm(const ParticleImage& img, const std::string& path);
ParticleImage load_image_pgm(const std::string& path);

}  // namespace adslam
