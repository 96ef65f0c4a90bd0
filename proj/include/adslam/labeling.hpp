/* labeling.hpp -- variance-over-mean weight labeling and synthetic dataset
 * generation */

#pragma once

#include <string>
#include <vector>

#include "adslam/common.hpp"
#include "adslam/image_map.hpp"

namespace adslam {

struct LabelResult {
    double r_value = 0.0;
    bool degenerate = false;
};

/* R = population variance / mean of the raw importance weights; degenerate
 * iff R > r_threshold. Weights must have a positive mean. */
LabelResult label_sample(const std::vector<double>& weights, double r_threshold = 1.0);

struct DatasetSample {
    ParticleImage image;
    bool degenerate = false;
    double r_value = 0.0;
    std::string file;  // set when loaded from / saved to disk
};

/* Synthetic swarm families standing in for the recorded corpus: tight
 * isotropic clouds with near-uniform weights (non-degenerate) vs. elongated
 * clouds and multi-cluster scatters with heavy-tailed weights (degenerate).
 * Classes alternate, so balance is exact for even n. */
std::vector<DatasetSample> generate_synthetic_dataset(int n, std::uint64_t seed,
                                                      const MappingConfig& mcfg = {},
                                                      const AugmentConfig& acfg = {});

/* Dataset directory: one PGM per sample plus labels.csv (file,label,r_value). */
void save_dataset(const std::vector<DatasetSample>& samples, const std::string& dir);
std::vector<DatasetSample> load_dataset(const std::string& dir);

}  // namespace adslam
