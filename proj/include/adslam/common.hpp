/* common.hpp -- pose type, angle helpers, deterministic RNG, error types */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace adslam {

inline constexpr double kPi = 3.14159265358979323846;

/* Normalize an angle to (-pi, pi]. */
inline double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
};

inline bool pose_finite(const Pose& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.theta);
}

/* Deterministic RNG. All sampling goes through this wrapper instead of
 * std distributions, whose output is implementation-defined. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /* uniform in [0, 1) */
    double uniform() {
        // 53 random mantissa bits
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /* integer in [0, n) */
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    /* standard normal via Box-Muller (no cached spare, fully deterministic) */
    double gaussian() {
        double u1 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/* Error taxonomy, mapped by the CLI to exit codes. */
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};
struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace adslam
