/* scenario.cpp */

#include "adslam/scenario.hpp"

#include <cmath>
#include <vector>

namespace adslam {

namespace {

constexpr double kDt = 0.1;        // 10 Hz control steps
constexpr double kSpeed = 0.5;     // m/s along legs
constexpr double kTurnRate = 1.2;  // rad/s for in-place turns

void add_rect(WorldMap& w, double x0, double y0, double x1, double y1) {
    w.segments.push_back({x0, y0, x1, y0});
    w.segments.push_back({x1, y0, x1, y1});
    w.segments.push_back({x1, y1, x0, y1});
    w.segments.push_back({x0, y1, x0, y0});
}

class PathWriter {
public:
    explicit PathWriter(Trajectory& traj) : traj_(traj) {}

    void start(const Pose& p) {
        emit(p);
        cur_ = p;
    }

    void leg_to(double x, double y, double speed = kSpeed) {
        const double heading = std::atan2(y - cur_.y, x - cur_.x);
        turn_to(heading);
        const double len = std::hypot(x - cur_.x, y - cur_.y);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / (speed * kDt))));
        const Pose from = cur_;
        for (int i = 1; i <= steps; ++i) {
            const double f = static_cast<double>(i) / steps;
            Pose p{from.x + f * (x - from.x), from.y + f * (y - from.y), heading};
            emit(p);
            cur_ = p;
        }
    }

    void turn_to(double heading) {
        const double diff = normalize_angle(heading - cur_.theta);
        if (std::fabs(diff) < 1e-9) return;
        const int steps = std::max(1, static_cast<int>(std::ceil(std::fabs(diff) / (kTurnRate * kDt))));
        const double from = cur_.theta;
        for (int i = 1; i <= steps; ++i) {
            const double f = static_cast<double>(i) / steps;
            Pose p{cur_.x, cur_.y, normalize_angle(from + f * diff)};
            emit(p);
            cur_ = p;
        }
    }

private:
    void emit(const Pose& p) {
        traj_.poses.push_back({kDt * static_cast<double>(traj_.poses.size()), p});
    }

    Trajectory& traj_;
    Pose cur_;
};

Scenario build_indoor(double s) {
    Scenario sc;
    add_rect(sc.world, 0, 0, s, s);
    // clutter: two boxes, one pillar, one free-standing wall stub
    add_rect(sc.world, 0.15 * s, 0.15 * s, 0.28 * s, 0.25 * s);
    add_rect(sc.world, 0.62 * s, 0.70 * s, 0.75 * s, 0.82 * s);
    add_rect(sc.world, 0.70 * s, 0.22 * s, 0.76 * s, 0.28 * s);
    sc.world.segments.push_back({0.30 * s, 0.55 * s, 0.48 * s, 0.55 * s});
    fit_bounds(sc.world);

    const double m = 0.34 * s;
    PathWriter pw(sc.ground_truth);
    pw.start({m, m, 0.0});
    pw.leg_to(s - m, m);
    pw.leg_to(s - m, s - m);
    pw.leg_to(m, s - m);
    pw.leg_to(m, m + 0.02 * s);
    return sc;
}

Scenario build_straight_corridor(double s) {
    Scenario sc;
    add_rect(sc.world, 0, 0, s, 1.0);
    fit_bounds(sc.world);

    PathWriter pw(sc.ground_truth);
    pw.start({1.0, 0.5, 0.0});
    pw.leg_to(s - 1.0, 0.5);
    return sc;
}

Scenario build_circular_corridor(double s) {
    Scenario sc;
    add_rect(sc.world, 0, 0, s, s);
    add_rect(sc.world, 1.0, 1.0, s - 1.0, s - 1.0);
    fit_bounds(sc.world);

    const double c = 0.5;
    PathWriter pw(sc.ground_truth);
    pw.start({c, c, 0.0});
    pw.leg_to(s - c, c, 0.8);
    pw.leg_to(s - c, s - c, 0.8);
    pw.leg_to(c, s - c, 0.8);
    pw.leg_to(c, c + 0.3, 0.8);
    return sc;
}

Scenario build_open_landmarks(double s) {
    Scenario sc;
    // small square posts, no outer walls
    const double post = 0.035 * s;
    const double spots[][2] = {{0.20, 0.30}, {0.50, 0.14}, {0.80, 0.38},
                               {0.36, 0.58}, {0.66, 0.74}, {0.16, 0.80},
                               {0.85, 0.85}};
    for (const auto& f : spots) {
        const double cx = f[0] * s, cy = f[1] * s;
        add_rect(sc.world, cx - post / 2, cy - post / 2, cx + post / 2, cy + post / 2);
    }
    fit_bounds(sc.world);
    sc.world.bounds = Rect{0, 0, s, s};

    const double m = 0.30 * s;
    PathWriter pw(sc.ground_truth);
    pw.start({m, m, 0.0});
    pw.leg_to(s - m, m);
    pw.leg_to(s - m, s - m);
    pw.leg_to(m, s - m);
    pw.leg_to(m, m + 0.02 * s);
    return sc;
}

}  // namespace

ScenarioKind parse_scenario_kind(const std::string& name) {
    if (name == "indoor") return ScenarioKind::Indoor;
    if (name == "straight_corridor") return ScenarioKind::StraightCorridor;
    if (name == "circular_corridor") return ScenarioKind::CircularCorridor;
    if (name == "open_landmarks") return ScenarioKind::OpenLandmarks;
    throw UsageError("unknown scenario kind: " + name);
}

std::string scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Indoor: return "indoor";
        case ScenarioKind::StraightCorridor: return "straight_corridor";
        case ScenarioKind::CircularCorridor: return "circular_corridor";
        case ScenarioKind::OpenLandmarks: return "open_landmarks";
    }
    return "?";
}

Scenario build_scenario(ScenarioKind kind, double scale) {
    if (!(scale > 0.0)) throw UsageError("scenario scale must be positive");
    switch (kind) {
        case ScenarioKind::Indoor: return build_indoor(scale);
        case ScenarioKind::StraightCorridor: return build_straight_corridor(scale);
        case ScenarioKind::CircularCorridor: return build_circular_corridor(scale);
        case ScenarioKind::OpenLandmarks: return build_open_landmarks(scale);
    }
    throw UsageError("unknown scenario kind");
}

}  // namespace adslam
