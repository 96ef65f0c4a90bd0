/* scenario.hpp -- desk-scale scenario worlds and scripted trajectories */

#pragma once

#include <string>
#include <utility>

#include "adslam/trajectory.hpp"
#include "adslam/world.hpp"

namespace adslam {

enum class ScenarioKind {
    Indoor,           // cluttered square room
    StraightCorridor, // long thin rectangle, traversed lengthwise
    CircularCorridor, // square annulus, traversed around the loop
    OpenLandmarks,    // sparse small obstacles, no outer walls
};

ScenarioKind parse_scenario_kind(const std::string& name);  // UsageError on unknown
std::string scenario_kind_name(ScenarioKind kind);

struct Scenario {
    WorldMap world;
    Trajectory ground_truth;  // 10 Hz control steps
};

Scenario build_scenario(ScenarioKind kind, double scale);

}  // namespace adslam
