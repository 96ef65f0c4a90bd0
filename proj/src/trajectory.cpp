/* trajectory.cpp */

#include "adslam/trajectory.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace adslam {

Trajectory load_tum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trajectory file: " + path);
    Trajectory traj;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        double t, tx, ty, tz, qx, qy, qz, qw;
        if (!(ss >> t >> tx >> ty >> tz >> qx >> qy >> qz >> qw)) {
            throw IoError(path + ":" + std::to_string(lineno) + ": malformed TUM line");
        }
        StampedPose sp;
        sp.t = t;
        sp.pose.x = tx;
        sp.pose.y = ty;
        sp.pose.theta = normalize_angle(2.0 * std::atan2(qz, qw));
        traj.poses.push_back(sp);
    }
    return traj;
}

void save_tum(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write trajectory file: " + path);
    out << "# timestamp tx ty tz qx qy qz qw\n";
    char buf[256];
    for (const StampedPose& sp : traj.poses) {
        const double qz = std::sin(sp.pose.theta / 2.0);
        const double qw = std::cos(sp.pose.theta / 2.0);
        std::snprintf(buf, sizeof(buf), "%.12g %.12g %.12g 0 0 0 %.12g %.12g\n",
                      sp.t, sp.pose.x, sp.pose.y, qz, qw);
        out << buf;
    }
}

}  // namespace adslam
