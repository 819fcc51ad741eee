// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "fedosov/dynamics.hpp"

namespace fedosov {

enum class TrajectoryFormat { Jsonl, Csv };

TrajectoryFormat parse_format(const std::string& name);

/// JSON lines, one {"t": real, "x": [...], "diag": {...}} per sample.
void write_jsonl(std::ostream& out, const Trajectory& traj);
/// Header "t,x0,...,x{2n-1},<diag channels>" then one row per sample, 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory(std::ostream& out, const Trajectory& traj, TrajectoryFormat format);
void write_trajectory_file(const std::string& path, const Trajectory& traj, TrajectoryFormat format);

Trajectory read_jsonl(std::istream& in);
Trajectory read_csv(std::istream& in);

}  // namespace fedosov
