// SPDX-License-Identifier: Apache-2.0
#include "fedosov/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fedosov {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TrajectoryFormat parse_format(const std::string& name) {
  if (name == "jsonl") return TrajectoryFormat::Jsonl;
  if (name == "csv") return TrajectoryFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected jsonl or csv)");
}

void write_jsonl(std::ostream& out, const Trajectory& traj) {
  for (std::size_t k = 0; k < traj.size(); ++k) {
    nlohmann::ordered_json rec;
    rec["t"] = traj.times[k];
    const auto& c = traj.states[k].coords();
    rec["x"] = std::vector<double>(c.data(), c.data() + c.size());
    nlohmann::ordered_json diag = nlohmann::ordered_json::object();
    for (const auto& [name, series] : traj.diagnostics)
      if (k < series.size()) diag[name] = series[k];
    rec["diag"] = std::move(diag);
    out << rec.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().dim();
  out << 't';
  for (std::size_t i = 0; i < dim; ++i) out << ",x" << i;
  for (const auto& entry : traj.diagnostics) out << ',' << entry.first;
  out << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out << fmt(traj.times[k]);
    for (std::size_t i = 0; i < dim; ++i) out << ',' << fmt(traj.states[k][i]);
    for (const auto& entry : traj.diagnostics) out << ',' << (k < entry.second.size() ? fmt(entry.second[k]) : "");
    out << '\n';
  }
}

void write_trajectory(std::ostream& out, const Trajectory& traj, TrajectoryFormat format) {
  if (format == TrajectoryFormat::Jsonl) {
    write_jsonl(out, traj);
  } else {
    write_csv(out, traj);
  }
}

void write_trajectory_file(const std::string& path, const Trajectory& traj, TrajectoryFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_trajectory(out, traj, format);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Trajectory read_jsonl(std::istream& in) {
  Trajectory traj;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto rec = nlohmann::json::parse(line);
    traj.times.push_back(rec.at("t").get<double>());
    const auto x = rec.at("x").get<std::vector<double>>();
    traj.states.emplace_back(Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size())));
    for (const auto& [name, value] : rec.at("diag").items()) traj.diagnostics[name].push_back(value.get<double>());
  }
  return traj;
}

Trajectory read_csv(std::istream& in) {
  Trajectory traj;
  std::string line;
  if (!std::getline(in, line)) return traj;
  const auto header = split_csv(line);
  std::size_t dim = 0;
  while (1 + dim < header.size() && header[1 + dim] == "x" + std::to_string(dim)) ++dim;
  std::vector<std::string> channels(header.begin() + static_cast<std::ptrdiff_t>(1 + dim), header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() < 1 + dim) throw std::runtime_error("short CSV row");
    traj.times.push_back(std::stod(cells[0]));
    Vector x(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) x[static_cast<Eigen::Index>(i)] = std::stod(cells[1 + i]);
    traj.states.emplace_back(std::move(x));
    for (std::size_t c = 0; c < channels.size(); ++c)
      if (1 + dim + c < cells.size() && !cells[1 + dim + c].empty())
        traj.diagnostics[channels[c]].push_back(std::stod(cells[1 + dim + c]));
  }
  return traj;
}

}  // namespace fedosov
