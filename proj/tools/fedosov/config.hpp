// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fedosov/fields.hpp"
#include "fedosov/integrator.hpp"
#include "fedosov/monopole.hpp"
#include "fedosov/trajectory_io.hpp"

namespace fedosov::cli {

/// Bad command line or config file; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "form7";
  monopole::MonopoleParams params;
  std::string hamiltonian = "free";  // free | oscillator
  std::vector<double> point;
  std::vector<double> state;
  IntegratorConfig integrator;
  std::string out;
  TrajectoryFormat format = TrajectoryFormat::Jsonl;
  std::uint64_t seed = 20240611;

  /// 2n for the model: 6 for monopole models, taken from the point or state for "standard".
  std::size_t dimension(const std::vector<double>& coords) const;
};

/// Overrides collected from flags; unset fields leave the config alone.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> model;
  std::optional<double> lambda;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::string> f_mode;
  std::optional<std::string> g_mode;
  std::optional<std::string> hamiltonian;
  std::optional<std::string> point;
  std::optional<std::string> state;
  std::optional<double> t_end;
  std::optional<double> step;
  std::optional<double> tolerance;
  std::optional<std::string> method;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
};

/// Reads the JSON config file (if any) and applies the overrides on top.
RunConfig resolve_config(const Overrides& o);
/// Parses the JSON text of a config file onto `base`.
RunConfig apply_json(RunConfig base, const std::string& text);

std::vector<double> parse_csv_reals(const std::string& text);
ScalarField make_hamiltonian(const std::string& name, std::size_t n);

}  // namespace fedosov::cli
