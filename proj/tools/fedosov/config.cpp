// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fedosov::cli {

namespace {

using nlohmann::json;

monopole::FMode parse_f_mode(const std::string& s) {
  if (s == "monopole") return monopole::FMode::Monopole;
  if (s == "constant") return monopole::FMode::Constant;
  throw UsageError("f_mode must be monopole or constant, got '" + s + "'");
}

monopole::GMode parse_g_mode(const std::string& s) {
  if (s == "monopole") return monopole::GMode::Monopole;
  if (s == "constant") return monopole::GMode::Constant;
  if (s == "zero") return monopole::GMode::Zero;
  throw UsageError("g_mode must be zero, constant or monopole, got '" + s + "'");
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::size_t RunConfig::dimension(const std::vector<double>& coords) const {
  if (monopole::is_monopole_model(model)) return 6;
  return coords.size();
}

std::vector<double> parse_csv_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + cell + "'");
    }
    if (cell.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("not a number: '" + cell + "'");
    if (!std::isfinite(v)) throw UsageError("non-finite coordinate '" + cell + "'");
    out.push_back(v);
  }
  return out;
}

RunConfig apply_json(RunConfig c, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  static const std::vector<std::string> known = {"model", "lambda", "alpha", "beta", "f_mode", "g_mode", "margin",
                                                 "hamiltonian", "point", "state", "t_end", "step", "tolerance",
                                                 "method", "out", "format", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw UsageError("unknown config key '" + key + "'");
  }
  if (j.contains("model")) c.model = get<std::string>(j, "model");
  if (j.contains("lambda")) c.params.lambda = get<double>(j, "lambda");
  if (j.contains("alpha")) {
    c.params.alpha = get<double>(j, "alpha");
    c.params.f_mode = monopole::FMode::Constant;
  }
  if (j.contains("beta")) {
    c.params.beta = get<double>(j, "beta");
    c.params.g_mode = monopole::GMode::Constant;
  }
  if (j.contains("f_mode")) c.params.f_mode = parse_f_mode(get<std::string>(j, "f_mode"));
  if (j.contains("g_mode")) c.params.g_mode = parse_g_mode(get<std::string>(j, "g_mode"));
  if (j.contains("margin")) c.params.margin = get<double>(j, "margin");
  if (j.contains("hamiltonian")) c.hamiltonian = get<std::string>(j, "hamiltonian");
  if (j.contains("point")) c.point = get<std::vector<double>>(j, "point");
  if (j.contains("state")) c.state = get<std::vector<double>>(j, "state");
  if (j.contains("t_end")) c.integrator.t_end = get<double>(j, "t_end");
  if (j.contains("step")) c.integrator.step = get<double>(j, "step");
  if (j.contains("tolerance")) c.integrator.tolerance = get<double>(j, "tolerance");
  if (j.contains("method")) {
    try {
      c.integrator.method = parse_method(get<std::string>(j, "method"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (j.contains("out")) c.out = get<std::string>(j, "out");
  if (j.contains("format")) {
    try {
      c.format = parse_format(get<std::string>(j, "format"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
  return c;
}

RunConfig resolve_config(const Overrides& o) {
  RunConfig c;
  if (o.config_path) {
    std::ifstream in(*o.config_path);
    if (!in) throw UsageError("cannot read config file '" + *o.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    c = apply_json(c, buf.str());
  }
  if (o.model) c.model = *o.model;
  if (o.lambda) c.params.lambda = *o.lambda;
  if (o.alpha) {
    c.params.alpha = *o.alpha;
    c.params.f_mode = monopole::FMode::Constant;
  }
  if (o.beta) {
    c.params.beta = *o.beta;
    c.params.g_mode = monopole::GMode::Constant;
  }
  if (o.f_mode) c.params.f_mode = parse_f_mode(*o.f_mode);
  if (o.g_mode) c.params.g_mode = parse_g_mode(*o.g_mode);
  if (o.hamiltonian) c.hamiltonian = *o.hamiltonian;
  if (o.point) c.point = parse_csv_reals(*o.point);
  if (o.state) c.state = parse_csv_reals(*o.state);
  if (o.t_end) c.integrator.t_end = *o.t_end;
  if (o.step) c.integrator.step = *o.step;
  if (o.tolerance) c.integrator.tolerance = *o.tolerance;
  try {
    if (o.method) c.integrator.method = parse_method(*o.method);
    if (o.format) c.format = parse_format(*o.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.out) c.out = *o.out;
  if (o.seed) c.seed = *o.seed;

  if (c.model != "standard" && !monopole::is_monopole_model(c.model)) {
    throw UsageError("unknown model '" + c.model + "' (expected standard, form4, form6 or form7)");
  }
  if (c.hamiltonian != "free" && c.hamiltonian != "oscillator") {
    throw UsageError("unknown hamiltonian '" + c.hamiltonian + "' (expected free or oscillator)");
  }
  try {
    c.integrator.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

ScalarField make_hamiltonian(const std::string& name, std::size_t n) {
  if (name == "oscillator") return oscillator_hamiltonian(n);
  return free_particle_hamiltonian(n);
}

}  // namespace fedosov::cli
