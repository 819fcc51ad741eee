// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fedosov/phase_point.hpp"

namespace fedosov {

enum class Method { Rk4, Rk45 };
enum class GuardPolicy { Stop, Error };

struct IntegratorConfig {
  Method method = Method::Rk4;
  double step = 1e-3;        // fixed step for Rk4, initial step for Rk45
  double tolerance = 1e-10;  // absolute and relative, Rk45 only
  double t_end = 1.0;
  GuardPolicy guard_policy = GuardPolicy::Stop;
  double min_step = 1e-14;   // Rk45 gives up below this

  /// Throws std::invalid_argument unless step > 0, t_end >= 0 and tolerance in (0, 1e-2].
  void validate() const;
};

Method parse_method(const std::string& name);
std::string to_string(Method m);

using OdeRhs = std::function<void(const Vector& x, Vector& dxdt)>;
/// std::nullopt while the state is admissible.
using StateGuard = std::function<std::optional<std::string>(const Vector& x)>;

struct OdeSolution {
  std::vector<double> times;
  std::vector<Vector> states;
  bool stopped = false;  // guard tripped or the right-hand side failed
  std::string message;
  std::size_t steps = 0;
  std::size_t rejected = 0;
};

/// Integrates dx/dt = rhs(x) from t = 0 to config.t_end, recording every
/// accepted step. Stops early, keeping the states so far, when the guard
/// trips or rhs throws a library error. Throws StepFailure when the
/// adaptive step falls below config.min_step.
OdeSolution integrate_ode(const OdeRhs& rhs, const StateGuard& guard, const Vector& x0,
                          const IntegratorConfig& config);

}  // namespace fedosov
