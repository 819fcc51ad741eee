// SPDX-License-Identifier: Apache-2.0
#include "fedosov/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<double>;

Vector to_vector(const State& s) { return Eigen::Map<const Vector>(s.data(), static_cast<Eigen::Index>(s.size())); }

struct System {
  const OdeRhs& rhs;
  Vector x;
  Vector dx;

  void operator()(const State& s, State& ds, double /*t*/) {
    x = Eigen::Map<const Vector>(s.data(), static_cast<Eigen::Index>(s.size()));
    dx.resize(x.size());
    rhs(x, dx);
    ds.assign(dx.data(), dx.data() + dx.size());
  }
};

bool finite(const State& s) {
  return std::all_of(s.begin(), s.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be finite and >= 0");
  if (!(tolerance > 0.0 && tolerance <= 1e-2)) throw std::invalid_argument("tolerance must lie in (0, 1e-2]");
  if (!(min_step > 0.0)) throw std::invalid_argument("min_step must be positive");
}

Method parse_method(const std::string& name) {
  if (name == "rk4") return Method::Rk4;
  if (name == "rk45") return Method::Rk45;
  throw std::invalid_argument("unknown method '" + name + "' (expected rk4 or rk45)");
}

std::string to_string(Method m) { return m == Method::Rk4 ? "rk4" : "rk45"; }

OdeSolution integrate_ode(const OdeRhs& rhs, const StateGuard& guard, const Vector& x0,
                          const IntegratorConfig& config) {
  config.validate();
  OdeSolution out;
  State x(x0.data(), x0.data() + x0.size());
  double t = 0.0;
  out.times.push_back(t);
  out.states.push_back(x0);
  System sys{rhs, {}, {}};

  auto stop = [&](std::string why) {
    out.stopped = true;
    out.message = std::move(why);
  };
  auto check = [&](const State& s) -> bool {
    if (!finite(s)) {
      stop("state became non-finite");
      return false;
    }
    if (guard) {
      if (auto why = guard(to_vector(s))) {
        stop(*why);
        return false;
      }
    }
    return true;
  };

  if (!check(x)) return out;
  const double t_end = config.t_end;
  // Steps closer than this to t_end are merged into the final step.
  const double slack = 1e-12 * std::max(1.0, t_end);

  try {
    if (config.method == Method::Rk4) {
      odeint::runge_kutta4<State> stepper;
      const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / config.step - 1e-9));
      for (std::size_t k = 0; k < n_steps; ++k) {
        const double t_next = (k + 1 == n_steps) ? t_end : static_cast<double>(k + 1) * config.step;
        State trial = x;
        stepper.do_step(std::ref(sys), trial, t, t_next - t);
        if (!check(trial)) return out;
        x = std::move(trial);
        t = t_next;
        ++out.steps;
        out.times.push_back(t);
        out.states.push_back(to_vector(x));
      }
    } else {
      auto stepper = odeint::make_controlled(config.tolerance, config.tolerance, odeint::runge_kutta_dopri5<State>());
      double dt = std::min(config.step, std::max(t_end, config.min_step));
      while (t_end - t > slack) {
        if (t + dt > t_end - slack) dt = t_end - t;
        State trial = x;
        double t_trial = t;
        double dt_trial = dt;
        const auto res = stepper.try_step(std::ref(sys), trial, t_trial, dt_trial);
        if (res == odeint::fail) {
          ++out.rejected;
          dt = dt_trial;
          if (dt < config.min_step) {
            std::ostringstream msg;
            msg << "adaptive step fell to " << dt << " at t = " << t;
            throw StepFailure(msg.str());
          }
          continue;
        }
        if (!check(trial)) return out;
        x = std::move(trial);
        t = (t_end - t_trial <= slack) ? t_end : t_trial;
        dt = dt_trial;
        ++out.steps;
        out.times.push_back(t);
        out.states.push_back(to_vector(x));
      }
    }
  } catch (const StepFailure&) {
    throw;
  } catch (const Error& e) {
    stop(e.what());
  }
  return out;
}

}  // namespace fedosov
