// SPDX-License-Identifier: Apache-2.0
#include "fedosov/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace fedosov {

namespace {

Trajectory to_trajectory(OdeSolution&& sol) {
  Trajectory t;
  t.times = std::move(sol.times);
  t.states.reserve(sol.states.size());
  for (auto& s : sol.states) t.states.emplace_back(std::move(s));
  t.status = sol.stopped ? RunStatus::Singular : RunStatus::Completed;
  t.message = std::move(sol.message);
  t.steps = sol.steps;
  return t;
}

StateGuard form_guard(const TwoFormField& omega) {
  return [&omega](const Vector& x) -> std::optional<std::string> {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (!std::isfinite(x[i])) return std::string("state became non-finite");
    return omega.violation(PhasePoint(x));
  };
}

}  // namespace

Vector vector_field(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x,
                    const GeometryOptions& opts) {
  const Matrix w = invert_at(omega, x, opts);
  const Jet2 hj = h.jet_at(x);
  return w * hj.grad();
}

Matrix flow_jacobian(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x,
                     const GeometryOptions& opts) {
  const JetMatrix wj = omega.jets(x);
  const std::size_t n = omega.dim();
  const Matrix w = invert_checked(wj.values(), opts);
  const Jet2 hj = h.jet_at(x);
  Matrix jac = w * hj.hess();
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix dw = -w * wj.partial(a) * w;
    jac.col(static_cast<Eigen::Index>(a)) += dw * hj.grad();
  }
  return jac;
}

Trajectory integrate(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x0,
                     const IntegratorConfig& config, const GeometryOptions& opts) {
  config.validate();
  omega.require_admissible(x0);
  const OdeRhs rhs = [&](const Vector& x, Vector& dx) { dx = vector_field(omega, h, PhasePoint(x), opts); };
  Trajectory traj = to_trajectory(integrate_ode(rhs, form_guard(omega), x0.coords(), config));
  auto& energy = traj.diagnostics["H"];
  energy.reserve(traj.size());
  for (const auto& s : traj.states) energy.push_back(h(s));
  if (traj.status == RunStatus::Singular && config.guard_policy == GuardPolicy::Error) {
    const std::string why = "flow stopped at t = " + std::to_string(traj.times.back()) + ": " + traj.message;
    throw SingularEncounter(why, std::move(traj));
  }
  return traj;
}

Diagnostics conserved_diagnostics(const Trajectory& traj, const ScalarField& h, double lambda) {
  Diagnostics d;
  if (traj.states.empty()) return d;
  const std::size_t n = traj.states.front().n();
  auto& hs = d["H"];
  auto& speed = d["speed"];
  for (const auto& x : traj.states) {
    hs.push_back(h(x));
    double p2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) p2 += x.p(i) * x.p(i);
    speed.push_back(std::sqrt(p2));
  }
  if (n == 3) {
    auto& j1 = d["J1"];
    auto& j2 = d["J2"];
    auto& j3 = d["J3"];
    auto& cone = d["cone"];
    for (const auto& x : traj.states) {
      const Eigen::Vector3d q(x.q(0), x.q(1), x.q(2));
      const Eigen::Vector3d p(x.p(0), x.p(1), x.p(2));
      const Eigen::Vector3d j = q.cross(p) - lambda * q.normalized();
      j1.push_back(j[0]);
      j2.push_back(j[1]);
      j3.push_back(j[2]);
      const double denom = q.norm() * j.norm();
      cone.push_back(denom > 0.0 ? q.dot(j) / denom : 0.0);
    }
    auto& jd = d["J_drift"];
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const double a = j1[k] - j1[0], b = j2[k] - j2[0], c = j3[k] - j3[0];
      jd.push_back(std::sqrt(a * a + b * b + c * c));
    }
  }
  for (const std::string name : {"H", "speed", "cone"}) {
    auto it = d.find(name);
    if (it == d.end()) continue;
    std::vector<double> drift;
    drift.reserve(it->second.size());
    for (double v : it->second) drift.push_back(std::abs(v - it->second.front()));
    d[name + "_drift"] = std::move(drift);
  }
  return d;
}

double max_of(const Diagnostics& d, const std::string& channel) {
  auto it = d.find(channel);
  if (it == d.end() || it->second.empty()) return 0.0;
  return *std::max_element(it->second.begin(), it->second.end());
}

double TransportSeries::max_drift() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v - values.front()));
  return m;
}

TransportSeries two_form_transport(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x0,
                                   const Vector& u0, const Vector& v0, const IntegratorConfig& config,
                                   const GeometryOptions& opts) {
  config.validate();
  omega.require_admissible(x0);
  const auto n = static_cast<Eigen::Index>(omega.dim());
  if (u0.size() != n || v0.size() != n) throw ShapeMismatch("tangent vectors must match the form dimension");

  Vector z(3 * n);
  z << x0.coords(), u0, v0;
  const OdeRhs rhs = [&](const Vector& s, Vector& ds) {
    const PhasePoint x(Vector(s.head(n)));
    const Matrix jac = flow_jacobian(omega, h, x, opts);
    ds.resize(3 * n);
    ds.head(n) = vector_field(omega, h, x, opts);
    ds.segment(n, n) = jac * s.segment(n, n);
    ds.tail(n) = jac * s.tail(n);
  };
  const StateGuard guard = [&](const Vector& s) -> std::optional<std::string> {
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (!std::isfinite(s[i])) return std::string("state became non-finite");
    return omega.violation(PhasePoint(Vector(s.head(n))));
  };
  OdeSolution sol = integrate_ode(rhs, guard, z, config);

  TransportSeries out;
  out.times = sol.times;
  for (const auto& s : sol.states) {
    const Matrix w = omega.values(PhasePoint(Vector(s.head(n))));
    out.values.push_back(s.segment(n, n).dot(w * s.tail(n)));
  }
  if (sol.stopped) {
    out.status = RunStatus::Singular;
    out.message = sol.message;
    if (config.guard_policy == GuardPolicy::Error) {
      Trajectory partial;
      partial.times = out.times;
      for (const auto& s : sol.states) partial.states.emplace_back(Vector(s.head(n)));
      partial.status = RunStatus::Singular;
      partial.message = sol.message;
      throw SingularEncounter("transport stopped: " + sol.message, std::move(partial));
    }
  }
  return out;
}

}  // namespace fedosov
