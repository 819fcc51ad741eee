// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fedosov/errors.hpp"
#include "fedosov/fields.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/integrator.hpp"
#include "fedosov/phase_point.hpp"
#include "fedosov/two_form.hpp"

namespace fedosov {

using Diagnostics = std::map<std::string, std::vector<double>>;

enum class RunStatus { Completed, Singular };

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> states;
  Diagnostics diagnostics;  // one value per sample in every channel
  RunStatus status = RunStatus::Completed;
  std::string message;
  std::size_t steps = 0;

  std::size_t size() const { return times.size(); }
  const PhasePoint& back() const { return states.back(); }
};

/// The flow reached the guard margin of a singular set. Carries the
/// trajectory up to the last admissible state.
class SingularEncounter : public Error {
 public:
  SingularEncounter(const std::string& what, Trajectory partial) : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// x'^mu = omega^{mu nu} d_nu H.
Vector vector_field(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x,
                    const GeometryOptions& opts = {});

/// d_alpha (omega^{mu nu} d_nu H), rows mu and columns alpha.
Matrix flow_jacobian(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x,
                     const GeometryOptions& opts = {});

/// Integrates the flow of H; records the channel "H". Throws DomainViolation
/// for an inadmissible start and SingularEncounter when the guard trips
/// under GuardPolicy::Error.
Trajectory integrate(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x0,
                     const IntegratorConfig& config, const GeometryOptions& opts = {});

/// Per-sample H, speed |p|, and for n = 3 the Poincare vector
/// J = q x p - lambda q/|q| with the cone cosine q.J / (|q||J|). Every
/// channel c also gets c_drift = |c(t) - c(0)|, and J_drift = |J(t) - J(0)|.
Diagnostics conserved_diagnostics(const Trajectory& traj, const ScalarField& h, double lambda);

/// Largest value of a channel; 0 for an empty or absent channel.
double max_of(const Diagnostics& d, const std::string& channel);

struct TransportSeries {
  std::vector<double> times;
  std::vector<double> values;  // omega(x(t))(u(t), v(t))
  RunStatus status = RunStatus::Completed;
  std::string message;

  /// max |value(t) - value(0)|.
  double max_drift() const;
};

/// Carries tangent vectors u, v along the flow with the linearised equation
/// u' = flow_jacobian(x) u and reports omega(x(t))(u(t), v(t)).
TransportSeries two_form_transport(const TwoFormField& omega, const ScalarField& h, const PhasePoint& x0,
                                   const Vector& u0, const Vector& v0, const IntegratorConfig& config,
                                   const GeometryOptions& opts = {});

}  // namespace fedosov
