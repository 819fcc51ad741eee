// SPDX-License-Identifier: Apache-2.0
#include "fedosov/constrained.hpp"

#include <cmath>
#include <sstream>

#include "fedosov/errors.hpp"

namespace fedosov::constrained {

namespace {

using V3 = Eigen::Vector3d;

struct Parts {
  V3 q, qq, p, pp;  // q, q', p, p'
};

Parts split(const Vector& x) {
  if (x.size() != 12) throw ShapeMismatch("constrained states have 12 coordinates, got " + std::to_string(x.size()));
  return {x.segment<3>(0), x.segment<3>(3), x.segment<3>(6), x.segment<3>(9)};
}

double f_of(const ConstrainedSystem& sys, const V3& q) { return monopole::f_value(sys.f_spec, {q[0], q[1], q[2]}); }

V3 grad_f(const ConstrainedSystem& sys, const V3& q) {
  if (sys.f_spec.f_mode == monopole::FMode::Constant) return V3::Zero();
  const double r = q.norm();
  return -3.0 * sys.f_spec.lambda * q / std::pow(r, 5);
}

double sign(const ConstrainedSystem& sys) { return sys.variant == Variant::A ? -1.0 : 1.0; }

// {F, G} for the standard form on R^12: dF/dq . dG/dp - dF/dp . dG/dq.
double bracket(const Vector& df, const Vector& dg) {
  return df.head(6).dot(dg.tail(6)) - df.tail(6).dot(dg.head(6));
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }
std::string to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

double hamiltonian_eval(const ConstrainedSystem& sys, const Vector& x12) {
  const Parts s = split(x12);
  const double coupling = s.qq.dot(s.p.cross(s.q));  // e_ijk q'_i p_j q_k
  return f_of(sys, s.q) * coupling + 0.5 * (s.p.squaredNorm() + sign(sys) * s.pp.squaredNorm());
}

Vector hamiltonian_gradient(const ConstrainedSystem& sys, const Vector& x12) {
  const Parts s = split(x12);
  const double f = f_of(sys, s.q);
  const double coupling = s.qq.dot(s.p.cross(s.q));
  Vector g(12);
  g.segment<3>(0) = grad_f(sys, s.q) * coupling + f * s.qq.cross(s.p);
  g.segment<3>(3) = f * s.p.cross(s.q);
  g.segment<3>(6) = f * s.q.cross(s.qq) + s.p;
  g.segment<3>(9) = sign(sys) * s.pp;
  return g;
}

Vector constrained_vector_field(const ConstrainedSystem& sys, const Vector& x12) {
  const Vector g = hamiltonian_gradient(sys, x12);
  Vector v(12);
  v.head(6) = g.tail(6);
  v.tail(6) = -g.head(6);
  return v;
}

Vector constraints_eval(const ConstrainedSystem& sys, const Vector& x12) {
  const Parts s = split(x12);
  Vector phi(6);
  phi.head(3) = s.p + s.pp;
  if (sys.variant == Variant::A) {
    phi.tail(3) = s.q - s.qq;
  } else {
    phi.tail(3) = s.q.cwiseProduct(s.q) - s.qq.cwiseProduct(s.qq);
  }
  return phi;
}

Matrix constraints_gradient(const ConstrainedSystem& sys, const Vector& x12) {
  const Parts s = split(x12);
  Matrix d = Matrix::Zero(6, 12);
  for (int i = 0; i < 3; ++i) {
    d(i, 6 + i) = 1.0;
    d(i, 9 + i) = 1.0;
    if (sys.variant == Variant::A) {
      d(3 + i, i) = 1.0;
      d(3 + i, 3 + i) = -1.0;
    } else {
      d(3 + i, i) = 2.0 * s.q[i];
      d(3 + i, 3 + i) = -2.0 * s.qq[i];
    }
  }
  return d;
}

BracketTable first_class_check(const ConstrainedSystem& sys, const Vector& x12) {
  const Matrix d = constraints_gradient(sys, x12);
  const Vector dh = hamiltonian_gradient(sys, x12);
  BracketTable t{Matrix(6, 6), Vector(6)};
  for (Eigen::Index r = 0; r < 6; ++r) {
    const Vector dr = d.row(r).transpose();
    for (Eigen::Index s = 0; s < 6; ++s) t.phi_phi(r, s) = bracket(dr, d.row(s).transpose());
    t.phi_h[r] = bracket(dr, dh);
  }
  return t;
}

Vector on_surface_state(const std::array<double, 3>& q, const std::array<double, 3>& p, Branch branch) {
  const double s = branch == Branch::Plus ? 1.0 : -1.0;
  Vector x(12);
  for (int i = 0; i < 3; ++i) {
    x[i] = q[static_cast<std::size_t>(i)];
    x[3 + i] = s * q[static_cast<std::size_t>(i)];
    x[6 + i] = p[static_cast<std::size_t>(i)];
    x[9 + i] = -p[static_cast<std::size_t>(i)];
  }
  return x;
}

PhasePoint project(const Vector& x12) {
  const Parts s = split(x12);
  Vector x(6);
  x << s.q, s.p;
  return PhasePoint(std::move(x));
}

ConstrainedRun integrate_constrained(const ConstrainedSystem& sys, const Vector& x12_0,
                                     const IntegratorConfig& config, DriftPolicy policy, double limit) {
  config.validate();
  const double r0 = constraints_eval(sys, x12_0).cwiseAbs().maxCoeff();
  if (r0 > 1e-10) {
    std::ostringstream msg;
    msg << "initial state is off the constraint surface (residual " << r0 << ")";
    throw ConstraintDrift(msg.str());
  }
  const OdeRhs rhs = [&](const Vector& x, Vector& dx) { dx = constrained_vector_field(sys, x); };
  const StateGuard guard = [&](const Vector& x) -> std::optional<std::string> {
    if (sys.f_spec.f_mode == monopole::FMode::Monopole && x.head(3).norm() < sys.f_spec.margin) {
      return std::string("q reached the monopole singularity");
    }
    return std::nullopt;
  };
  OdeSolution sol = integrate_ode(rhs, guard, x12_0, config);

  ConstrainedRun run;
  run.full.times = sol.times;
  run.full.steps = sol.steps;
  run.full.status = sol.stopped ? RunStatus::Singular : RunStatus::Completed;
  run.full.message = sol.message;
  auto& residual = run.full.diagnostics["constraint_residual"];
  auto& energy = run.full.diagnostics["H"];
  for (const auto& s : sol.states) {
    residual.push_back(constraints_eval(sys, s).cwiseAbs().maxCoeff());
    energy.push_back(hamiltonian_eval(sys, s));
    run.physical.states.push_back(project(s));
    run.full.states.emplace_back(s);
  }
  run.physical.times = run.full.times;
  run.physical.steps = run.full.steps;
  run.physical.status = run.full.status;
  run.physical.message = run.full.message;
  run.physical.diagnostics["constraint_residual"] = residual;

  if (policy == DriftPolicy::Error) {
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (residual[k] > limit) {
        std::ostringstream msg;
        msg << "constraint residual " << residual[k] << " exceeds " << limit << " at t = " << run.full.times[k]
            << " (variant " << to_string(sys.variant) << ")";
        throw ConstraintDrift(msg.str());
      }
    }
  }
  return run;
}

}  // namespace fedosov::constrained
