// SPDX-License-Identifier: Apache-2.0
#pragma once

// The monopole flow written on R^12 with the standard symplectic form and
// first-class constraints. Layout: x = (q1 q2 q3 q1' q2' q3', p1 p2 p3 p1' p2' p3').
//
//   variant A   H  = f e_ijk p_j q_k q'_i + (p.p - p'.p')/2,   phi  = (p + p', q - q')
//   variant B   H~ = f e_ijk p_j q_k q'_i + (p.p + p'.p')/2,   phi~ = (p + p', q_i^2 - q_i'^2)

#include <array>
#include <string>

#include "fedosov/dynamics.hpp"
#include "fedosov/integrator.hpp"
#include "fedosov/monopole.hpp"

namespace fedosov::constrained {

enum class Variant { A, B };
/// Solution of q_i^2 = q_i'^2 used to build initial data: q' = q or q' = -q.
enum class Branch { Plus, Minus };
enum class DriftPolicy { Error, Monitor };

std::string to_string(Variant v);
std::string to_string(Branch b);

struct ConstrainedSystem {
  Variant variant = Variant::A;
  monopole::MonopoleParams f_spec;  // only the f part is used

  static constexpr std::size_t dim = 12;
};

double hamiltonian_eval(const ConstrainedSystem& sys, const Vector& x12);
/// dH/dx in the 12-dim layout.
Vector hamiltonian_gradient(const ConstrainedSystem& sys, const Vector& x12);
/// The flow x' = omega^{mu nu} d_nu H of the standard form.
Vector constrained_vector_field(const ConstrainedSystem& sys, const Vector& x12);

Vector constraints_eval(const ConstrainedSystem& sys, const Vector& x12);
/// Rows are d phi_r / dx.
Matrix constraints_gradient(const ConstrainedSystem& sys, const Vector& x12);

struct BracketTable {
  Matrix phi_phi;  // {phi_r, phi_s}
  Vector phi_h;    // {phi_r, H}
};
BracketTable first_class_check(const ConstrainedSystem& sys, const Vector& x12);

/// (q, q', p, p') with p' = -p and q' = q (Plus) or q' = -q (Minus).
Vector on_surface_state(const std::array<double, 3>& q, const std::array<double, 3>& p, Branch branch = Branch::Plus);

/// Physical part (q1..q3, p1..p3) of a 12-dim state.
PhasePoint project(const Vector& x12);

struct ConstrainedRun {
  Trajectory full;      // 12-dim, channel "constraint_residual" = max_r |phi_r|
  Trajectory physical;  // 6-dim projection
};

/// Throws ConstraintDrift when the start is off the surface by more than
/// 1e-10, or (DriftPolicy::Error) when the residual later exceeds `limit`.
ConstrainedRun integrate_constrained(const ConstrainedSystem& sys, const Vector& x12_0,
                                     const IntegratorConfig& config, DriftPolicy policy = DriftPolicy::Error,
                                     double limit = 1e-6);

}  // namespace fedosov::constrained
