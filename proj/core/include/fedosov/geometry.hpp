// SPDX-License-Identifier: Apache-2.0
#pragma once

// Coordinate-basis geometry of a non-degenerate 2-form on R^{2n}.
//
// Index conventions (storage runs 0..2n-1, q before p):
//   Gamma_{k,mu nu}   lowered connection,  slots (k, mu, nu)
//   Gamma^l_{mu nu}   raised connection,   slots (l, mu, nu); the derivative
//                     index is the last one: nabla_l a^i = d_l a^i + Gamma^i_{q l} a^q
//   lowering          Gamma_{nu, mu k} = omega_{nu l} Gamma^l_{mu k}
//   raising           Gamma^l_{mu nu}  = omega^{lk} Gamma_{k, mu nu}
//   R^i_{qkl}         = d_l Gamma^i_{qk} - d_k Gamma^i_{ql}
//                       + Gamma^i_{pl} Gamma^p_{qk} - Gamma^i_{pk} Gamma^p_{ql}
//   R_{jqkl}          = omega_{ji} R^i_{qkl}
//   T^p_{kl}          = Gamma^p_{kl} - Gamma^p_{lk}
//
// The general omega-consistent connection is Gamma_{k,mu nu} = (skew part)
// + S_{mu nu k} + S_{k mu nu} - S_{nu k mu} for a symmetric part S; only the
// unique skew choice (S = 0) is constructed here.

#include <cstddef>
#include <vector>

#include "fedosov/fields.hpp"
#include "fedosov/phase_point.hpp"
#include "fedosov/tensor_block.hpp"
#include "fedosov/two_form.hpp"

namespace fedosov {

struct GeometryOptions {
  /// Forms with sigma_min / sigma_max below this are rejected as singular.
  double min_rcond = 1e-10;
};

/// omega, its inverse, and its first and second partial derivatives at a point.
struct FormSample {
  Matrix omega;
  Matrix inverse;
  std::vector<Matrix> d;   // d[k] = d_k omega
  std::vector<Matrix> dd;  // dd[a * dim + b] = d_a d_b omega
  double rcond = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(omega.rows()); }
  const Matrix& second(std::size_t a, std::size_t b) const { return dd[a * dim() + b]; }
  /// d_k omega^{..} = -omega^{..} (d_k omega) omega^{..}
  Matrix inverse_partial(std::size_t k) const;
};

double reciprocal_condition(const Matrix& m);

/// Inverse of a numeric 2-form matrix; throws SingularForm below min_rcond.
Matrix invert_checked(const Matrix& omega, const GeometryOptions& opts = {});

FormSample sample_form(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

/// omega^{mu nu} at x.
Matrix invert_at(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

/// {f, g} = d_mu f omega^{mu nu} d_nu g.
double poisson_bracket(const TwoFormField& omega, const ScalarField& f, const ScalarField& g, const PhasePoint& x,
                       const GeometryOptions& opts = {});

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
double jacobi_residual(const TwoFormField& omega, const ScalarField& f, const ScalarField& g, const ScalarField& h,
                       const PhasePoint& x, const GeometryOptions& opts = {});

/// (d omega)_{k mu nu} = d_k omega_{mu nu} + d_mu omega_{nu k} + d_nu omega_{k mu}.
TensorBlock d_omega(const FormSample& s);
TensorBlock d_omega(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

struct Connection {
  TensorBlock lowered;  // Gamma_{k,mu nu}
  TensorBlock raised;   // Gamma^l_{mu nu}
};

/// The unique omega-consistent connection with Gamma_{k,mu nu} = -Gamma_{k,nu mu}:
/// Gamma_{k,mu nu} = 1/2 (d_nu omega_{k mu} + d_mu omega_{nu k} - d_k omega_{mu nu}).
Connection skew_connection(const FormSample& s);
Connection skew_connection(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

TensorBlock raise_connection(const TensorBlock& lowered, const Matrix& inverse);
TensorBlock lower_connection(const TensorBlock& raised, const Matrix& omega);

/// The skew connection together with its first partial derivatives, stored
/// with the derivative slot first: d_lowered(a, k, mu, nu) = d_a Gamma_{k,mu nu}.
struct ConnectionJet {
  Connection gamma;
  TensorBlock d_lowered;
  TensorBlock d_raised;
};
ConnectionJet connection_jet(const FormSample& s);

/// nabla_k omega_{mu nu} = d_k omega_{mu nu} - Gamma^l_{mu k} omega_{l nu} - Gamma^l_{nu k} omega_{mu l},
/// returned in slots (k, mu, nu). Gamma may be given lowered (lower, lower, lower)
/// or raised (upper, lower, lower).
TensorBlock nabla_omega_residual(const FormSample& s, const TensorBlock& gamma);
TensorBlock nabla_omega_residual(const TwoFormField& omega, const TensorBlock& gamma, const PhasePoint& x,
                                 const GeometryOptions& opts = {});

struct Curvature {
  TensorBlock mixed;    // R^i_{qkl}
  TensorBlock lowered;  // R_{jqkl}
};
Curvature curvature(const ConnectionJet& cj, const Matrix& omega);
Curvature curvature(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

/// R_{jqkl} assembled from the lowered connection directly:
/// d_l Gamma_{j,qk} - d_k Gamma_{j,ql} + Gamma_{i,jl} Gamma^i_{qk} - Gamma_{i,jk} Gamma^i_{ql}.
TensorBlock curvature_lowered_direct(const ConnectionJet& cj);

/// T^p_{kl} = Gamma^p_{kl} - Gamma^p_{lk}; requires an (upper, lower, lower) block.
TensorBlock torsion(const TensorBlock& raised);

/// The antisymmetric part of the lowered connection,
/// T_{k mu nu} = 1/2 (Gamma_{k,mu nu} - Gamma_{k,nu mu}) = 1/2 omega_{kp} T^p_{mu nu}.
TensorBlock lower_torsion(const TensorBlock& torsion, const Matrix& omega);

/// 2 (T_{k mu nu} + T_{mu nu k} + T_{nu k mu}); equals d omega for any consistent connection.
TensorBlock cyclic_torsion_sum(const TensorBlock& lowered_torsion);

/// Residual of the commutator identity
///   [nabla_k, nabla_l] a^i = -R^i_{qkl} a^q + T^p_{kl} nabla_p a^i
/// in slots (i, k, l). The left side is built by applying the covariant
/// derivative twice to the jets of `a`.
TensorBlock commutator_check(const TwoFormField& omega, const VectorField& a, const PhasePoint& x,
                             const GeometryOptions& opts = {});

/// Same as commutator_check but against the form with d_p a^i in place of
/// nabla_p a^i; it differs by T^p_{kl} Gamma^i_{qp} a^q.
TensorBlock commutator_check_partial_form(const TwoFormField& omega, const VectorField& a, const PhasePoint& x,
                                          const GeometryOptions& opts = {});

/// R_{ql} = R^i_{qil}.
Matrix ricci(const Curvature& r);
Matrix ricci(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

/// R = omega^{ik} R_{ki}.
double scalar_curvature(const Matrix& ricci, const Matrix& inverse);
double scalar_curvature(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts = {});

/// Diagonal Ricci entry R_{ll} from omega and its derivatives alone:
///   R_ll = 1/4 [ 2 omega^{rk} d_l d_l omega_{rk} + d_l omega^{rk} d_l omega_{rk}
///               - 2 omega^{ik} omega^{mr} F_{mk} F_{ri} - 2 omega^{ik} omega^{mr} F_{mk} F_{ir} ],
/// with F_{mk} = d_k omega_{lm}. Valid for the skew connection.
double ricci_diagonal_closed_form(const FormSample& s, std::size_t l);
double ricci_diagonal_closed_form(const TwoFormField& omega, const PhasePoint& x, std::size_t l,
                                  const GeometryOptions& opts = {});

/// The four-term expression as it appears in the monopole literature:
///   1/4 [ 2 omega^{rk} d_l d_l omega_{rk} + (omega_{rk} d_l omega^{rk})^2
///         + d_l omega^{ir} d_r omega_{li} - d_r omega^{jk} d_j omega^{ri} omega_{li} omega_{lk} ].
/// Kept for side-by-side reports; it does not reproduce R_ll in general.
double ricci_diagonal_printed(const FormSample& s, std::size_t l);

}  // namespace fedosov
