// SPDX-License-Identifier: Apache-2.0
#pragma once

// 2-forms for a charged particle in the field of a magnetic monopole, n = 3.
//
//   upper (Poisson) matrix   [[ g e_ijk p_k, delta ], [ -delta, f e_rsk q_k ]]
//   its inverse              1/D [[ f e_ijk q_k, fg p_i q_s - delta_is ],
//                                 [ delta_rj - fg q_r p_j, g e_rsk p_k ]],  D = 1 - fg q.p
//   form7                    the g = 0 case of the inverse
//
// Monopole mode uses f = lambda |q|^-3 and g = |p|^-3.

#include <array>
#include <optional>
#include <string>

#include "fedosov/phase_point.hpp"
#include "fedosov/tensor_block.hpp"
#include "fedosov/two_form.hpp"

namespace fedosov::monopole {

enum class FMode { Constant, Monopole };
enum class GMode { Zero, Constant, Monopole };

struct MonopoleParams {
  double lambda = 1.0;
  FMode f_mode = FMode::Monopole;
  double alpha = 0.0;  // f in Constant mode
  GMode g_mode = GMode::Monopole;
  double beta = 0.0;   // g in Constant mode
  double margin = 1e-6;

  /// Same parameters with g switched off, as used by form7.
  MonopoleParams without_g() const;
};

double f_value(const MonopoleParams& params, const std::array<double, 3>& q);
double g_value(const MonopoleParams& params, const std::array<double, 3>& p);

struct SingularityReport {
  bool near_q_origin = false;
  bool near_p_origin = false;
  double denom_value = 1.0;  // 1 - f g q.p
  bool admissible = true;

  std::string describe() const;
};

/// Flags |q| < margin, |p| < margin and |1 - f g q.p| < margin. The origin
/// flags only make a point inadmissible when the matching function is singular there.
SingularityReport singularity_guard(const MonopoleParams& params, const PhasePoint& x);

Matrix omega_upper_eq4(const MonopoleParams& params, const PhasePoint& x);
Matrix omega_lower_eq6(const MonopoleParams& params, const PhasePoint& x);
Matrix omega_form7(const MonopoleParams& params, const PhasePoint& x);

/// Lower form obtained by inverting the upper matrix in jet arithmetic.
TwoFormField form4_field(const MonopoleParams& params);
/// Lower form from the closed-form inverse.
TwoFormField form6_field(const MonopoleParams& params);
TwoFormField form7_field(const MonopoleParams& params);
/// omega = [[0, -I], [I, 0]] on R^{2n}, so that {q_i, p_j} = delta_ij.
TwoFormField standard_field(std::size_t n);

/// "standard" (n from `n`), "form4", "form6" or "form7"; throws std::invalid_argument otherwise.
TwoFormField make_model(const std::string& name, const MonopoleParams& params, std::size_t n = 3);
bool is_monopole_model(const std::string& name);

// Closed forms for the monopole geometry, used as comparison oracles.

/// Gamma_{i,jk} for form7 on the q-block (slots of an extent-6 lowered block,
/// p-slots left zero). The printed expression carries its delta term in one
/// ordering of (j,k) only; with `complete_antisymmetry` the partner term
/// -delta_ik e_rij q_r q_i is added so the result is antisymmetric in (j,k).
TensorBlock reference_connection_eq41(const std::array<double, 3>& q, double lambda = 1.0,
                                      bool complete_antisymmetry = true);

/// R^{i+3}_{skl} for form7 stored at (i+3, s, k, l) of an (U, L, L, L) block.
TensorBlock reference_curvature_eq42(const std::array<double, 3>& q, double lambda = 1.0);

/// R_{1112} of form6, monopole mode.
double reference_R1112_eq27(const MonopoleParams& params, const PhasePoint& x);
/// R_{11} of form6, monopole mode.
double reference_R11_eq39(const MonopoleParams& params, const PhasePoint& x);
/// 3 / (q2^2 (1 - q2^2 p2^2)); meant for q1 = q3 = p1 = p3 = 0.
double reference_R11_eq40(const PhasePoint& x);

}  // namespace fedosov::monopole
