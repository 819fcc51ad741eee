// SPDX-License-Identifier: Apache-2.0
#include "fedosov/geometry.hpp"

#include <cmath>
#include <sstream>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

constexpr auto U = Variance::Upper;
constexpr auto L = Variance::Lower;

// First-order jets of omega^{mu nu}: values plus d_a omega^{mu nu}.
JetMatrix inverse_first_order(const FormSample& s) {
  const std::size_t n = s.dim();
  std::vector<Matrix> dw(n);
  for (std::size_t a = 0; a < n; ++a) dw[a] = s.inverse_partial(a);
  JetMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::VectorXd g(idx(n));
      for (std::size_t a = 0; a < n; ++a) g[idx(a)] = dw[a](idx(i), idx(j));
      w(i, j) = Jet2::from_parts(s.inverse(idx(i), idx(j)), std::move(g), Eigen::MatrixXd::Zero(idx(n), idx(n)));
    }
  }
  return w;
}

// {f, g} as a first-order jet.
Jet2 bracket_jet(const JetMatrix& w, const Jet2& f, const Jet2& g) {
  const std::size_t n = w.rows();
  Jet2 out(0.0, n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    const Jet2 fm = first_partial(f, mu);
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (w(mu, nu).value() == 0.0 && w(mu, nu).grad().isZero(0.0)) continue;
      out += fm * w(mu, nu) * first_partial(g, nu);
    }
  }
  return out;
}

double bracket_value(const Matrix& w, const Jet2& f, const Jet2& g) { return f.grad().dot(w * g.grad()); }

void require_dim(const PhasePoint& x, std::size_t dim) {
  if (x.dim() != dim) {
    throw ShapeMismatch("point dimension " + std::to_string(x.dim()) + " does not match form dimension " +
                        std::to_string(dim));
  }
}

}  // namespace

Matrix FormSample::inverse_partial(std::size_t k) const { return -inverse * d[k] * inverse; }

double reciprocal_condition(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0.0;
  return sv[sv.size() - 1] / sv[0];
}

Matrix invert_checked(const Matrix& omega, const GeometryOptions& opts) {
  const double rc = reciprocal_condition(omega);
  if (!(rc >= opts.min_rcond)) {
    std::ostringstream msg;
    msg << "2-form is singular: reciprocal condition number " << rc << " below " << opts.min_rcond;
    throw SingularForm(msg.str());
  }
  return omega.partialPivLu().inverse();
}

FormSample sample_form(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  const JetMatrix w = omega.jets(x);
  const std::size_t n = omega.dim();
  FormSample s;
  s.omega = w.values();
  s.rcond = reciprocal_condition(s.omega);
  s.inverse = invert_checked(s.omega, opts);
  s.d.reserve(n);
  for (std::size_t k = 0; k < n; ++k) s.d.push_back(w.partial(k));
  s.dd.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      s.dd[a * n + b] = w.second_partial(a, b);
      if (b != a) s.dd[b * n + a] = s.dd[a * n + b];
    }
  }
  return s;
}

Matrix invert_at(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  Matrix inv = invert_checked(omega.values(x), opts);
  // The inverse of an antisymmetric matrix is antisymmetric; remove rounding asymmetry.
  return 0.5 * (inv - inv.transpose());
}

double poisson_bracket(const TwoFormField& omega, const ScalarField& f, const ScalarField& g, const PhasePoint& x,
                       const GeometryOptions& opts) {
  const Matrix w = invert_at(omega, x, opts);
  return bracket_value(w, f.jet_at(x), g.jet_at(x));
}

double jacobi_residual(const TwoFormField& omega, const ScalarField& f, const ScalarField& g, const ScalarField& h,
                       const PhasePoint& x, const GeometryOptions& opts) {
  const FormSample s = sample_form(omega, x, opts);
  const JetMatrix w = inverse_first_order(s);
  const Jet2 fj = f.jet_at(x);
  const Jet2 gj = g.jet_at(x);
  const Jet2 hj = h.jet_at(x);
  return bracket_value(s.inverse, fj, bracket_jet(w, gj, hj)) + bracket_value(s.inverse, gj, bracket_jet(w, hj, fj)) +
         bracket_value(s.inverse, hj, bracket_jet(w, fj, gj));
}

TensorBlock d_omega(const FormSample& s) {
  const std::size_t n = s.dim();
  TensorBlock t = TensorBlock::lower(3, n, "(d omega)_{k mu nu}");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        t(k, m, v) = s.d[k](idx(m), idx(v)) + s.d[m](idx(v), idx(k)) + s.d[v](idx(k), idx(m));
  t.declare_symmetry(0, 1, true);
  t.declare_symmetry(1, 2, true);
  t.declare_symmetry(0, 2, true);
  return t;
}

TensorBlock d_omega(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  // d omega needs no inverse; a singular form is still a valid input here.
  omega.require_admissible(x);
  const JetMatrix w = omega.jets(x);
  FormSample s;
  s.omega = w.values();
  for (std::size_t k = 0; k < omega.dim(); ++k) s.d.push_back(w.partial(k));
  (void)opts;
  return d_omega(s);
}

TensorBlock raise_connection(const TensorBlock& lowered, const Matrix& inverse) {
  const std::size_t n = lowered.extent();
  if (lowered.rank() != 3 || lowered.signature() != std::vector<Variance>{L, L, L} ||
      static_cast<std::size_t>(inverse.rows()) != n) {
    throw ShapeMismatch("raise_connection expects a (lower, lower, lower) block matching the form");
  }
  TensorBlock r({U, L, L}, n, "Gamma^l_{mu nu}");
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      const double wlk = inverse(idx(l), idx(k));
      if (wlk == 0.0) continue;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v) r(l, m, v) += wlk * lowered(k, m, v);
    }
  for (const auto& sym : lowered.symmetries())
    if (sym.first != 0 && sym.second != 0) r.declare_symmetry(sym.first, sym.second, sym.antisymmetric);
  return r;
}

TensorBlock lower_connection(const TensorBlock& raised, const Matrix& omega) {
  const std::size_t n = raised.extent();
  if (raised.rank() != 3 || raised.signature() != std::vector<Variance>{U, L, L} ||
      static_cast<std::size_t>(omega.rows()) != n) {
    throw ShapeMismatch("lower_connection expects an (upper, lower, lower) block matching the form");
  }
  TensorBlock r = TensorBlock::lower(3, n, "Gamma_{k,mu nu}");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const double wkl = omega(idx(k), idx(l));
      if (wkl == 0.0) continue;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v) r(k, m, v) += wkl * raised(l, m, v);
    }
  for (const auto& sym : raised.symmetries())
    if (sym.first != 0 && sym.second != 0) r.declare_symmetry(sym.first, sym.second, sym.antisymmetric);
  return r;
}

Connection skew_connection(const FormSample& s) {
  const std::size_t n = s.dim();
  TensorBlock low = TensorBlock::lower(3, n, "Gamma_{k,mu nu}");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        low(k, m, v) = 0.5 * (s.d[v](idx(k), idx(m)) + s.d[m](idx(v), idx(k)) - s.d[k](idx(m), idx(v)));
  low.declare_symmetry(1, 2, true);
  TensorBlock up = raise_connection(low, s.inverse);
  return {std::move(low), std::move(up)};
}

Connection skew_connection(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  return skew_connection(sample_form(omega, x, opts));
}

ConnectionJet connection_jet(const FormSample& s) {
  const std::size_t n = s.dim();
  ConnectionJet cj{skew_connection(s), TensorBlock({L, L, L, L}, n, "d_a Gamma_{k,mu nu}"),
                   TensorBlock({L, U, L, L}, n, "d_a Gamma^l_{mu nu}")};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v)
          cj.d_lowered(a, k, m, v) = 0.5 * (s.second(a, v)(idx(k), idx(m)) + s.second(a, m)(idx(v), idx(k)) -
                                            s.second(a, k)(idx(m), idx(v)));
  // d_a Gamma^l = (d_a omega^{lk}) Gamma_k + omega^{lk} d_a Gamma_k
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix dw = s.inverse_partial(a);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const double w = s.inverse(idx(l), idx(k));
        const double dwv = dw(idx(l), idx(k));
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t v = 0; v < n; ++v)
            cj.d_raised(a, l, m, v) += dwv * cj.gamma.lowered(k, m, v) + w * cj.d_lowered(a, k, m, v);
      }
  }
  return cj;
}

TensorBlock nabla_omega_residual(const FormSample& s, const TensorBlock& gamma) {
  const std::size_t n = s.dim();
  if (gamma.rank() != 3 || gamma.extent() != n) {
    throw ShapeMismatch("connection must be a rank-3 block with extent " + std::to_string(n));
  }
  TensorBlock raised;
  if (gamma.signature() == std::vector<Variance>{L, L, L}) {
    raised = raise_connection(gamma, s.inverse);
  } else if (gamma.signature() == std::vector<Variance>{U, L, L}) {
    raised = gamma;
  } else {
    throw ShapeMismatch("connection signature must be (lower, lower, lower) or (upper, lower, lower)");
  }
  TensorBlock r = TensorBlock::lower(3, n, "nabla_k omega_{mu nu}");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        double acc = s.d[k](idx(m), idx(v));
        for (std::size_t l = 0; l < n; ++l)
          acc -= raised(l, m, k) * s.omega(idx(l), idx(v)) + raised(l, v, k) * s.omega(idx(m), idx(l));
        r(k, m, v) = acc;
      }
  return r;
}

TensorBlock nabla_omega_residual(const TwoFormField& omega, const TensorBlock& gamma, const PhasePoint& x,
                                 const GeometryOptions& opts) {
  require_dim(x, omega.dim());
  return nabla_omega_residual(sample_form(omega, x, opts), gamma);
}

Curvature curvature(const ConnectionJet& cj, const Matrix& omega) {
  const std::size_t n = cj.gamma.raised.extent();
  const TensorBlock& g = cj.gamma.raised;
  const TensorBlock& dg = cj.d_raised;
  Curvature r{TensorBlock({U, L, L, L}, n, "R^i_{qkl}"), TensorBlock::lower(4, n, "R_{jqkl}")};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          double acc = dg(l, i, q, k) - dg(k, i, q, l);
          for (std::size_t p = 0; p < n; ++p) acc += g(i, p, l) * g(p, q, k) - g(i, p, k) * g(p, q, l);
          r.mixed(i, q, k, l) = acc;
        }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const double w = omega(idx(j), idx(i));
      if (w == 0.0) continue;
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) r.lowered(j, q, k, l) += w * r.mixed(i, q, k, l);
    }
  r.mixed.declare_symmetry(2, 3, true);
  r.lowered.declare_symmetry(2, 3, true);
  r.lowered.declare_symmetry(0, 1, false);
  return r;
}

Curvature curvature(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  const FormSample s = sample_form(omega, x, opts);
  return curvature(connection_jet(s), s.omega);
}

TensorBlock curvature_lowered_direct(const ConnectionJet& cj) {
  const std::size_t n = cj.gamma.raised.extent();
  const TensorBlock& gl = cj.gamma.lowered;
  const TensorBlock& gu = cj.gamma.raised;
  const TensorBlock& dgl = cj.d_lowered;
  TensorBlock r = TensorBlock::lower(4, n, "R_{jqkl}");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          double acc = dgl(l, j, q, k) - dgl(k, j, q, l);
          for (std::size_t i = 0; i < n; ++i) acc += gl(i, j, l) * gu(i, q, k) - gl(i, j, k) * gu(i, q, l);
          r(j, q, k, l) = acc;
        }
  r.declare_symmetry(2, 3, true);
  r.declare_symmetry(0, 1, false);
  return r;
}

TensorBlock torsion(const TensorBlock& raised) {
  if (raised.rank() != 3 || raised.signature() != std::vector<Variance>{U, L, L}) {
    throw ShapeMismatch("torsion expects an (upper, lower, lower) connection block");
  }
  const std::size_t n = raised.extent();
  TensorBlock t({U, L, L}, n, "T^p_{kl}");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) t(p, k, l) = raised(p, k, l) - raised(p, l, k);
  t.declare_symmetry(1, 2, true);
  return t;
}

TensorBlock lower_torsion(const TensorBlock& torsion, const Matrix& omega) {
  if (torsion.rank() != 3 || torsion.signature() != std::vector<Variance>{U, L, L}) {
    throw ShapeMismatch("lower_torsion expects an (upper, lower, lower) torsion block");
  }
  TensorBlock t = lower_connection(torsion, omega);
  t *= 0.5;
  return t;
}

TensorBlock cyclic_torsion_sum(const TensorBlock& t) {
  if (t.rank() != 3 || t.signature() != std::vector<Variance>{L, L, L}) {
    throw ShapeMismatch("cyclic_torsion_sum expects a lowered rank-3 torsion");
  }
  const std::size_t n = t.extent();
  TensorBlock c = TensorBlock::lower(3, n, "2 (T_{k mu nu} + T_{mu nu k} + T_{nu k mu})");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) c(k, m, v) = 2.0 * (t(k, m, v) + t(m, v, k) + t(v, k, m));
  return c;
}

namespace {

TensorBlock commutator_residual(const TwoFormField& omega, const VectorField& field, const PhasePoint& x,
                                const GeometryOptions& opts, bool covariant_torsion_term) {
  const FormSample s = sample_form(omega, x, opts);
  const ConnectionJet cj = connection_jet(s);
  const Curvature r = curvature(cj, s.omega);
  const TensorBlock t = torsion(cj.gamma.raised);
  const TensorBlock& g = cj.gamma.raised;
  const TensorBlock& dg = cj.d_raised;
  const std::size_t n = s.dim();

  const std::vector<Jet2> a = field.jet_at(x);
  if (a.size() != n) throw ShapeMismatch("vector field has " + std::to_string(a.size()) + " components");

  // B^i_l = nabla_l a^i and its partials d_k B^i_l.
  Matrix b(idx(n), idx(n));
  std::vector<Matrix> db(n, Matrix::Zero(idx(n), idx(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      double v = a[i].d(l);
      for (std::size_t q = 0; q < n; ++q) v += g(i, q, l) * a[q].value();
      b(idx(i), idx(l)) = v;
      for (std::size_t k = 0; k < n; ++k) {
        double dv = a[i].dd(k, l);
        for (std::size_t q = 0; q < n; ++q) dv += dg(k, i, q, l) * a[q].value() + g(i, q, l) * a[q].d(k);
        db[k](idx(i), idx(l)) = dv;
      }
    }
  // nabla_k B^i_l = d_k B^i_l + Gamma^i_{pk} B^p_l - Gamma^p_{lk} B^i_p
  auto nabla_b = [&](std::size_t k, std::size_t i, std::size_t l) {
    double v = db[k](idx(i), idx(l));
    for (std::size_t p = 0; p < n; ++p) v += g(i, p, k) * b(idx(p), idx(l)) - g(p, l, k) * b(idx(i), idx(p));
    return v;
  };

  TensorBlock res({U, L, L}, n, "[nabla_k, nabla_l] a^i residual");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const double lhs = nabla_b(k, i, l) - nabla_b(l, i, k);
        double rhs = 0.0;
        for (std::size_t q = 0; q < n; ++q) rhs -= r.mixed(i, q, k, l) * a[q].value();
        for (std::size_t p = 0; p < n; ++p)
          rhs += t(p, k, l) * (covariant_torsion_term ? b(idx(i), idx(p)) : a[i].d(p));
        res(i, k, l) = lhs - rhs;
      }
  return res;
}

}  // namespace

TensorBlock commutator_check(const TwoFormField& omega, const VectorField& a, const PhasePoint& x,
                             const GeometryOptions& opts) {
  return commutator_residual(omega, a, x, opts, true);
}

TensorBlock commutator_check_partial_form(const TwoFormField& omega, const VectorField& a, const PhasePoint& x,
                                          const GeometryOptions& opts) {
  return commutator_residual(omega, a, x, opts, false);
}

Matrix ricci(const Curvature& r) {
  const std::size_t n = r.mixed.extent();
  Matrix out = Matrix::Zero(idx(n), idx(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i) out(idx(q), idx(l)) += r.mixed(i, q, i, l);
  return out;
}

Matrix ricci(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  return ricci(curvature(omega, x, opts));
}

double scalar_curvature(const Matrix& ric, const Matrix& inverse) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ric.rows(); ++i)
    for (Eigen::Index k = 0; k < ric.cols(); ++k) acc += inverse(i, k) * ric(k, i);
  return acc;
}

double scalar_curvature(const TwoFormField& omega, const PhasePoint& x, const GeometryOptions& opts) {
  const FormSample s = sample_form(omega, x, opts);
  return scalar_curvature(ricci(curvature(connection_jet(s), s.omega)), s.inverse);
}

double ricci_diagonal_closed_form(const FormSample& s, std::size_t l) {
  const std::size_t n = s.dim();
  if (l >= n) throw ShapeMismatch("Ricci index out of range");
  const Matrix& w = s.inverse;
  const Matrix dw = s.inverse_partial(l);
  const Matrix& dl = s.d[l];
  const Matrix& ddl = s.second(l, l);

  // F_{mk} = d_k omega_{lm}
  Matrix f(idx(n), idx(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) f(idx(m), idx(k)) = s.d[k](idx(l), idx(m));

  const double hessian_term = 2.0 * (w.array() * ddl.array()).sum();
  const double gradient_term = (dw.array() * dl.array()).sum();
  const Matrix wf = w * f.transpose();  // (W F^T)_{im} = omega^{ik} F_{mk}
  const Matrix wg = w * f;              // (W F)_{mi} = omega^{mr} F_{ri}
  double straight = 0.0;                // omega^{ik} omega^{mr} F_{mk} F_{ri}
  double crossed = 0.0;                 // omega^{ik} omega^{mr} F_{mk} F_{ir}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) {
      straight += wf(idx(i), idx(m)) * wg(idx(m), idx(i));
      crossed += wf(idx(i), idx(m)) * wf(idx(m), idx(i));
    }
  return 0.25 * (hessian_term + gradient_term - 2.0 * straight - 2.0 * crossed);
}

double ricci_diagonal_closed_form(const TwoFormField& omega, const PhasePoint& x, std::size_t l,
                                  const GeometryOptions& opts) {
  return ricci_diagonal_closed_form(sample_form(omega, x, opts), l);
}

double ricci_diagonal_printed(const FormSample& s, std::size_t l) {
  const std::size_t n = s.dim();
  if (l >= n) throw ShapeMismatch("Ricci index out of range");
  const Matrix& w = s.inverse;
  const Matrix& om = s.omega;
  std::vector<Matrix> dw(n);
  for (std::size_t a = 0; a < n; ++a) dw[a] = s.inverse_partial(a);

  const double t1 = 2.0 * (w.array() * s.second(l, l).array()).sum();
  const double contraction = (om.array() * dw[l].array()).sum();
  const double t2 = contraction * contraction;
  double t3 = 0.0;  // d_l omega^{ir} d_r omega_{li}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) t3 += dw[l](idx(i), idx(r)) * s.d[r](idx(l), idx(i));
  double t4 = 0.0;  // d_r omega^{jk} d_j omega^{ri} omega_{li} omega_{lk}
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          t4 += dw[r](idx(j), idx(k)) * dw[j](idx(r), idx(i)) * om(idx(l), idx(i)) * om(idx(l), idx(k));
  return 0.25 * (t1 + t2 + t3 - t4);
}

}  // namespace fedosov
