// SPDX-License-Identifier: Apache-2.0
#include "fedosov/monopole.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fedosov/errors.hpp"
#include "fedosov/jet.hpp"

namespace fedosov::monopole {

namespace {

constexpr double levi(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((i + 1) % 3 == j) ? 1.0 : -1.0;
}

constexpr double delta(std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; }

template <class S>
S f_generic(const MonopoleParams& prm, const S& q0, const S& q1, const S& q2) {
  if (prm.f_mode == FMode::Constant) return S(prm.alpha);
  using std::pow;
  return S(prm.lambda) * pow(q0 * q0 + q1 * q1 + q2 * q2, -1.5);
}

template <class S>
S g_generic(const MonopoleParams& prm, const S& p0, const S& p1, const S& p2) {
  switch (prm.g_mode) {
    case GMode::Zero:
      return S(0.0);
    case GMode::Constant:
      return S(prm.beta);
    case GMode::Monopole:
      break;
  }
  using std::pow;
  return pow(p0 * p0 + p1 * p1 + p2 * p2, -1.5);
}

template <class S, class M>
void fill_upper(const MonopoleParams& prm, const std::vector<S>& x, M& w) {
  const S f = f_generic(prm, x[0], x[1], x[2]);
  const S g = g_generic(prm, x[3], x[4], x[5]);
  for (std::size_t i = 0; i < 3; ++i) {
    w(i, i + 3) = S(1.0);
    w(i + 3, i) = S(-1.0);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::size_t k = 3 - i - j;
      w(i, j) = g * x[3 + k] * S(levi(i, j, k));
      w(i + 3, j + 3) = f * x[k] * S(levi(i, j, k));
    }
  }
}

template <class S, class M>
void fill_lower(const MonopoleParams& prm, const std::vector<S>& x, M& w) {
  const S f = f_generic(prm, x[0], x[1], x[2]);
  const S g = g_generic(prm, x[3], x[4], x[5]);
  const S qp = x[0] * x[3] + x[1] * x[4] + x[2] * x[5];
  const S fg = f * g;
  const S inv = S(1.0) / (S(1.0) - fg * qp);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      w(i, j + 3) = (fg * x[3 + i] * x[j] - S(delta(i, j))) * inv;
      w(i + 3, j) = (S(delta(i, j)) - fg * x[i] * x[3 + j]) * inv;
      if (i == j) continue;
      const std::size_t k = 3 - i - j;
      w(i, j) = f * x[k] * S(levi(i, j, k)) * inv;
      w(i + 3, j + 3) = g * x[3 + k] * S(levi(i, j, k)) * inv;
    }
  }
}

void require_six(const PhasePoint& x) {
  if (x.dim() != 6) throw ShapeMismatch("monopole forms live on R^6, got dimension " + std::to_string(x.dim()));
}

void require_admissible(const MonopoleParams& prm, const PhasePoint& x) {
  require_six(x);
  const SingularityReport r = singularity_guard(prm, x);
  if (!r.admissible) throw DomainViolation(r.describe());
}

DomainGuard guard_for(const MonopoleParams& prm) {
  return [prm](const PhasePoint& x) -> std::optional<std::string> {
    if (x.dim() != 6) return "monopole forms live on R^6";
    const SingularityReport r = singularity_guard(prm, x);
    if (r.admissible) return std::nullopt;
    return r.describe();
  };
}

std::vector<double> as_vector(const PhasePoint& x) {
  return std::vector<double>(x.coords().data(), x.coords().data() + x.coords().size());
}

double norm3(const std::array<double, 3>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

void require_q_nonzero(const std::array<double, 3>& q) {
  if (!(norm3(q) > 0.0)) throw DomainViolation("q = 0 is the monopole singularity");
}

// f(q) and g(p) as jets in their three arguments, for printed formulas
// that need d_{q1} f, d_{q1} d_{q1} f and d_{p_k} g.
struct FgJets {
  Jet2 f;
  Jet2 g;
};

FgJets fg_jets(const MonopoleParams& prm, const PhasePoint& x) {
  const auto q = seed_coordinates(std::vector<double>{x[0], x[1], x[2]});
  const auto p = seed_coordinates(std::vector<double>{x[3], x[4], x[5]});
  Jet2 f = f_generic(prm, q[0], q[1], q[2]);
  Jet2 g = g_generic(prm, p[0], p[1], p[2]);
  if (f.is_constant()) f = Jet2(f.value(), 3);
  if (g.is_constant()) g = Jet2(g.value(), 3);
  return {f, g};
}

}  // namespace

MonopoleParams MonopoleParams::without_g() const {
  MonopoleParams out = *this;
  out.g_mode = GMode::Zero;
  return out;
}

double f_value(const MonopoleParams& params, const std::array<double, 3>& q) {
  return f_generic(params, q[0], q[1], q[2]);
}

double g_value(const MonopoleParams& params, const std::array<double, 3>& p) {
  return g_generic(params, p[0], p[1], p[2]);
}

std::string SingularityReport::describe() const {
  std::ostringstream out;
  out << "singularity report: near_q_origin=" << (near_q_origin ? "true" : "false")
      << " near_p_origin=" << (near_p_origin ? "true" : "false") << " denom=" << denom_value
      << " admissible=" << (admissible ? "true" : "false");
  return out.str();
}

SingularityReport singularity_guard(const MonopoleParams& params, const PhasePoint& x) {
  SingularityReport r;
  if (x.dim() != 6) {
    r.admissible = false;
    return r;
  }
  const std::array<double, 3> q{x[0], x[1], x[2]};
  const std::array<double, 3> p{x[3], x[4], x[5]};
  const double d = params.margin;
  r.near_q_origin = norm3(q) < d;
  r.near_p_origin = norm3(p) < d;
  const bool f_singular = r.near_q_origin && params.f_mode == FMode::Monopole;
  const bool g_singular = r.near_p_origin && params.g_mode == GMode::Monopole;
  if (!f_singular && !g_singular) {
    const double qp = q[0] * p[0] + q[1] * p[1] + q[2] * p[2];
    r.denom_value = 1.0 - f_value(params, q) * g_value(params, p) * qp;
  } else {
    r.denom_value = std::nan("");
  }
  r.admissible = !f_singular && !g_singular && std::abs(r.denom_value) >= d;
  return r;
}

Matrix omega_upper_eq4(const MonopoleParams& params, const PhasePoint& x) {
  require_admissible(params, x);
  Matrix w = Matrix::Zero(6, 6);
  fill_upper(params, as_vector(x), w);
  return w;
}

Matrix omega_lower_eq6(const MonopoleParams& params, const PhasePoint& x) {
  require_admissible(params, x);
  Matrix w = Matrix::Zero(6, 6);
  fill_lower(params, as_vector(x), w);
  return w;
}

Matrix omega_form7(const MonopoleParams& params, const PhasePoint& x) {
  const MonopoleParams prm = params.without_g();
  require_admissible(prm, x);
  const auto v = as_vector(x);
  const double f = f_value(prm, {v[0], v[1], v[2]});
  Matrix w = Matrix::Zero(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    w(i, i + 3) = -1.0;
    w(i + 3, i) = 1.0;
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) w(i, j) = f * levi(i, j, 3 - i - j) * v[3 - i - j];
  }
  return w;
}

TwoFormField form4_field(const MonopoleParams& params) {
  return TwoFormField(
      6,
      [params](const Vector& x) {
        Matrix up = Matrix::Zero(6, 6);
        fill_upper(params, std::vector<double>(x.data(), x.data() + x.size()), up);
        return Matrix(up.inverse());
      },
      [params](const std::vector<Jet2>& x) {
        JetMatrix up(6);
        for (std::size_t i = 0; i < 6; ++i)
          for (std::size_t j = 0; j < 6; ++j) up(i, j) = Jet2(0.0, x[0].dim());
        fill_upper(params, x, up);
        return invert(up);
      },
      guard_for(params), "form4");
}

TwoFormField form6_field(const MonopoleParams& params) {
  return TwoFormField::from_generic(
      6, [params](const auto& x, auto& w) { fill_lower(params, x, w); }, guard_for(params), "form6");
}

TwoFormField form7_field(const MonopoleParams& params) {
  const MonopoleParams prm = params.without_g();
  return TwoFormField::from_generic(
      6,
      [prm](const auto& x, auto& w) {
        using S = std::decay_t<decltype(x[0])>;
        const S f = f_generic(prm, x[0], x[1], x[2]);
        for (std::size_t i = 0; i < 3; ++i) {
          w(i, i + 3) = S(-1.0);
          w(i + 3, i) = S(1.0);
          for (std::size_t j = 0; j < 3; ++j)
            if (i != j) w(i, j) = f * x[3 - i - j] * S(levi(i, j, 3 - i - j));
        }
      },
      guard_for(prm), "form7");
}

TwoFormField standard_field(std::size_t n) {
  if (n == 0) throw ShapeMismatch("standard form needs n >= 1");
  return TwoFormField::from_generic(
      2 * n,
      [n](const auto& x, auto& w) {
        using S = std::decay_t<decltype(x[0])>;
        for (std::size_t i = 0; i < n; ++i) {
          w(i, n + i) = S(-1.0);
          w(n + i, i) = S(1.0);
        }
      },
      {}, "standard");
}

bool is_monopole_model(const std::string& name) { return name == "form4" || name == "form6" || name == "form7"; }

TwoFormField make_model(const std::string& name, const MonopoleParams& params, std::size_t n) {
  if (name == "standard") return standard_field(n);
  if (name == "form4") return form4_field(params);
  if (name == "form6") return form6_field(params);
  if (name == "form7") return form7_field(params);
  throw std::invalid_argument("unknown model '" + name + "' (expected standard, form4, form6 or form7)");
}

TensorBlock reference_connection_eq41(const std::array<double, 3>& q, double lambda, bool complete_antisymmetry) {
  require_q_nonzero(q);
  const double r2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
  const double scale = lambda / std::pow(r2, 2.5);
  TensorBlock t = TensorBlock::lower(3, 6, "Gamma_{i,jk} (closed form)");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        double v = levi(i, j, k) * (2 * q[i] * q[i] - q[j] * q[j] - q[k] * q[k]);
        for (std::size_t r = 0; r < 3; ++r) {
          v += delta(i, j) * levi(r, i, k) * q[r] * q[i];
          if (complete_antisymmetry) v -= delta(i, k) * levi(r, i, j) * q[r] * q[i];
        }
        t(i, j, k) = scale * v;
      }
  return t;
}

TensorBlock reference_curvature_eq42(const std::array<double, 3>& q, double lambda) {
  require_q_nonzero(q);
  const double r2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
  const double scale = lambda / std::pow(r2, 3.5);
  auto sq = [&](std::size_t a) { return q[a] * q[a]; };
  auto t1 = [&](std::size_t i, std::size_t s, std::size_t k, std::size_t l) {
    double e = 0.0;
    for (std::size_t r = 0; r < 3; ++r) e += levi(l, k, r) * q[r];
    return 15.0 * delta(i, l) * delta(s, k) * e * q[l] * q[k];
  };
  auto t3 = [&](std::size_t i, std::size_t s, std::size_t k, std::size_t l) {
    double v = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
      v += levi(r, l, k) * q[r] * delta(i, s) * delta(s, k) * (4 * sq(s) - sq(r) - sq(l));
    return 3.0 * v;
  };
  auto t4 = [&](std::size_t i, std::size_t s, std::size_t k, std::size_t l) {
    return 3.0 * levi(i, l, k) * (delta(s, k) + delta(s, l)) * q[s] * (4 * sq(i) - sq(l) - sq(k));
  };
  TensorBlock t({Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower}, 6,
                "R^{i+3}_{skl} (closed form)");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          double v = t1(i, s, k, l) + t1(s, i, k, l);
          v += 3.0 * delta(i, s) * levi(s, k, l) * q[s] * (-2 * sq(s) + 3 * sq(k) + 3 * sq(l));
          v += t3(i, s, k, l) + t3(i, s, l, k);
          v += t4(i, s, k, l) + t4(s, i, k, l);
          t(i + 3, s, k, l) = scale * v;
        }
  return t;
}

double reference_R1112_eq27(const MonopoleParams& params, const PhasePoint& x) {
  require_admissible(params, x);
  const FgJets j = fg_jets(params, x);
  const double f = j.f.value();
  const double g = j.g.value();
  const double f1 = j.f.d(0);
  const double f11 = j.f.dd(0, 0);
  const double qp = x[0] * x[3] + x[1] * x[4] + x[2] * x[5];
  const double p1 = x[3];
  const double den = 1.0 - f * g * qp;
  return x[2] * (f11 * den + 2 * f1 * f1 * g * qp + 3 * f1 * f * g * p1 + f * f * f * g * g * p1 * p1) /
         (den * den * den);
}

double reference_R11_eq39(const MonopoleParams& params, const PhasePoint& x) {
  require_admissible(params, x);
  const FgJets j = fg_jets(params, x);
  const double f = j.f.value();
  const double g = j.g.value();
  const double f1 = j.f.d(0);
  const double f11 = j.f.dd(0, 0);
  const double g2 = j.g.d(1);
  const double g3 = j.g.d(2);
  const double q1 = x[0], q2 = x[1], q3 = x[2], p1 = x[3], p2 = x[4], p3 = x[5];
  const double qp = q1 * p1 + q2 * p2 + q3 * p3;
  const double den = 1.0 - f * g * qp;
  const double first = -g * f11 * qp / den;
  const double second = -g * (f1 * (f1 * g * qp * qp + 2 * p1) + f * f * g * p1 * p1) / (den * den);
  const double third = f * (q2 * g3 - q3 * g2) *
                       (f1 * (p1 * q1 - p2 * q2 - p3 * q3) - f * p1 * (1 + 2 * f * g * (p2 * q2 + p3 * q3))) /
                       (4 * den * den);
  return first + second + third;
}

double reference_R11_eq40(const PhasePoint& x) {
  require_six(x);
  const double q2 = x[1], p2 = x[4];
  return 3.0 / (q2 * q2 * (1.0 - q2 * q2 * p2 * p2));
}

}  // namespace fedosov::monopole
