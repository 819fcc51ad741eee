// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one [PASS]/[FAIL] line per criterion.
//   fedosov_acceptance                 run every criterion
//   fedosov_acceptance --criterion N   run criterion N only

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fedosov/constrained.hpp"
#include "fedosov/dynamics.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/monopole.hpp"
#include "fedosov/random_fields.hpp"

using namespace fedosov;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double scaled(double v, double mag) { return v / std::max(1.0, mag); }

struct Ensemble {
  std::vector<TwoFormField> forms;
  std::vector<std::vector<PhasePoint>> points;
};

Ensemble ensemble(std::size_t points_per_form) {
  std::mt19937_64 rng(20240611);
  Ensemble e;
  const std::size_t dims[] = {2, 4, 6};
  for (std::size_t k = 0; k < 100; ++k) {
    PolynomialTwoForm form(dims[k % 3], rng);
    e.forms.push_back(form.field());
    std::vector<PhasePoint> pts;
    for (std::size_t j = 0; j < points_per_form; ++j) pts.push_back(random_point(form.dim(), rng));
    e.points.push_back(std::move(pts));
  }
  return e;
}

template <class F>
void each_sample(const Ensemble& e, F f) {
  for (std::size_t k = 0; k < e.forms.size(); ++k)
    for (const auto& x : e.points[k]) f(e.forms[k], x);
}

PhasePoint monopole_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const monopole::MonopoleParams prm;
  for (;;) {
    Vector x(6);
    for (int i = 0; i < 6; ++i) x[i] = u(rng);
    const PhasePoint pt(x);
    const auto r = monopole::singularity_guard(prm, pt);
    if (r.admissible && std::abs(r.denom_value) > 0.2 && x.head(3).norm() > 0.3 && x.tail(3).norm() > 0.3) return pt;
  }
}

Outcome criterion1() {
  double worst = 0.0;
  std::size_t n = 0;
  each_sample(ensemble(10), [&](const TwoFormField& w, const PhasePoint& x) {
    const FormSample s = sample_form(w, x);
    const Matrix ric = ricci(curvature(connection_jet(s), s.omega));
    worst = std::max(worst, scaled(std::abs(scalar_curvature(ric, s.inverse)), ric.cwiseAbs().maxCoeff()));
    ++n;
  });
  return {worst < 1e-9, "scalar curvature over " + std::to_string(n) + " samples, max " + fmt("%.3e", worst) +
                            " (< 1e-9)"};
}

Outcome criterion2() {
  double nabla = 0.0, skew = 0.0;
  each_sample(ensemble(1), [&](const TwoFormField& w, const PhasePoint& x) {
    const FormSample s = sample_form(w, x);
    const Connection c = skew_connection(s);
    nabla = std::max(nabla, nabla_omega_residual(s, c.lowered).max_abs());
    const std::size_t n = s.dim();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v) skew = std::max(skew, std::abs(c.lowered(k, m, v) + c.lowered(k, v, m)));
  });
  return {nabla < 1e-10 && skew == 0.0,
          "nabla omega residual " + fmt("%.3e", nabla) + " (< 1e-10), connection antisymmetry " + fmt("%.1e", skew) +
              " (exact)"};
}

Outcome criterion3() {
  double kl = 0.0, jq = 0.0, tr = 0.0;
  each_sample(ensemble(1), [&](const TwoFormField& w, const PhasePoint& x) {
    const Curvature r = curvature(w, x);
    const std::size_t n = r.mixed.extent();
    const double mag = r.lowered.max_abs();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            kl = std::max(kl, scaled(std::abs(r.lowered(a, b, c, d) + r.lowered(a, b, d, c)), mag));
            jq = std::max(jq, scaled(std::abs(r.lowered(a, b, c, d) - r.lowered(b, a, c, d)), mag));
          }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i) t += r.mixed(i, i, k, l);
        tr = std::max(tr, scaled(std::abs(t), r.mixed.max_abs()));
      }
  });
  const double worst = std::max({kl, jq, tr});
  return {worst < 1e-10, "R_jqkl+R_jqlk " + fmt("%.2e", kl) + ", R_jqkl-R_qjkl " + fmt("%.2e", jq) + ", trace " +
                             fmt("%.2e", tr) + " (< 1e-10)"};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  const monopole::MonopoleParams prm;
  const TwoFormField forms[] = {monopole::form4_field(prm), monopole::form6_field(prm), monopole::form7_field(prm)};
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const PhasePoint x = monopole_point(rng);
    const VectorField a = random_quadratic_vector_field(6, rng);
    for (const auto& w : forms)
      worst = std::max(worst, scaled(commutator_check(w, a, x).max_abs(), curvature(w, x).mixed.max_abs()));
  }
  return {worst < 1e-8, "commutator residual on three monopole forms, max " + fmt("%.3e", worst) + " (< 1e-8)"};
}

Outcome criterion5() {
  double worst = 0.0;
  std::size_t non_closed = 0, n = 0;
  each_sample(ensemble(1), [&](const TwoFormField& w, const PhasePoint& x) {
    const FormSample s = sample_form(w, x);
    const TensorBlock dw = d_omega(s);
    const TensorBlock t = torsion(skew_connection(s).raised);
    worst = std::max(worst, max_abs_difference(cyclic_torsion_sum(lower_torsion(t, s.omega)), dw));
    if (dw.max_abs() > 1e-6) ++non_closed;
    ++n;
  });
  return {worst < 1e-10 && non_closed > 0, "cyclic torsion sum vs d omega, max " + fmt("%.3e", worst) +
                                               " (< 1e-10); " + std::to_string(non_closed) + "/" +
                                               std::to_string(n) + " members not closed"};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const auto w = monopole::form7_field(monopole::MonopoleParams{});
  std::size_t bad_counts = 0;
  double ric = 0.0;
  for (int k = 0; k < 20; ++k) {
    Vector x(6);
    do {
      for (int i = 0; i < 6; ++i) x[i] = u(rng);
    } while (x.head(3).norm() < 0.3);
    const PhasePoint pt(x);
    const FormSample s = sample_form(w, pt);
    const ConnectionJet cj = connection_jet(s);
    const Curvature r = curvature(cj, s.omega);
    if (count_nonzero(cj.gamma.lowered, 1e-12) != 18 || count_nonzero(r.mixed, 1e-12) != 54) ++bad_counts;
    ric = std::max(ric, ricci(r).cwiseAbs().maxCoeff());
  }
  return {bad_counts == 0 && ric < 1e-10, "20 points: " + std::to_string(20 - bad_counts) +
                                              " with 18 connection / 54 curvature entries; Ricci max " +
                                              fmt("%.3e", ric) + " (< 1e-10)"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  const monopole::MonopoleParams prm;
  const auto w = monopole::form6_field(prm);
  double worst = 0.0, printed = 0.0;
  for (int k = 0; k < 50; ++k) {
    const PhasePoint x = monopole_point(rng);
    const FormSample s = sample_form(w, x);
    const Matrix ric = ricci(curvature(connection_jet(s), s.omega));
    for (std::size_t l = 0; l < 6; ++l) {
      const double r = ric(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l));
      worst = std::max(worst, std::abs(ricci_diagonal_closed_form(s, l) - r) / std::max(1.0, std::abs(r)));
    }
    printed = std::max(printed, std::abs(monopole::reference_R11_eq39(prm, x) - ric(0, 0)) /
                                    std::max(1.0, std::abs(ric(0, 0))));
  }
  const PhasePoint slice{0, 1, 0, 0, 2, 0};
  const double machinery = ricci(w, slice)(0, 0);
  std::printf("  info: printed R11 formula vs machinery at random points, max rel %.3e\n", printed);
  std::printf("  info: slice (0,1,0,0,2,0): machinery R11 %.6f, printed formula %.6f, printed value %.6f\n", machinery,
              monopole::reference_R11_eq39(prm, slice), monopole::reference_R11_eq40(slice));
  return {worst < 1e-8, "diagonal Ricci closed form vs pipeline at 50 points, max rel " + fmt("%.3e", worst) +
                            " (< 1e-8)"};
}

Outcome criterion8() {
  const auto h = free_particle_hamiltonian(3);
  IntegratorConfig rk4;
  rk4.t_end = 1.0;
  rk4.step = 1e-3;
  const auto free = integrate(monopole::standard_field(3), h, PhasePoint{0, 0, 0, 1, 0, 0}, rk4);
  const double endpoint =
      (free.back().coords() - (Vector(6) << 1, 0, 0, 1, 0, 0).finished()).cwiseAbs().maxCoeff();

  const monopole::MonopoleParams prm;
  IntegratorConfig rk45;
  rk45.method = Method::Rk45;
  rk45.tolerance = 1e-10;
  rk45.step = 1e-2;
  rk45.t_end = 5.0;
  const auto traj = integrate(monopole::form7_field(prm), h, PhasePoint{1, 0, 0, 0, 1, 0}, rk45);
  const auto d = conserved_diagnostics(traj, h, prm.lambda);
  const double dh = max_of(d, "H_drift"), dp = max_of(d, "speed_drift"), dj = max_of(d, "J_drift");

  const auto osc = oscillator_hamiltonian(1);
  const auto std1 = monopole::standard_field(1);
  auto error_at = [&](double step) {
    IntegratorConfig c;
    c.t_end = 2.0;
    c.step = step;
    const auto t = integrate(std1, osc, PhasePoint{1.0, 0.0}, c);
    return std::hypot(t.back()[0] - std::cos(2.0), t.back()[1] + std::sin(2.0));
  };
  const double order = std::log2(error_at(0.1) / error_at(0.05));

  const bool ok = endpoint < 1e-10 && traj.status == RunStatus::Completed && std::abs(traj.times.back() - 5.0) < 1e-12 &&
                  dh < 1e-9 && dp < 1e-8 && dj < 1e-7 && order >= 3.8;
  return {ok, "free endpoint " + fmt("%.1e", endpoint) + "; monopole H " + fmt("%.1e", dh) + ", |p| " +
                  fmt("%.1e", dp) + ", J " + fmt("%.1e", dj) + "; rk4 order " + fmt("%.3f", order)};
}

Outcome criterion9() {
  using namespace constrained;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const monopole::MonopoleParams prm;
  const auto w = monopole::form7_field(prm);
  const auto h = free_particle_hamiltonian(3);
  IntegratorConfig cfg;
  cfg.t_end = 1.0;
  cfg.step = 1e-3;
  double div_a = 0.0, div_b = 0.0, brackets = 0.0;
  for (int k = 0; k < 10; ++k) {
    std::array<double, 3> q{}, p{};
    do {
      for (auto& v : q) v = u(rng);
      for (auto& v : p) v = u(rng);
    } while (std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]) < 0.5);
    const Vector x12 = on_surface_state(q, p, Branch::Plus);
    const Trajectory ref = integrate(w, h, project(x12), cfg);
    auto divergence = [&](const ConstrainedRun& run) {
      double m = 0.0;
      const std::size_t n = std::min(ref.size(), run.physical.size());
      for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, (ref.states[i].coords() - run.physical.states[i].coords()).cwiseAbs().maxCoeff());
      return m;
    };
    const ConstrainedSystem a{Variant::A, prm};
    const ConstrainedSystem b{Variant::B, prm};
    div_a = std::max(div_a, divergence(integrate_constrained(a, x12, cfg, DriftPolicy::Monitor)));
    div_b = std::max(div_b, divergence(integrate_constrained(b, x12, cfg, DriftPolicy::Monitor)));
    Vector off(12);
    for (int i = 0; i < 12; ++i) off[i] = u(rng);
    brackets = std::max(brackets, first_class_check(a, off).phi_phi.cwiseAbs().maxCoeff());
  }
  const bool ok = div_a < 1e-6 && div_b < 1e-6 && brackets < 1e-14;
  return {ok, "max divergence from form7 flow: variant A " + fmt("%.3e", div_a) + ", variant B " + fmt("%.3e", div_b) +
                  " (< 1e-6); variant A constraint brackets " + fmt("%.1e", brackets)};
}

Outcome criterion10() {
  IntegratorConfig rk4;
  rk4.t_end = 1.0;
  rk4.step = 1e-3;
  Vector u = Vector::Zero(6), v = Vector::Zero(6);
  u[1] = 1.0;
  v[2] = 1.0;
  const double closed = two_form_transport(monopole::standard_field(3), free_particle_hamiltonian(3),
                                           PhasePoint{1, 0, 0, 0, 1, 0}, u, v, rk4)
                            .max_drift();
  monopole::MonopoleParams a;
  a.f_mode = monopole::FMode::Constant;
  a.alpha = 1.0;
  const double open =
      two_form_transport(monopole::form7_field(a), free_particle_hamiltonian(3), PhasePoint{1, 0, 0, 0, 1, 0}, u, v, rk4)
          .max_drift();
  return {closed < 1e-8 && open > 1e-3,
          "transport drift: standard " + fmt("%.2e", closed) + " (< 1e-8), form7 with f = 1 " + fmt("%.3e", open) +
              " (> 1e-3)"};
}

const std::vector<std::function<Outcome()>> kCriteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};

bool report(std::size_t id) {
  Outcome o;
  try {
    o = kCriteria[id - 1]();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      const long id = std::strtol(argv[++i], nullptr, 10);
      if (id < 1 || id > static_cast<long>(kCriteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
        return 2;
      }
      ids.push_back(static_cast<std::size_t>(id));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (ids.empty())
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) ids.push_back(i);
  bool all = true;
  for (auto id : ids) all = report(id) && all;
  return all ? 0 : 1;
}
