// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "config.hpp"
#include "fedosov/constrained.hpp"
#include "fedosov/dynamics.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/monopole.hpp"
#include "fedosov/trajectory_io.hpp"
#include "json.hpp"
#include "verify_suite.hpp"

namespace fedosov::cli {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json(const TensorBlock& t) {
  ordered_json j;
  j["label"] = t.label();
  ordered_json sig = ordered_json::array();
  for (auto v : t.signature()) sig.push_back(to_string(v));
  j["signature"] = std::move(sig);
  j["extent"] = t.extent();
  j["nonzero"] = count_nonzero(t, 1e-12);
  j["data"] = std::vector<double>(t.data().begin(), t.data().end());
  return j;
}

ordered_json to_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

monopole::MonopoleParams effective_params(const RunConfig& c) {
  return c.model == "form7" ? c.params.without_g() : c.params;
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
}

// Checks the coordinate count and, for monopole models, the singular sets.
// Returns a non-zero exit code after printing the reason.
int check_point(const RunConfig& c, const std::vector<double>& coords, const char* what, std::ostream& err) {
  if (coords.empty()) throw UsageError(std::string("--") + what + " is required");
  if (monopole::is_monopole_model(c.model)) {
    if (coords.size() != 6) {
      throw UsageError(std::string("--") + what + " needs 6 coordinates for model " + c.model + ", got " +
                       std::to_string(coords.size()));
    }
    const PhasePoint x(Eigen::Map<const Vector>(coords.data(), 6));
    const auto report = monopole::singularity_guard(effective_params(c), x);
    if (!report.admissible) {
      err << "inadmissible " << what << ": " << report.describe() << '\n';
      return kDomain;
    }
  } else if (coords.size() < 2 || coords.size() % 2 != 0) {
    throw UsageError(std::string("--") + what + " needs an even, positive number of coordinates");
  }
  return kOk;
}

PhasePoint to_point(const std::vector<double>& v) {
  return PhasePoint(Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())));
}

TwoFormField model_field(const RunConfig& c, std::size_t dim) {
  return monopole::make_model(c.model, c.params, dim / 2);
}

int cmd_tensors(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (int code = check_point(c, c.point, "point", err)) return code;
  const PhasePoint x = to_point(c.point);
  const TwoFormField field = model_field(c, x.dim());
  const FormSample s = sample_form(field, x);
  const ConnectionJet cj = connection_jet(s);
  const Curvature r = curvature(cj, s.omega);
  const TensorBlock t = torsion(cj.gamma.raised);
  const TensorBlock dw = d_omega(s);
  const Matrix ric = ricci(r);
  const double scalar = scalar_curvature(ric, s.inverse);

  ordered_json summary;
  summary["model"] = c.model;
  summary["point"] = c.point;
  summary["rcond"] = s.rcond;
  summary["nonzero"] = {{"d_omega", count_nonzero(dw, 1e-12)},
                        {"connection_lowered", count_nonzero(cj.gamma.lowered, 1e-12)},
                        {"connection_raised", count_nonzero(cj.gamma.raised, 1e-12)},
                        {"torsion", count_nonzero(t, 1e-12)},
                        {"curvature_mixed", count_nonzero(r.mixed, 1e-12)},
                        {"curvature_lowered", count_nonzero(r.lowered, 1e-12)}};
  summary["ricci_max_abs"] = ric.cwiseAbs().maxCoeff();
  summary["scalar_curvature"] = scalar;

  if (c.model == "form6" || c.model == "form4") {
    const auto prm = effective_params(c);
    ordered_json r11;
    r11["machinery"] = ric(0, 0);
    r11["closed_form"] = ricci_diagonal_closed_form(s, 0);
    r11["printed_four_term"] = ricci_diagonal_printed(s, 0);
    if (prm.f_mode == monopole::FMode::Monopole && prm.g_mode == monopole::GMode::Monopole) {
      r11["printed_final"] = monopole::reference_R11_eq39(prm, x);
      r11["printed_slice"] = monopole::reference_R11_eq40(x);
      summary["R1112"] = {{"machinery", r.lowered(0, 0, 0, 1)},
                          {"printed", monopole::reference_R1112_eq27(prm, x)}};
    }
    summary["R11"] = std::move(r11);
  }
  if (c.model == "form7" && c.params.f_mode == monopole::FMode::Monopole) {
    const std::array<double, 3> q{x[0], x[1], x[2]};
    const TensorBlock g41 = monopole::reference_connection_eq41(q, c.params.lambda);
    const TensorBlock r42 = monopole::reference_curvature_eq42(q, c.params.lambda);
    TensorBlock mach42 = r.mixed;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
          for (std::size_t d = 0; d < 6; ++d) mach42(i, a, b, d) = 0.0;
    summary["closed_forms"] = {
        {"connection_nonzero", count_nonzero(g41, 1e-12)},
        {"connection_max_diff", max_abs_difference(g41, cj.gamma.lowered)},
        {"curvature_nonzero", count_nonzero(r42, 1e-12)},
        {"curvature_max_diff", max_abs_difference(r42, mach42)},
    };
  }
  out << summary.dump(2) << '\n';

  if (!c.out.empty()) {
    ordered_json full = summary;
    full["omega"] = to_json(s.omega);
    full["omega_inverse"] = to_json(s.inverse);
    full["d_omega"] = to_json(dw);
    full["connection_lowered"] = to_json(cj.gamma.lowered);
    full["connection_raised"] = to_json(cj.gamma.raised);
    full["torsion"] = to_json(t);
    full["curvature_mixed"] = to_json(r.mixed);
    full["curvature_lowered"] = to_json(r.lowered);
    full["ricci"] = to_json(ric);
    write_json_file(c.out, full);
  }
  return kOk;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (int code = check_point(c, c.state, "state", err)) return code;
  const PhasePoint x0 = to_point(c.state);
  const TwoFormField field = model_field(c, x0.dim());
  const ScalarField h = make_hamiltonian(c.hamiltonian, x0.n());
  IntegratorConfig ic = c.integrator;
  ic.guard_policy = GuardPolicy::Stop;
  Trajectory traj = integrate(field, h, x0, ic);
  for (auto& [name, series] : conserved_diagnostics(traj, h, c.params.lambda)) traj.diagnostics[name] = series;
  if (!c.out.empty()) write_trajectory_file(c.out, traj, c.format);

  ordered_json summary;
  summary["model"] = c.model;
  summary["hamiltonian"] = c.hamiltonian;
  summary["method"] = to_string(c.integrator.method);
  summary["status"] = traj.status == RunStatus::Completed ? "completed" : "singular";
  summary["steps"] = traj.steps;
  summary["t_final"] = traj.times.back();
  summary["final_state"] = to_json(traj.back().coords());
  ordered_json drift;
  for (const char* ch : {"H_drift", "speed_drift", "J_drift", "cone_drift"})
    if (traj.diagnostics.count(ch)) drift[ch] = max_of(traj.diagnostics, ch);
  summary["max_drift"] = std::move(drift);
  if (!c.out.empty()) summary["output"] = c.out;
  out << summary.dump(2) << '\n';
  if (traj.status != RunStatus::Completed) {
    err << "flow stopped at t = " << traj.times.back() << ": " << traj.message << '\n';
    return kSingular;
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& /*err*/) {
  SuiteOptions opts;
  opts.seed = c.seed;
  const auto results = run_verify_suite(opts);
  ordered_json report;
  report["suite"] = "fedosov-properties";
  report["seed"] = c.seed;
  ordered_json list = ordered_json::array();
  for (const auto& r : results) {
    list.push_back({{"id", r.id},
                    {"tolerance", r.tolerance},
                    {"observed", r.observed},
                    {"pass", r.pass},
                    {"informational", r.informational}});
  }
  report["results"] = std::move(list);
  out << report.dump(2) << '\n';
  if (!c.out.empty()) write_json_file(c.out, report);
  return suite_passed(results) ? kOk : kVerifyFailed;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RunConfig cc = c;
  cc.model = "form7";
  if (int code = check_point(cc, c.state, "state", err)) return code;
  const PhasePoint x0 = to_point(c.state);
  const auto prm = c.params.without_g();
  const TwoFormField f7 = monopole::form7_field(prm);
  const ScalarField h = free_particle_hamiltonian(3);
  IntegratorConfig ic = c.integrator;
  ic.guard_policy = GuardPolicy::Stop;
  const Trajectory ref = integrate(f7, h, x0, ic);
  bool halted = ref.status != RunStatus::Completed;

  const std::array<double, 3> q{x0[0], x0[1], x0[2]};
  const std::array<double, 3> p{x0[3], x0[4], x0[5]};
  ordered_json branches = ordered_json::array();
  struct Case {
    constrained::Variant variant;
    constrained::Branch branch;
  };
  for (const Case k : {Case{constrained::Variant::A, constrained::Branch::Plus},
                       Case{constrained::Variant::B, constrained::Branch::Plus},
                       Case{constrained::Variant::B, constrained::Branch::Minus}}) {
    const constrained::ConstrainedSystem sys{k.variant, prm};
    const auto run = constrained::integrate_constrained(sys, constrained::on_surface_state(q, p, k.branch), ic,
                                                        constrained::DriftPolicy::Monitor);
    double div = 0.0;
    const std::size_t m = std::min(ref.size(), run.physical.size());
    for (std::size_t i = 0; i < m; ++i)
      div = std::max(div, (ref.states[i].coords() - run.physical.states[i].coords()).cwiseAbs().maxCoeff());
    halted = halted || run.full.status != RunStatus::Completed;
    branches.push_back({{"variant", to_string(k.variant)},
                        {"branch", to_string(k.branch)},
                        {"status", run.full.status == RunStatus::Completed ? "completed" : "singular"},
                        {"max_divergence", div},
                        {"max_constraint_residual", max_of(run.full.diagnostics, "constraint_residual")}});
  }
  ordered_json report;
  report["state"] = c.state;
  report["t_end"] = c.integrator.t_end;
  report["method"] = to_string(c.integrator.method);
  report["reference_status"] = ref.status == RunStatus::Completed ? "completed" : "singular";
  report["branches"] = std::move(branches);
  out << report.dump(2) << '\n';
  if (!c.out.empty()) write_json_file(c.out, report);
  if (halted) {
    err << "a branch stopped at a singular set\n";
    return kSingular;
  }
  return kOk;
}

void add_common_options(CLI::App& sub, Overrides& o) {
  sub.add_option("--config", o.config_path, "JSON config file; flags override its values");
  sub.add_option("--model", o.model, "standard | form4 | form6 | form7");
  sub.add_option("--lambda", o.lambda, "coupling in f = lambda |q|^-3");
  sub.add_option("--alpha", o.alpha, "constant f (switches f to constant mode)");
  sub.add_option("--beta", o.beta, "constant g (switches g to constant mode)");
  sub.add_option("--f-mode", o.f_mode, "monopole | constant");
  sub.add_option("--g-mode", o.g_mode, "zero | constant | monopole");
  sub.add_option("--hamiltonian", o.hamiltonian, "free | oscillator");
  sub.add_option("--point", o.point, "comma-separated phase point (q..., p...)");
  sub.add_option("--state", o.state, "comma-separated initial state (q..., p...)");
  sub.add_option("--t-end", o.t_end, "integration end time");
  sub.add_option("--step", o.step, "rk4 step, or initial rk45 step");
  sub.add_option("--tolerance", o.tolerance, "rk45 tolerance");
  sub.add_option("--method", o.method, "rk4 | rk45");
  sub.add_option("--out", o.out, "output path");
  sub.add_option("--format", o.format, "jsonl | csv");
  sub.add_option("--seed", o.seed, "seed for randomized checks");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian mechanics with non-closed 2-forms", "fedosov"};
  app.require_subcommand(1, 1);
  Overrides o;
  std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> handlers = {
      {"tensors", cmd_tensors}, {"simulate", cmd_simulate}, {"verify", cmd_verify}, {"compare", cmd_compare}};
  add_common_options(*app.add_subcommand("tensors", "connection, torsion and curvature at a point"), o);
  add_common_options(*app.add_subcommand("simulate", "integrate a flow and write the trajectory"), o);
  add_common_options(*app.add_subcommand("verify", "run the property suite and print a JSON report"), o);
  add_common_options(*app.add_subcommand("compare", "form7 flow against the constrained 12-dim systems"), o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const RunConfig config = resolve_config(o);
    return handlers.at(name)(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const DomainViolation& e) {
    err << "inadmissible point: " << e.what() << '\n';
    return kDomain;
  } catch (const SingularForm& e) {
    err << "singular form: " << e.what() << '\n';
    return kDomain;
  } catch (const StepFailure& e) {
    err << "integration failed: " << e.what() << '\n';
    return kSingular;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fedosov::cli
