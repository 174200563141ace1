#include "halfwave/runner.hpp"

#include <cmath>
#include <filesystem>

#include "json.hpp"

#include "halfwave/analysis.hpp"
#include "halfwave/dynamics.hpp"
#include "halfwave/initial_data.hpp"
#include "halfwave/io.hpp"
#include "halfwave/lattice.hpp"
#include "halfwave/trigpoly.hpp"
#include "halfwave/util.hpp"

namespace halfwave::run {

using nlohmann::json;

namespace {

json json_head(const char* schema, const std::string& hash) {
  return {{"tool", "halfwave"}, {"version", kVersion}, {"schema", schema}, {"config", hash}};
}

}  // namespace

std::vector<std::string> run(const cfg::Config& c, std::ostream& out) {
  namespace fs = std::filesystem;
  fs::create_directories(c.output.dir);
  const std::string hash = cfg::config_hash(c);
  const bool as_json = c.output.format == "json";

  std::vector<std::string> written;
  auto emit_file = [&](const std::string& name, const std::string& body) {
    std::string p = (fs::path(c.output.dir) / name).string();
    io::write_file(p, body);
    written.push_back(p);
  };
  emit_file("config.json", cfg::emit(c));

  switch (c.scenario) {
    case cfg::Scenario::Spectrum: {
      lattice::Geometry g(c.N);
      if (as_json) {
        json j = json_head("spectrum-v1", hash);
        j["N"] = c.N;
        json ks = json::array(), mus = json::array();
        for (long k = -g.n; k <= g.n; ++k) {
          ks.push_back(k);
          mus.push_back(lattice::mu(k, c.N));
        }
        j["k"] = ks;
        j["mu"] = mus;
        emit_file("spectrum.json", j.dump(2) + "\n");
      } else {
        emit_file("spectrum.csv", io::spectrum_csv(c.N, hash));
      }
      out << "spectrum: N=" << c.N << " mu_max=" << io::format_double(lattice::mu(g.n, c.N))
          << "\n";
      break;
    }

    case cfg::Scenario::Simulate: {
      dynamics::Trajectory traj = dynamics::integrate(data::make_initial(c.init, c.N), c.flow);
      emit_file("trajectory.csv", io::trajectory_csv(traj, hash));
      emit_file("diagnostics.json", io::diagnostics_json(traj, hash));
      spectral::TrigPoly final = spectral::interpolate(traj.states.back());
      emit_file("final_coeffs.csv", io::coeffs_csv(spectral::CoeffSeq::from(final), hash));
      const auto& d0 = traj.diag.front();
      const auto& d1 = traj.diag.back();
      double edrift = std::abs(d1.energy - d0.energy) / std::max(std::abs(d0.energy), 1e-300);
      Vec3 sdrift = d1.total_spin - d0.total_spin;
      out << "simulate: N=" << c.N << " t=" << io::format_double(d1.t)
          << " energy_drift=" << io::format_double(edrift)
          << " spin_drift=" << io::format_double(norm(sdrift))
          << " sphere_dev=" << io::format_double(d1.sphere_dev) << "\n";
      break;
    }

    case cfg::Scenario::Converge: {
      analysis::ConvOptions o;
      o.T = c.analysis.T;
      o.n_records = c.analysis.n_records;
      o.eps = c.flow.eps;
      o.project = c.analysis.project;
      analysis::ConvTable table =
          analysis::convergence_study(c.init, c.N_list, {true, c.N_ref}, o, c.threads);
      if (as_json) {
        json j = json_head("convergence-v1", hash);
        j["slope"] = table.slope;
        j["T_used"] = table.T_used;
        j["horizon"] = table.horizon;
        j["N_ref"] = table.N_ref;
        j["dt_ref"] = table.dt_ref;
        json rows = json::array();
        for (const auto& r : table.rows)
          rows.push_back({{"N", r.N}, {"sup_err", r.sup_err}, {"dt", r.dt}});
        j["rows"] = rows;
        emit_file("convergence.json", j.dump(2) + "\n");
      } else {
        emit_file("convergence.csv", io::conv_table_csv(table, hash));
      }
      out << "converge: slope=" << io::format_double(table.slope)
          << " T_used=" << io::format_double(table.T_used) << " N_ref=" << table.N_ref << "\n";
      break;
    }

    case cfg::Scenario::Viscosity: {
      lattice::Spins S0 = data::make_initial(c.init, c.N);
      dynamics::ViscousIdentity v = dynamics::viscous_identity_check(S0.f, c.flow.eps);
      json j = json_head("viscosity-v1", hash);
      j["N"] = c.N;
      j["eps"] = c.flow.eps;
      j["lhs"] = v.lhs;
      j["rhs"] = v.rhs;
      j["rhs_leibniz"] = v.rhs_leibniz;
      j["top_term"] = v.top_term;
      j["residual"] = v.residual;
      j["leibniz_gap"] = v.leibniz_gap;
      j["rel_residual"] = v.residual / v.scale;
      emit_file("viscosity.json", j.dump(2) + "\n");
      out << "viscosity: N=" << c.N << " eps=" << io::format_double(c.flow.eps)
          << " rel_residual=" << io::format_double(v.residual / v.scale) << "\n";
      break;
    }

    case cfg::Scenario::ErrorSweep: {
      analysis::SweepOptions o;
      o.T = c.analysis.T;
      o.n_records = c.analysis.n_records;
      o.eps_exponent = c.analysis.eps_exponent;
      o.project = c.analysis.project;
      analysis::ErrorSweep sweep = analysis::error_norm_sweep(c.init, c.N_list, o, c.threads);
      if (as_json) {
        json j = json_head("errorsweep-v1", hash);
        j["eps"] = sweep.eps;
        j["bounded"] = sweep.bounded;
        j["decaying"] = sweep.decaying;
        json rows = json::array();
        for (const auto& r : sweep.rows)
          rows.push_back({{"N", r.N},
                          {"sup_norm", r.sup_norm},
                          {"t_at_sup", r.t_at_sup},
                          {"initial_norm", r.initial_norm}});
        j["rows"] = rows;
        emit_file("errorsweep.json", j.dump(2) + "\n");
      } else {
        emit_file("errorsweep.csv", io::sweep_csv(sweep, hash));
      }
      out << "errorsweep: first_sup=" << io::format_double(sweep.rows.front().sup_norm)
          << " last_sup=" << io::format_double(sweep.rows.back().sup_norm)
          << (sweep.decaying ? " decaying" : " not-decaying") << "\n";
      break;
    }

    case cfg::Scenario::WeakTest: {
      dynamics::Trajectory traj = dynamics::integrate(data::make_initial(c.init, c.N), c.flow);
      auto fns = analysis::default_test_functions(c.analysis.n_test_functions);
      analysis::WeakReport rep = analysis::weak_residual(traj, fns);
      double overall = 0;
      for (double g : rep.sup_gap) overall = std::max(overall, g);
      json j = json_head("weaktest-v1", hash);
      j["N"] = c.N;
      j["fn_names"] = rep.fn_names;
      j["times"] = rep.times;
      j["gap"] = rep.gap;
      j["sup_gap"] = rep.sup_gap;
      j["overall_sup"] = overall;
      emit_file("weak.json", j.dump(2) + "\n");
      out << "weaktest: N=" << c.N << " fns=" << rep.fn_names.size()
          << " overall_sup=" << io::format_double(overall) << "\n";
      break;
    }
  }
  return written;
}

}  // namespace halfwave::run
