#include "halfwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "halfwave/lattice.hpp"
#include "halfwave/util.hpp"

namespace halfwave::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << body;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

std::string header(const std::string& schema, const std::string& config_hash) {
  std::string h = "# halfwave " + std::string(kVersion) + "\n# schema: " + schema + "\n";
  if (!config_hash.empty()) h += "# config: " + config_hash + "\n";
  return h;
}

}  // namespace

std::string coeffs_csv(const spectral::CoeffSeq& c, const std::string& config_hash) {
  std::string out = header("coeffs-v1", config_hash) + "component,k,re,im\n";
  for (int comp = 0; comp < 3; ++comp)
    for (const auto& [k, v] : c.m)
      out += std::to_string(comp) + "," + std::to_string(k) + "," +
             format_double(v[comp].real()) + "," + format_double(v[comp].imag()) + "\n";
  return out;
}

spectral::CoeffSeq parse_coeffs_csv(const std::string& body) {
  spectral::CoeffSeq c;
  std::istringstream in(body);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != "component,k,re,im")
        throw std::runtime_error("coeffs csv: unexpected column header: " + line);
      saw_header = true;
      continue;
    }
    int comp;
    long k;
    double re, im;
    if (std::sscanf(line.c_str(), "%d,%ld,%lf,%lf", &comp, &k, &re, &im) != 4)
      throw std::runtime_error("coeffs csv: bad row: " + line);
    if (comp < 0 || comp > 2) throw std::runtime_error("coeffs csv: component out of range");
    Vec3c v{};
    v[comp] = cplx(re, im);
    c.add(k, v);
  }
  if (!saw_header) throw std::runtime_error("coeffs csv: missing column header");
  return c;
}

std::string spectrum_csv(int N, const std::string& config_hash) {
  lattice::Geometry g(N);
  std::string out = header("spectrum-v1", config_hash) + "k,mu\n";
  for (long k = -g.n; k <= g.n; ++k)
    out += std::to_string(k) + "," + format_double(lattice::mu(k, N)) + "\n";
  return out;
}

std::string trajectory_csv(const dynamics::Trajectory& traj, const std::string& config_hash) {
  std::string out = header("trajectory-v1", config_hash) + "t,k,Sx,Sy,Sz\n";
  for (size_t i = 0; i < traj.states.size(); ++i) {
    const std::string t = format_double(traj.times[i]);
    const auto& v = traj.states[i].v;
    for (size_t k = 0; k < v.size(); ++k)
      out += t + "," + std::to_string(k) + "," + format_double(v[k].x) + "," +
             format_double(v[k].y) + "," + format_double(v[k].z) + "\n";
  }
  return out;
}

std::string diagnostics_json(const dynamics::Trajectory& traj, const std::string& config_hash) {
  json rows = json::array();
  for (size_t i = 0; i < traj.diag.size(); ++i) {
    const auto& d = traj.diag[i];
    rows.push_back({{"t", d.t},
                    {"energy", d.energy},
                    {"l2", d.l2},
                    {"hhalf", d.hhalf},
                    {"h52", d.h52},
                    {"sphere_dev", d.sphere_dev},
                    {"total_spin", {d.total_spin.x, d.total_spin.y, d.total_spin.z}}});
  }
  json j = {{"tool", "halfwave"},
            {"version", kVersion},
            {"schema", "diagnostics-v1"},
            {"config", config_hash},
            {"N", traj.N},
            {"dt", traj.params.dt},
            {"T", traj.params.T},
            {"eps", traj.params.eps},
            {"project", traj.params.project},
            {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string conv_table_csv(const analysis::ConvTable& t, const std::string& config_hash) {
  std::string out = header("convergence-v1", config_hash);
  out += "# slope: " + format_double(t.slope) + "\n";
  out += "# T_used: " + format_double(t.T_used) + "\n";
  if (t.N_ref > 0)
    out += "# N_ref: " + std::to_string(t.N_ref) + " dt_ref: " + format_double(t.dt_ref) + "\n";
  out += "N,sup_err,dt\n";
  for (const auto& r : t.rows)
    out += std::to_string(r.N) + "," + format_double(r.sup_err) + "," + format_double(r.dt) + "\n";
  return out;
}

std::string sweep_csv(const analysis::ErrorSweep& s, const std::string& config_hash) {
  std::string out = header("errorsweep-v1", config_hash);
  out += "# eps: " + format_double(s.eps) + "\n";
  out += std::string("# bounded: ") + (s.bounded ? "true" : "false") +
         " decaying: " + (s.decaying ? "true" : "false") + "\n";
  out += "N,sup_norm,t_at_sup,initial_norm\n";
  for (const auto& r : s.rows)
    out += std::to_string(r.N) + "," + format_double(r.sup_norm) + "," +
           format_double(r.t_at_sup) + "," + format_double(r.initial_norm) + "\n";
  return out;
}

}  // namespace halfwave::io
