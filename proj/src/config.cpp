#include "halfwave/config.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

#include "halfwave/util.hpp"

namespace halfwave::cfg {

using nlohmann::json;

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Spectrum: return "spectrum";
    case Scenario::Simulate: return "simulate";
    case Scenario::Converge: return "converge";
    case Scenario::Viscosity: return "viscosity";
    case Scenario::ErrorSweep: return "errorsweep";
    case Scenario::WeakTest: return "weaktest";
  }
  throw std::logic_error("unreachable");
}

Scenario scenario_from(const std::string& name) {
  for (Scenario s : {Scenario::Spectrum, Scenario::Simulate, Scenario::Converge,
                     Scenario::Viscosity, Scenario::ErrorSweep, Scenario::WeakTest})
    if (scenario_name(s) == name) return s;
  throw std::runtime_error("config: unknown scenario \"" + name + "\"");
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw std::runtime_error("config: " + where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k))
      throw std::runtime_error("config: unknown key \"" + k + "\" in " + where);
}

void require_odd(int N, const std::string& where) {
  if (N < 3 || N % 2 == 0)
    throw std::runtime_error("config: " + where + " must be odd and at least 3, got " +
                             std::to_string(N));
}

data::InitialData parse_data(const json& j) {
  std::string family = j.value("family", std::string("great_circle"));
  if (family == "great_circle") {
    check_keys(j, {"family", "m"}, "data");
    data::GreatCircle g;
    g.m = j.value("m", g.m);
    if (g.m < 0) throw std::runtime_error("config: data.m must be nonnegative");
    return g;
  }
  if (family == "tilted") {
    check_keys(j, {"family", "alpha0", "alpha_cos", "alpha_sin", "beta0", "beta_cos", "beta_sin"},
               "data");
    data::TiltedSmooth t;
    t.alpha0 = j.value("alpha0", t.alpha0);
    t.beta0 = j.value("beta0", t.beta0);
    if (j.contains("alpha_cos")) t.alpha_cos = j["alpha_cos"].get<std::vector<double>>();
    if (j.contains("alpha_sin")) t.alpha_sin = j["alpha_sin"].get<std::vector<double>>();
    if (j.contains("beta_cos")) t.beta_cos = j["beta_cos"].get<std::vector<double>>();
    if (j.contains("beta_sin")) t.beta_sin = j["beta_sin"].get<std::vector<double>>();
    return t;
  }
  if (family == "random_band") {
    check_keys(j, {"family", "seed", "kmax", "amplitude"}, "data");
    data::RandomBand r;
    r.seed = j.value("seed", r.seed);
    r.kmax = j.value("kmax", r.kmax);
    r.amplitude = j.value("amplitude", r.amplitude);
    if (r.kmax < 1) throw std::runtime_error("config: data.kmax must be at least 1");
    if (!(r.amplitude > 0)) throw std::runtime_error("config: data.amplitude must be positive");
    return r;
  }
  throw std::runtime_error("config: unknown data family \"" + family + "\"");
}

json emit_data(const data::InitialData& d) {
  json j;
  j["family"] = data::family_name(d);
  if (const auto* g = std::get_if<data::GreatCircle>(&d)) {
    j["m"] = g->m;
  } else if (const auto* t = std::get_if<data::TiltedSmooth>(&d)) {
    j["alpha0"] = t->alpha0;
    j["alpha_cos"] = t->alpha_cos;
    j["alpha_sin"] = t->alpha_sin;
    j["beta0"] = t->beta0;
    j["beta_cos"] = t->beta_cos;
    j["beta_sin"] = t->beta_sin;
  } else if (const auto* r = std::get_if<data::RandomBand>(&d)) {
    j["seed"] = r->seed;
    j["kmax"] = r->kmax;
    j["amplitude"] = r->amplitude;
  }
  return j;
}

}  // namespace

Config parse(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config: invalid JSON: ") + e.what());
  }
  check_keys(j, {"scenario", "N", "N_list", "N_ref", "threads", "data", "flow", "analysis",
                 "output"},
             "config");
  if (!j.contains("scenario")) throw std::runtime_error("config: missing \"scenario\"");

  Config c;
  try {
    c.scenario = scenario_from(j["scenario"].get<std::string>());
    c.N = j.value("N", c.N);
    require_odd(c.N, "N");
    if (j.contains("N_list")) {
      c.N_list = j["N_list"].get<std::vector<int>>();
      if (c.N_list.empty()) throw std::runtime_error("config: N_list must be nonempty");
      for (int N : c.N_list) require_odd(N, "N_list entry");
    }
    c.N_ref = j.value("N_ref", c.N_ref);
    require_odd(c.N_ref, "N_ref");
    c.threads = j.value("threads", c.threads);
    if (c.threads < 1) throw std::runtime_error("config: threads must be at least 1");

    if (j.contains("data")) c.init = parse_data(j["data"]);

    if (j.contains("flow")) {
      const json& f = j["flow"];
      check_keys(f, {"dt", "T", "record_every", "eps", "project", "allow_dt_override"}, "flow");
      c.flow.dt = f.value("dt", c.flow.dt);
      c.flow.T = f.value("T", c.flow.T);
      c.flow.record_every = f.value("record_every", c.flow.record_every);
      c.flow.eps = f.value("eps", c.flow.eps);
      c.flow.project = f.value("project", c.flow.project);
      c.flow.allow_dt_override = f.value("allow_dt_override", c.flow.allow_dt_override);
    }

    if (j.contains("analysis")) {
      const json& a = j["analysis"];
      check_keys(a, {"T", "n_records", "eps_exponent", "n_test_functions", "project"},
                 "analysis");
      c.analysis.T = a.value("T", c.analysis.T);
      c.analysis.n_records = a.value("n_records", c.analysis.n_records);
      c.analysis.eps_exponent = a.value("eps_exponent", c.analysis.eps_exponent);
      c.analysis.n_test_functions = a.value("n_test_functions", c.analysis.n_test_functions);
      c.analysis.project = a.value("project", c.analysis.project);
      if (c.analysis.n_records < 2)
        throw std::runtime_error("config: analysis.n_records must be at least 2");
      if (c.analysis.n_test_functions < 1)
        throw std::runtime_error("config: analysis.n_test_functions must be at least 1");
    }

    if (j.contains("output")) {
      const json& o = j["output"];
      check_keys(o, {"dir", "format"}, "output");
      c.output.dir = o.value("dir", c.output.dir);
      c.output.format = o.value("format", c.output.format);
      if (c.output.format != "csv" && c.output.format != "json")
        throw std::runtime_error("config: output.format must be \"csv\" or \"json\"");
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  return c;
}

std::string emit(const Config& c) {
  json j;
  j["scenario"] = scenario_name(c.scenario);
  j["N"] = c.N;
  j["N_list"] = c.N_list;
  j["N_ref"] = c.N_ref;
  j["threads"] = c.threads;
  j["data"] = emit_data(c.init);
  j["flow"] = {{"dt", c.flow.dt},
               {"T", c.flow.T},
               {"record_every", c.flow.record_every},
               {"eps", c.flow.eps},
               {"project", c.flow.project},
               {"allow_dt_override", c.flow.allow_dt_override}};
  j["analysis"] = {{"T", c.analysis.T},
                   {"n_records", c.analysis.n_records},
                   {"eps_exponent", c.analysis.eps_exponent},
                   {"n_test_functions", c.analysis.n_test_functions},
                   {"project", c.analysis.project}};
  j["output"] = {{"dir", c.output.dir}, {"format", c.output.format}};
  return j.dump(2) + "\n";
}

std::string config_hash(const Config& c) { return hex64(fnv1a64(emit(c))); }

}  // namespace halfwave::cfg
