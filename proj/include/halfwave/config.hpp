#pragma once

// JSON run configuration. parse() is strict (unknown keys are errors),
// emit() is canonical (every field, alphabetical keys), and the config hash
// is FNV-1a over the canonical form, so equal configs hash equally no matter
// how the input file was formatted.

#include <string>
#include <vector>

#include "halfwave/dynamics.hpp"
#include "halfwave/initial_data.hpp"

namespace halfwave::cfg {

enum class Scenario { Spectrum, Simulate, Converge, Viscosity, ErrorSweep, WeakTest };

std::string scenario_name(Scenario s);
Scenario scenario_from(const std::string& name);

struct AnalysisCfg {
  double T = 0.5;
  int n_records = 8;
  double eps_exponent = 0.1;
  int n_test_functions = 10;
  bool project = true;
};

struct OutputCfg {
  std::string dir = "out";
  std::string format = "csv";  // csv | json
};

struct Config {
  Scenario scenario = Scenario::Simulate;
  int N = 31;
  std::vector<int> N_list{33, 65, 129, 257};
  int N_ref = 1025;
  int threads = 1;
  data::InitialData init = data::GreatCircle{};
  dynamics::FlowParams flow;
  AnalysisCfg analysis;
  OutputCfg output;
};

Config parse(const std::string& json_text);
std::string emit(const Config& c);
std::string config_hash(const Config& c);

}  // namespace halfwave::cfg
