#pragma once

// File formats: coefficient CSV (round-trips doubles exactly), trajectory
// CSV, and JSON diagnostics. The headers carry a schema tag and the config
// hash so outputs are reproducible byte for byte.

#include <string>

#include "halfwave/analysis.hpp"
#include "halfwave/dynamics.hpp"
#include "halfwave/trigpoly.hpp"

namespace halfwave::io {

// Shortest exact decimal (%.17g keeps the bit pattern across a round trip).
std::string format_double(double v);

void write_file(const std::string& path, const std::string& body);
std::string read_file(const std::string& path);

std::string coeffs_csv(const spectral::CoeffSeq& c, const std::string& config_hash);
spectral::CoeffSeq parse_coeffs_csv(const std::string& body);

std::string spectrum_csv(int N, const std::string& config_hash);
std::string trajectory_csv(const dynamics::Trajectory& traj, const std::string& config_hash);
std::string diagnostics_json(const dynamics::Trajectory& traj, const std::string& config_hash);

std::string conv_table_csv(const analysis::ConvTable& t, const std::string& config_hash);
std::string sweep_csv(const analysis::ErrorSweep& s, const std::string& config_hash);

}  // namespace halfwave::io
