#include <iostream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "halfwave/config.hpp"
#include "halfwave/io.hpp"
#include "halfwave/runner.hpp"
#include "halfwave/util.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spin lattice flow on odd circle lattices"};
  app.set_version_flag("--version", std::string("halfwave ") + halfwave::kVersion);

  std::string config_path, out_dir, format;
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("-c,--config", config_path, "JSON config file")->required();
  app.add_option("-o,--out", out_dir, "output directory (overrides config)");
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "override data.seed (random_band only)");
  app.add_option("--threads", threads, "worker threads for sweep scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    halfwave::cfg::Config c = halfwave::cfg::parse(halfwave::io::read_file(config_path));
    if (!out_dir.empty()) c.output.dir = out_dir;
    if (!format.empty()) c.output.format = format;
    if (threads > 0) c.threads = threads;
    if (seed_opt->count()) {
      auto* r = std::get_if<halfwave::data::RandomBand>(&c.init);
      if (!r) throw std::runtime_error("--seed override requires random_band initial data");
      r->seed = seed;
    }
    halfwave::run::run(c, std::cout);
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
