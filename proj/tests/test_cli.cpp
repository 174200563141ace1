#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "halfwave/config.hpp"
#include "halfwave/io.hpp"
#include "halfwave/runner.hpp"
#include "halfwave/util.hpp"

using namespace halfwave;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("halfwave_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

const char* kSimulateCfg = R"({
  "scenario": "simulate",
  "N": 9,
  "data": {"family": "great_circle", "m": 0},
  "flow": {"dt": 0.0025, "T": 0.05, "record_every": 4},
  "output": {"dir": "OUT", "format": "csv"}
})";

std::string with_dir(const char* tpl, const fs::path& dir) {
  std::string s(tpl);
  s.replace(s.find("OUT"), 3, dir.string());
  return s;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config round-trips through its canonical form") {
  cfg::Config c = cfg::parse(kSimulateCfg);
  CHECK(c.scenario == cfg::Scenario::Simulate);
  CHECK(c.N == 9);
  CHECK(std::get<data::GreatCircle>(c.init).m == 0);
  CHECK(c.flow.dt == 0.0025);
  CHECK(c.flow.record_every == 4);

  std::string canon = cfg::emit(c);
  cfg::Config c2 = cfg::parse(canon);
  CHECK(cfg::emit(c2) == canon);
  CHECK(cfg::config_hash(c2) == cfg::config_hash(c));

  // hash is insensitive to formatting, sensitive to content
  cfg::Config c3 = cfg::parse("{\"scenario\":\"simulate\",\"N\":9,"
                              "\"data\":{\"family\":\"great_circle\",\"m\":0},"
                              "\"flow\":{\"dt\":0.0025,\"T\":0.05,\"record_every\":4},"
                              "\"output\":{\"dir\":\"" +
                              fs::temp_directory_path().string() +
                              "\",\"format\":\"csv\"}}");
  c3.output.dir = c.output.dir;
  CHECK(cfg::config_hash(c3) == cfg::config_hash(c));
  c3.N = 11;
  CHECK(cfg::config_hash(c3) != cfg::config_hash(c));
}

TEST_CASE("config parsing rejects malformed input with pointed messages") {
  CHECK_THROWS_WITH_AS(cfg::parse("{"), doctest::Contains("invalid JSON"), std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse("{}"), doctest::Contains("missing \"scenario\""),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse(R"({"scenario": "warp"})"),
                       doctest::Contains("unknown scenario"), std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse(R"({"scenario": "spectrum", "nodes": 5})"),
                       doctest::Contains("unknown key \"nodes\""), std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse(R"({"scenario": "spectrum", "N": 6})"),
                       doctest::Contains("must be odd"), std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse(R"({"scenario": "spectrum", "output": {"format": "xml"}})"),
                       doctest::Contains("csv"), std::runtime_error);
  CHECK_THROWS_WITH_AS(cfg::parse(R"({"scenario": "simulate", "data": {"family": "spiral"}})"),
                       doctest::Contains("unknown data family"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      cfg::parse(R"({"scenario": "simulate", "data": {"family": "random_band", "kmax": 0}})"),
      doctest::Contains("kmax"), std::runtime_error);
}

TEST_CASE("coefficient CSV round-trips doubles exactly") {
  std::mt19937_64 rng(2024);
  spectral::CoeffSeq c;
  for (long k : {-17L, -3L, 0L, 5L, 40L}) {
    Vec3c v;
    for (int comp = 0; comp < 3; ++comp)
      v[comp] = cplx(uniform_pm1(rng) * std::pow(10, int(rng() % 7) - 3),
                     uniform_pm1(rng));
    c.add(k, v);
  }
  std::string csv = io::coeffs_csv(c, "deadbeef");
  CHECK(csv.find("# halfwave") == 0);
  CHECK(csv.find("# config: deadbeef") != std::string::npos);

  spectral::CoeffSeq back = io::parse_coeffs_csv(csv);
  REQUIRE(back.m.size() == c.m.size());
  for (const auto& [k, v] : c.m) {
    Vec3c w = back.coeff(k);
    for (int comp = 0; comp < 3; ++comp) {
      CHECK(v[comp].real() == w[comp].real());  // bitwise, not approximate
      CHECK(v[comp].imag() == w[comp].imag());
    }
  }
  CHECK_THROWS_AS(io::parse_coeffs_csv("component,k,re\n"), std::runtime_error);
  CHECK_THROWS_AS(io::parse_coeffs_csv("component,k,re,im\n9,1,0.5,0\n"), std::runtime_error);
}

TEST_CASE("format_double survives the round trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02e23, -0.0, 123456789.123456789}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("golden regression: rerunning a config reproduces every byte") {
  for (const char* scen : {"spectrum", "simulate"}) {
    fs::path dir = fresh_dir(std::string(scen) + "_golden");
    const char* tpl = scen == std::string("spectrum")
                          ? R"({"scenario": "spectrum", "N": 31, "output": {"dir": "OUT"}})"
                          : kSimulateCfg;
    cfg::Config c = cfg::parse(with_dir(tpl, dir));

    std::ostringstream sink1;
    auto files1 = run::run(c, sink1);
    std::vector<std::string> snapshot;
    for (const auto& f : files1) snapshot.push_back(io::read_file(f));

    fs::remove_all(dir);
    std::ostringstream sink2;
    auto files2 = run::run(c, sink2);
    REQUIRE(files1 == files2);
    for (size_t i = 0; i < files2.size(); ++i) CHECK(io::read_file(files2[i]) == snapshot[i]);
    CHECK(sink1.str() == sink2.str());
  }
}

TEST_CASE("simulate on constant data: flat diagnostics, zero energy") {
  fs::path dir = fresh_dir("const");
  cfg::Config c = cfg::parse(with_dir(kSimulateCfg, dir));
  std::ostringstream sink;
  auto files = run::run(c, sink);
  REQUIRE(files.size() == 4);  // config, trajectory, diagnostics, coeffs

  nlohmann::json diag = nlohmann::json::parse(io::read_file((dir / "diagnostics.json").string()));
  CHECK(diag["schema"] == "diagnostics-v1");
  for (const auto& row : diag["rows"]) {
    CHECK(std::abs(row["energy"].get<double>()) < 1e-12);
    CHECK(std::abs(row["l2"].get<double>() - 1.0) < 1e-12);
  }
  CHECK(sink.str().find("simulate: N=9") != std::string::npos);
}

TEST_CASE("viscosity scenario reports a tiny relative residual") {
  fs::path dir = fresh_dir("visc");
  cfg::Config c = cfg::parse(R"({
    "scenario": "viscosity",
    "N": 11,
    "data": {"family": "tilted"},
    "flow": {"eps": 0.1},
    "output": {"dir": ")" + dir.string() + R"("}
  })");
  std::ostringstream sink;
  run::run(c, sink);
  nlohmann::json j = nlohmann::json::parse(io::read_file((dir / "viscosity.json").string()));
  CHECK(std::abs(j["rel_residual"].get<double>()) < 1e-9);
  CHECK(std::abs(j["top_term"].get<double>()) / j["lhs"].get<double>() < 1e-12);
}

TEST_CASE("spectrum scenario emits the frozen five-node values") {
  fs::path dir = fresh_dir("spec5");
  cfg::Config c = cfg::parse(R"({"scenario": "spectrum", "N": 5, "output": {"dir": ")" +
                             dir.string() + R"(", "format": "json"}})");
  std::ostringstream sink;
  run::run(c, sink);
  nlohmann::json j = nlohmann::json::parse(io::read_file((dir / "spectrum.json").string()));
  std::vector<double> mu = j["mu"].get<std::vector<double>>();
  REQUIRE(mu.size() == 5);
  CHECK(mu[0] == 1.2);  // k = -2
  CHECK(mu[1] == 0.8);
  CHECK(mu[2] == 0.0);
  CHECK(mu[3] == 0.8);
  CHECK(mu[4] == 1.2);
}

TEST_CASE("command line binary: end-to-end run, versioning, error path") {
  fs::path dir = fresh_dir("bin");
  fs::path cfgfile = dir / "cfg.json";
  io::write_file(cfgfile.string(), with_dir(kSimulateCfg, dir / "out"));

  std::string exe = std::string("\"") + HALFWAVE_CLI_PATH + "\"";
  std::string quiet = " > /dev/null 2>&1";

  CHECK(std::system((exe + " --version" + quiet).c_str()) == 0);
  CHECK(std::system((exe + " --config " + cfgfile.string() + quiet).c_str()) == 0);
  CHECK(fs::exists(dir / "out" / "trajectory.csv"));
  CHECK(fs::exists(dir / "out" / "diagnostics.json"));

  // --out override redirects everything
  CHECK(std::system((exe + " --config " + cfgfile.string() + " --out " +
                     (dir / "redirect").string() + quiet)
                        .c_str()) == 0);
  CHECK(fs::exists(dir / "redirect" / "trajectory.csv"));

  // bad config: nonzero exit, machine-readable error on stderr
  fs::path bad = dir / "bad.json";
  io::write_file(bad.string(), R"({"scenario": "simulate", "N": 6})");
  fs::path errfile = dir / "err.txt";
  int rc = std::system((exe + " --config " + bad.string() + " 2> " + errfile.string() +
                        " > /dev/null")
                           .c_str());
  CHECK(rc != 0);
  nlohmann::json err = nlohmann::json::parse(io::read_file(errfile.string()));
  CHECK(err.contains("error"));

  // missing --config is a usage error
  CHECK(std::system((exe + quiet).c_str()) != 0);

  // seed override only applies to random data
  CHECK(std::system((exe + " --config " + cfgfile.string() + " --seed 7" + quiet).c_str()) != 0);
}

}  // TEST_SUITE
