#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinring/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(std::vector<std::string> args) {
  return spinring::cli::run(args);
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& stem) {
    path = fs::temp_directory_path() /
           ("spinring_test_" + stem + "_" +
            std::to_string(::getpid() % 100000) + ".tmp");
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

json parse_file(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"spectrum"}) == 2);                       // missing --n-sites
  CHECK(run_cli({"spectrum", "--n-sites", "6", "--wat"}) == 2);
  CHECK(run_cli({"spectrum", "--n-sites", "5"}) == 2);     // odd size
  CHECK(run_cli({"spectrum", "--n-sites", "34"}) == 2);    // above the cap
  CHECK(run_cli({"spectrum", "--n-sites", "6", "--j", "0.5", "--j1",
                 "0.2"}) == 2);                            // exclusive flags
  CHECK(run_cli({"scan", "--n-sites", "6", "--grid", "nonsense"}) == 2);
  CHECK(run_cli({"scan", "--n-sites", "6", "--grid", "1:0:0.1"}) == 2);
  CHECK(run_cli({"jump", "--n-sites", "6", "--bracket", "0.7,0.3"}) == 2);
  CHECK(run_cli({"surface", "--n-sites", "6", "--point", "C", "--grid",
                 "3x3"}) == 2);
  CHECK(run_cli({"spectrum", "--n-sites", "6", "--format", "yaml"}) == 2);
}

TEST_CASE("computation failures exit with code 1") {
  TempFile out("nocross");
  // both bracket endpoints sit in the same groundstate momentum sector
  CHECK(run_cli({"crossing", "--n-sites", "6", "--bracket", "0.1,0.3",
                 "--out", out.str()}) == 1);
  CHECK(run_cli({"spectrum", "--n-sites", "6", "--out",
                 "/nonexistent-dir/x.json"}) == 1);
  // momentum machinery rejects split couplings
  CHECK(run_cli({"scan", "--n-sites", "6", "--j1", "0.2", "--j2", "0.8",
                 "--grid", "0:1:0.5", "--out", out.str()}) == 1);
}

TEST_CASE("spectrum reports the degenerate dimer pair") {
  TempFile out("spectrum");
  REQUIRE(run_cli({"spectrum", "--n-sites", "6", "--j", "0.5", "--levels",
                   "4", "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  CHECK(doc["schema"] == 1);
  CHECK(doc["params"]["n_sites"] == 6);
  CHECK(doc["params"]["j1"] == 0.5);
  CHECK(doc["params"]["j2"] == 0.5);
  REQUIRE(doc["levels"].size() == 4);
  CHECK(std::abs(doc["levels"][0]["energy"].get<double>() + 2.25) < 1e-9);
  CHECK(std::abs(doc["levels"][1]["energy"].get<double>() + 2.25) < 1e-9);
  CHECK(doc["levels"][0]["degeneracy_group"] == 0);
  CHECK(doc["levels"][1]["degeneracy_group"] == 0);
  CHECK(doc["levels"][2]["degeneracy_group"].get<int>() > 0);
  const std::set<int> momenta{doc["levels"][0]["momentum_index"].get<int>(),
                              doc["levels"][1]["momentum_index"].get<int>()};
  CHECK(momenta == std::set<int>{0, 3});
}

TEST_CASE("the underscore alias for the size flag works") {
  TempFile out("alias");
  CHECK(run_cli({"spectrum", "--n_sites", "6", "--j", "0.5", "--out",
                 out.str()}) == 0);
}

TEST_CASE("split couplings get measured momenta or -1") {
  TempFile out("split");
  REQUIRE(run_cli({"spectrum", "--n-sites", "6", "--j1", "0.3", "--j2",
                   "0.7", "--levels", "4", "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  // j1 + j2 = j0 keeps the dimer doublet: two momentum eigenstates at the
  // bottom even though H no longer commutes with single-site translation
  CHECK(std::abs(doc["levels"][0]["energy"].get<double>() + 2.25) < 1e-9);
  CHECK(std::abs(doc["levels"][1]["energy"].get<double>() + 2.25) < 1e-9);
  for (const auto& level : doc["levels"]) {
    const int k = level["momentum_index"].get<int>();
    CHECK(k >= -1);
    CHECK(k < 6);
  }
}

TEST_CASE("scan emits one CSV row per grid point") {
  TempFile out("scan");
  REQUIRE(run_cli({"scan", "--n-sites", "6", "--grid", "0:2:0.01", "--out",
                   out.str()}) == 0);
  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 202);
  CHECK(lines[0] == "J,E_g,E_1st,momentum,C_1,C_2,C_3,C_T");
  CHECK(lines[1].substr(0, 2) == "0,");
  CHECK(lines[201].substr(0, 2) == "2,");
}

TEST_CASE("scan output is identical across runs and worker counts") {
  TempFile a("scan_a");
  TempFile b("scan_b");
  TempFile c("scan_c");
  const std::vector<std::string> base{"scan",   "--n-sites", "8",
                                      "--grid", "0:1:0.05",  "--out"};
  auto with_out = [&](const TempFile& f, std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.push_back(f.str());
    for (auto& e : extra) args.push_back(e);
    return args;
  };
  REQUIRE(run_cli(with_out(a, {"--threads", "1"})) == 0);
  REQUIRE(run_cli(with_out(b, {"--threads", "4"})) == 0);
  REQUIRE(run_cli(with_out(c, {})) == 0);
  const std::string ref = slurp(a.path);
  CHECK(ref == slurp(b.path));
  CHECK(ref == slurp(c.path));
  CHECK_FALSE(ref.empty());
}

TEST_CASE("a config file replaces the flags") {
  TempFile cfg("cfg");
  {
    std::ofstream f(cfg.path);
    f << "n-sites=6\nj=0.5\nlevels=4\n";
  }
  TempFile from_cfg("cfg_out");
  TempFile from_flags("flag_out");
  REQUIRE(run_cli({"spectrum", "--config", cfg.str(), "--out",
                   from_cfg.str()}) == 0);
  REQUIRE(run_cli({"spectrum", "--n-sites", "6", "--j", "0.5", "--levels",
                   "4", "--out", from_flags.str()}) == 0);
  CHECK(slurp(from_cfg.path) == slurp(from_flags.path));
}

TEST_CASE("crossing bisects the dimer point") {
  TempFile out("crossing");
  REQUIRE(run_cli({"crossing", "--n-sites", "8", "--bracket", "0.3,0.52",
                   "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  CHECK(doc["label"] == "A");
  CHECK(std::abs(doc["j_c"].get<double>() - 0.5) < 1e-9);
  CHECK(std::abs(doc["j_c_over_j0"].get<double>() - 0.5) < 1e-9);
  const std::set<int> momenta{
      doc["left_sector"]["momentum_index"].get<int>(),
      doc["right_sector"]["momentum_index"].get<int>()};
  CHECK(momenta == std::set<int>{0, 4});
  CHECK(doc["jump"]["convention"] == "ring");
}

TEST_CASE("crossing scales with j0") {
  TempFile out("crossing_j0");
  REQUIRE(run_cli({"crossing", "--n-sites", "6", "--j0", "2.0", "--bracket",
                   "0.3,0.52", "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  CHECK(std::abs(doc["j_c"].get<double>() - 1.0) < 1e-8);
  CHECK(std::abs(doc["j_c_over_j0"].get<double>() - 0.5) < 1e-9);
  CHECK(doc["label"] == "A");
}

TEST_CASE("jump values are stable under the epsilon override") {
  TempFile a("jump_a");
  TempFile b("jump_b");
  REQUIRE(run_cli({"jump", "--n-sites", "6", "--bracket", "0.3,0.7",
                   "--out", a.str()}) == 0);
  REQUIRE(run_cli({"jump", "--n-sites", "6", "--bracket", "0.3,0.7",
                   "--jump-epsilon", "1e-7", "--out", b.str()}) == 0);
  const json da = parse_file(a.path);
  const json db = parse_file(b.path);
  const double ta = da["jump"]["delta_total"].get<double>();
  const double tb = db["jump"]["delta_total"].get<double>();
  CHECK(std::abs(ta - 2.4) < 1e-3);
  CHECK(std::abs(ta - tb) < 1e-3);
  CHECK(std::abs(da["jump"]["j_critical"].get<double>() - 0.5) < 1e-9);
}

TEST_CASE("surface at the dimer point") {
  TempFile out("surface_a");
  REQUIRE(run_cli({"surface", "--n-sites", "6", "--point", "A", "--grid",
                   "5x5", "--out", out.str()}) == 0);
  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 26);
  CHECK(lines[0] == "theta,phi,d_alpha1,d_alpha2,d_alpha3,d_total");
  CHECK(lines[1].substr(0, 4) == "0,0,");
}

TEST_CASE("surface at the second crossing carries its coupling") {
  TempFile out("surface_b");
  REQUIRE(run_cli({"surface", "--n-sites", "8", "--point", "B", "--grid",
                   "3x3", "--format", "json", "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  CHECK(doc["point"] == "B");
  CHECK(std::abs(doc["params"]["j1"].get<double>() - 0.748176911) < 1e-7);
  REQUIRE(doc["thetas"].size() == 3);
  REQUIRE(doc["per_alpha"].size() == 4);
  REQUIRE(doc["total"].size() == 3);
}

TEST_CASE("table row for eight sites") {
  TempFile out("table1");
  REQUIRE(run_cli({"table1", "--n-sites", "8", "--out", out.str()}) == 0);
  const json doc = parse_file(out.path);
  REQUIRE(doc["rows"].size() == 1);
  const json& row = doc["rows"][0];
  CHECK(row["n_sites"] == 8);
  CHECK(std::abs(row["j_c_over_j0"].get<double>() - 0.748176911) < 1e-7);
  CHECK(std::abs(row["delta_alpha1"].get<double>() - 0.769364736) < 1e-6);
  CHECK(std::abs(row["delta_alpha2"].get<double>() - 1.788334226) < 1e-6);
  CHECK(std::abs(row["delta_total"].get<double>() - 1.018969490) < 1e-6);
  const std::set<int> momenta{row["left_momentum"].get<int>(),
                              row["right_momentum"].get<int>()};
  CHECK(momenta == std::set<int>{0, 4});
}

TEST_CASE("correlators expose the spin-zero concurrence route") {
  TempFile out("correlators");
  REQUIRE(run_cli({"correlators", "--n-sites", "8", "--j", "0.3", "--out",
                   out.str()}) == 0);
  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "alpha,sigma_dot_sigma,concurrence_spin0");
  // recompute the threshold formula from the printed correlator
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto first = lines[i].find(',');
    const auto second = lines[i].find(',', first + 1);
    const double sigma = std::stod(lines[i].substr(first + 1, second - first - 1));
    const double conc = std::stod(lines[i].substr(second + 1));
    CHECK(std::abs(conc - std::max(0.0, -sigma - 1.0) / 2.0) < 1e-9);
  }
}

TEST_CASE("json numbers survive a parse round-trip at 12 digits") {
  TempFile out("roundtrip");
  REQUIRE(run_cli({"spectrum", "--n-sites", "6", "--j", "0.37", "--out",
                   out.str()}) == 0);
  const std::string text = slurp(out.path);
  const json doc = json::parse(text);
  // re-serializing must not change any number: they were rounded through
  // their 12-digit decimal form before emission
  const json reparsed = json::parse(doc.dump());
  CHECK(doc == reparsed);
}
