#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "inar/io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "inar");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = inar::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "inar_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("moments subcommand") {
    const Run r = run({"moments", "--alpha", "0.5", "--innov", "poisson:1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m1"].get<double>() == doctest::Approx(2.0));
    CHECK(j["m2"].get<double>() == doctest::Approx(6.0));
    CHECK(j["m3"].get<double>() == doctest::Approx(22.0));
}

TEST_CASE("simulate is deterministic and estimate reads its output") {
    const fs::path dir = scratch();
    const std::vector<std::string> base = {"simulate", "--seed", "7", "--alpha", "0.5", "--innov", "poisson:1",
                                           "--n", "400", "--outlier", "additive:s=50:theta=10"};
    auto a = base, b = base;
    a.insert(a.end(), {"--out", (dir / "a.csv").string()});
    b.insert(b.end(), {"--out", (dir / "b.csv").string()});
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));

    const Run e = run({"estimate", "--in", (dir / "a.csv").string(), "--scenario", "additive", "--s1", "50",
                       "--mu", "1.0"});
    REQUIRE(e.code == 0);
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j["scenario"] == "ADD1");
    CHECK(std::isfinite(j["alpha_hat"].get<double>()));
    CHECK(std::isfinite(j["theta_hat"][0].get<double>()));
}

TEST_CASE("CSV and JSON encodings give the same estimates") {
    const fs::path dir = scratch();
    const std::vector<std::string> base = {"simulate", "--seed", "3", "--n", "300", "--outlier",
                                           "innovational:s=40:theta=8,innovational:s=90:theta=5"};
    auto c = base, j = base;
    c.insert(c.end(), {"--out", (dir / "c.csv").string()});
    j.insert(j.end(), {"--out", (dir / "c.json").string(), "--format", "json"});
    REQUIRE(run(c).code == 0);
    REQUIRE(run(j).code == 0);
    std::ifstream fc(dir / "c.csv"), fj(dir / "c.json");
    CHECK(inar::read_series(fc) == inar::read_series(fj));
    const Run ec = run({"estimate", "--in", (dir / "c.csv").string(), "--scenario", "innovational", "--s1", "40",
                        "--s2", "90"});
    const Run ej = run({"estimate", "--in", (dir / "c.json").string(), "--scenario", "innovational", "--s1", "40",
                        "--s2", "90"});
    REQUIRE(ec.code == 0);
    CHECK(ec.out == ej.out);
    CHECK(nlohmann::json::parse(ec.out)["scenario"] == "INN2M");
}

TEST_CASE("exit codes") {
    const fs::path dir = scratch();
    CHECK(run({"moments", "--alpha", "1.5"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    REQUIRE(run({"simulate", "--n", "20", "--seed", "1", "--out", (dir / "short.csv").string()}).code == 0);
    CHECK(run({"estimate", "--in", (dir / "short.csv").string(), "--scenario", "additive", "--s1", "50"}).code == 2);
    {
        std::ofstream f(dir / "flat.csv");
        f << "y\n0\n0\n5\n0\n";
    }
    CHECK(run({"estimate", "--in", (dir / "flat.csv").string(), "--scenario", "additive", "--s1", "2", "--mu", "1"})
              .code == 3);
    CHECK(run({"mc", "--set", "n=200", "--set", "replications=20", "--set", "checks=consistency", "--set",
               "alpha_bias=0.0000001"})
              .code == 4);
}

TEST_CASE("mc subcommand writes records and a summary") {
    const fs::path dir = scratch();
    {
        std::ofstream f(dir / "camp.cfg");
        f << "family=innovational\ntimes=30\nsizes=6\nn=300\nreplications=30\nchecks=consistency,decomposition\n"
          << "records=" << (dir / "recs.csv").string() << "\n";
    }
    const Run r = run({"mc", "--config", (dir / "camp.cfg").string(), "--threads", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(slurp(dir / "recs.csv").rfind("n,rep,scenario", 0) == 0);
}
