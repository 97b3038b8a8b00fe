#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "inar/mc.hpp"

using namespace inar;
using testing::scenario;

namespace {

McCampaign small_campaign() {
    McCampaign c;
    c.model = testing::poisson_model();
    c.scenario = scenario(Family::Additive, {50, 51}, false, {10, 6});
    c.n_values = {300, 600};
    c.replications = 40;
    c.master_seed = 77;
    c.checks = {Check::Consistency, Check::LimitConvergence, Check::ConditionalClt, Check::CovarianceMatch};
    return c;
}

std::string csv(const std::vector<McRecord>& r) {
    std::ostringstream os;
    write_records_csv(os, r);
    return os.str();
}

}  // namespace

TEST_CASE("records do not depend on the number of workers") {
    McCampaign c = small_campaign();
    c.threads = 1;
    const std::string one = csv(run_replications(c));
    c.threads = 4;
    CHECK(csv(run_replications(c)) == one);
    c.replications = 1;
    c.threads = 1;
    const std::string single = csv(run_replications(c));
    c.threads = 3;
    CHECK(csv(run_replications(c)) == single);
}

TEST_CASE("records round trip and the summary is recomputable") {
    McCampaign c = small_campaign();
    const auto recs = run_replications(c);
    const std::string text = csv(recs);
    std::istringstream in(text);
    const auto back = read_records_csv(in);
    CHECK(csv(back) == text);
    CHECK(summarize(c, back).to_json().dump() == summarize(c, recs).to_json().dump());
}

TEST_CASE("record header") {
    std::ostringstream os;
    write_records_csv(os, {});
    CHECK(os.str() ==
          "n,rep,scenario,alpha_hat,mu_hat,theta_hat_1,theta_hat_2,limit_1,limit_2,"
          "cond_var_11,cond_var_12,cond_var_22,degenerate\n");
}

TEST_CASE("consistency campaign for a single additive outlier") {
    McCampaign c;
    c.model = testing::poisson_model();
    c.scenario = scenario(Family::Additive, {50}, true, {10});
    c.n_values = {5000};
    c.replications = 200;
    c.checks = {Check::Consistency};
    const auto res = run_campaign(c);
    REQUIRE(res.summary.results.size() == 1);
    CHECK(res.summary.results[0].pass);
    CHECK(res.summary.all_pass());
}

TEST_CASE("too many degenerate replications fail the campaign") {
    McCampaign c;
    c.model.alpha = 0.1;
    c.model.innovation = Distribution::pmf({{0, 0.97}, {1, 0.03}});
    c.model.init = Distribution::fixed(0);
    c.mu_known = false;
    c.n_values = {3};
    c.replications = 50;
    c.checks = {Check::Consistency};
    const auto res = run_campaign(c);
    long degenerate = 0;
    for (const auto& r : res.records) degenerate += r.degenerate;
    CHECK(degenerate > 0);
    CHECK_FALSE(res.summary.degenerate_ok);
    CHECK_FALSE(res.summary.all_pass());
}

TEST_CASE("campaign settings from a key=value file") {
    std::istringstream in(
        "# demo\n"
        "alpha = 0.4\n"
        "innov = poisson:2\n"
        "family = innovational\n"
        "times = 60,40\n"
        "sizes = 6,8\n"
        "mu_known = false\n"
        "n = 500,1000\n"
        "replications = 25\n"
        "seed = 9\n"
        "checks = consistency,conditional_clt\n"
        "ks_max = 0.08\n"
        "records = out.csv\n");
    McCampaign c;
    const auto rest = parse_campaign(in, c);
    CHECK(c.model.alpha == 0.4);
    CHECK(c.model.mu() == 2.0);
    REQUIRE(c.scenario);
    CHECK(c.scenario->family == Family::Innovational);
    CHECK_FALSE(c.scenario->mu_known);
    CHECK(c.scenario_label() == "INN2M");
    CHECK(c.n_values == std::vector<long>{500, 1000});
    CHECK(c.thresholds.ks_max == 0.08);
    CHECK(c.checks.size() == 2);
    REQUIRE(rest.size() == 1);
    CHECK(rest[0].second == "out.csv");
    std::istringstream bad("colour = blue\n");
    CHECK_THROWS_AS(parse_campaign(bad, c), Error);
}

TEST_CASE("checks that need outliers are rejected for the clean model") {
    McCampaign c;
    c.n_values = {100};
    c.checks = {Check::ConditionalClt};
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("Kolmogorov distance") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> nd;
    std::vector<double> xs(5000), shifted(5000);
    for (size_t i = 0; i < xs.size(); ++i) {
        xs[i] = nd(rng);
        shifted[i] = xs[i] + 0.5;
    }
    CHECK(ks_normal(xs) < 0.03);
    CHECK(ks_normal(shifted) > 0.15);
    CHECK(ks_normal({0.0}) == doctest::Approx(0.5));
}

TEST_CASE("path-level checks") {
    ZLawOptions opt;
    opt.replications = 4000;
    opt.seed = 5;
    const auto z = check_z_moments(testing::poisson_model(0.6), opt);
    CHECK(z.pass);
    const auto d = check_decomposition(testing::poisson_model(0.6),
                                       scenario(Family::Innovational, {20, 21}, true, {5, 3}), 60, 500, 3, 2);
    CHECK(d.pass);
}

TEST_CASE("parallel_for propagates the first failure") {
    CHECK_THROWS_AS(parallel_for(100, 4, [](long i) {
                        if (i == 37) throw Error(ErrorKind::InvalidArgument, "boom");
                    }),
                    Error);
}
