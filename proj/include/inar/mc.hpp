#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "inar/model.hpp"

namespace inar {

enum class Check {
    Consistency,
    LimitConvergence,
    ConditionalClt,
    CovarianceMatch,
    ZMoments,
    Decomposition,
};

const char* check_name(Check c);
Check parse_check(const std::string& text);

struct Thresholds {
    double alpha_bias = 0.02;
    double mu_bias = 0.1;
    double limit_tol = 0.05;
    double limit_fraction = 0.9;
    double clt_var_lo = 0.85;
    double clt_var_hi = 1.15;
    double ks_max = 0.05;
    double sigma2_rel = 0.15;
    double b_rel = 0.2;
    double degenerate_max = 0.01;
    double z_se = 3.0;
};

struct McCampaign {
    ModelSpec model;
    std::optional<OutlierScenario> scenario;  // empty: clean model
    bool mu_known = true;                     // used only for the clean model
    std::vector<long> n_values;
    long replications = 100;
    std::uint64_t master_seed = 1;
    std::vector<Check> checks;
    Thresholds thresholds;
    unsigned threads = 1;

    void validate() const;
    bool estimates_mu() const;
    std::string scenario_label() const;
};

// Applies one key=value setting. Unknown keys throw InvalidArgument.
void apply_setting(McCampaign& c, const std::string& key, const std::string& value);
// Flat key=value file; '#' starts a comment. Keys it does not know about are
// returned so callers can handle output paths and the like.
std::vector<std::pair<std::string, std::string>> parse_campaign(std::istream& is, McCampaign& c);

struct McRecord {
    long n = 0;
    long rep = 0;
    std::string scenario;
    double alpha_hat, mu_hat, theta_hat_1, theta_hat_2;
    double limit_1, limit_2;
    double cond_var_11, cond_var_12, cond_var_22;
    bool degenerate = false;
};

std::vector<McRecord> run_replications(const McCampaign& c);

void write_records_csv(std::ostream& os, const std::vector<McRecord>& recs);
std::vector<McRecord> read_records_csv(std::istream& is);

struct CheckResult {
    std::string name;
    long n = 0;
    bool pass = false;
    std::string detail;
};

struct McSummary {
    nlohmann::json stats;  // per n
    std::vector<CheckResult> results;
    bool degenerate_ok = true;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Everything here is a function of the records and the campaign settings.
McSummary summarize(const McCampaign& c, const std::vector<McRecord>& recs);

// Path-level checks that do not go through the estimators.
struct ZLawOptions {
    long theta = 5;
    long s = 10;
    long k_max = 10;
    long extinction_lag = 50;
    long replications = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double z_se = 3.0;
};
CheckResult check_z_moments(const ModelSpec& model, const ZLawOptions& opt);

CheckResult check_decomposition(const ModelSpec& model, const OutlierScenario& sc, long n,
                                long replications, std::uint64_t seed, unsigned threads);

struct CampaignResult {
    std::vector<McRecord> records;
    McSummary summary;
};

CampaignResult run_campaign(const McCampaign& c);

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(long count, unsigned threads, const std::function<void(long)>& fn);

// Kolmogorov distance between the sample and N(0,1).
double ks_normal(std::vector<double> xs);

}  // namespace inar
