#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace inar {

enum class ErrorKind {
    InvalidArgument,
    SampleTooShort,
    MissingMu,
    BadTimes,
    DegenerateDenominator,
    OptimizerFailed,
    SingularMoment,
    CampaignFailed,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Discrete law on the nonnegative integers. Used for the innovations and
// for the initial value X_0.
struct Distribution {
    enum class Kind { Poisson, Pmf, Fixed };

    Kind kind = Kind::Fixed;
    double lambda = 0.0;
    std::vector<std::pair<long, double>> support;
    long value = 0;

    static Distribution poisson(double lambda);
    static Distribution pmf(std::vector<std::pair<long, double>> support);
    static Distribution fixed(long value);

    double mean() const;
    double variance() const;
    double second_raw() const;
    double third_raw() const;
    double pgf(double s) const;

    // Throws InvalidArgument unless this is a proper law.
    void validate() const;
    // Additionally requires P(eps != 0) > 0 and a positive mean.
    void validate_innovation() const;

    std::string describe() const;
};

// "poisson:1.5", "pmf:0:0.5,2:0.5", or a bare integer (fixed value).
Distribution parse_distribution(const std::string& text);

struct ModelSpec {
    double alpha = 0.5;
    Distribution innovation = Distribution::poisson(1.0);
    Distribution init = Distribution::fixed(0);

    void validate() const;
    double mu() const { return innovation.mean(); }
    double sigma2() const { return innovation.variance(); }
};

enum class Family { Additive, Innovational };

const char* family_name(Family f);
Family parse_family(const std::string& text);

struct OutlierScenario {
    Family family = Family::Additive;
    std::vector<long> times;
    std::vector<long> sizes;  // true sizes; only the simulator reads them
    bool mu_known = true;

    // Sorts times ascending, carrying sizes along.
    OutlierScenario canonical() const;
};

enum class ScenarioTag {
    ADD1, ADD1M, ADD2SEP, ADD2SEPM, ADD2ADJ, ADD2ADJM,
    INN1, INN1M, INN2, INN2M,
};

inline constexpr ScenarioTag all_tags[] = {
    ScenarioTag::ADD1, ScenarioTag::ADD1M, ScenarioTag::ADD2SEP,
    ScenarioTag::ADD2SEPM, ScenarioTag::ADD2ADJ, ScenarioTag::ADD2ADJM,
    ScenarioTag::INN1, ScenarioTag::INN1M, ScenarioTag::INN2, ScenarioTag::INN2M,
};

const char* tag_name(ScenarioTag t);
ScenarioTag parse_tag(const std::string& text);
bool is_additive(ScenarioTag t);
bool is_mu_known(ScenarioTag t);
int outlier_count(ScenarioTag t);

// Time index equals array index: y[k] is Y_k, k = 0..n.
using Series = std::vector<long>;

inline long sample_size(const Series& y) { return static_cast<long>(y.size()) - 1; }

// Pure classification from (family, times, mu_known). Times are sorted first.
ScenarioTag classify(const OutlierScenario& sc);

long minimum_n(ScenarioTag t, const std::vector<long>& sorted_times);

// Checks the sample-size preconditions and returns the scenario tag.
ScenarioTag validate_scenario(const Series& y, const OutlierScenario& sc,
                              std::optional<double> mu_eps);

struct OptimizerInfo {
    std::string method;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct EstimateReport {
    std::optional<ScenarioTag> tag;  // empty for the clean model
    std::vector<long> times;
    bool mu_known = true;
    double alpha_hat = 0.0;
    std::optional<double> mu_hat;
    std::vector<double> theta_hat;
    double objective = 0.0;
    OptimizerInfo optimizer;
    std::vector<double> gradient;
    std::vector<double> certificate;  // leading principal minors of the Hessian

    bool certificate_positive() const;
    double gradient_norm() const;
    // (alpha, [mu], theta...) in the order the objective uses.
    std::vector<double> params() const;
};

struct AsymptoticLaw {
    std::vector<double> limits;
    Eigen::MatrixXd cov;
    double sigma2_alpha = 0.0;
};

inline constexpr double gradient_tol = 1e-8;

}  // namespace inar
