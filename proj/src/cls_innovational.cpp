#include "inar/cls_innovational.hpp"

#include <algorithm>
#include <cmath>

#include "inar/moments.hpp"
#include "inar/objective.hpp"

namespace inar {

EstimateReport estimate_innovational(const Series& y, const OutlierScenario& raw,
                                     std::optional<double> mu) {
    const OutlierScenario sc = raw.canonical();
    if (sc.family != Family::Innovational)
        throw Error(ErrorKind::InvalidArgument, "innovational scenario expected");
    const ScenarioTag tag = validate_scenario(y, sc, sc.mu_known ? mu : std::nullopt);
    const long n = sample_size(y);
    const auto& times = sc.times;

    long double s0 = 0, s1 = 0, q0 = 0, c = 0;
    long used = 0;
    for (long k = 1; k <= n; ++k) {
        if (std::find(times.begin(), times.end(), k) != times.end()) continue;
        const long double p = y[k - 1], q = y[k];
        s0 += p;
        s1 += q;
        q0 += p * p;
        c += p * q;
        ++used;
    }

    EstimateReport rep;
    rep.tag = tag;
    rep.times = times;
    rep.mu_known = sc.mu_known;
    rep.optimizer.method = "closed_form";
    double m = 0.0;
    if (sc.mu_known) {
        m = *mu;
        if (q0 <= 0) throw Error(ErrorKind::DegenerateDenominator, "all lagged values are zero");
        rep.alpha_hat = static_cast<double>((c - m * s0) / q0);
    } else {
        const long double den = used * q0 - s0 * s0;
        if (den <= 0) throw Error(ErrorKind::DegenerateDenominator, "lagged values are constant");
        rep.alpha_hat = static_cast<double>((used * c - s1 * s0) / den);
        m = static_cast<double>((q0 * s1 - s0 * c) / den);
        rep.mu_hat = m;
    }
    for (long s : times)
        rep.theta_hat.push_back(static_cast<double>(y[s]) - rep.alpha_hat * static_cast<double>(y[s - 1]) - m);
    finish_report(y, make_layout(Family::Innovational, times, sc.mu_known ? mu : std::nullopt), rep);
    return rep;
}

std::vector<double> innovational_limits(double alpha, double mu, const Series& y,
                                        const OutlierScenario& raw) {
    const OutlierScenario sc = raw.canonical();
    std::vector<double> out;
    for (long s : sc.times) out.push_back(static_cast<double>(y[s]) - alpha * static_cast<double>(y[s - 1]) - mu);
    return out;
}

AsymptoticLaw innovational_conditional_law(double alpha, double mu, const ModelSpec& model,
                                           const Series& y, const OutlierScenario& raw) {
    const OutlierScenario sc = raw.canonical();
    const ClsCovariance cc = cls_covariance(model);
    AsymptoticLaw law;
    law.limits = innovational_limits(alpha, mu, y, sc);
    law.sigma2_alpha = cc.sigma2_alpha;
    const auto m = static_cast<Eigen::Index>(sc.times.size());
    // theta_hat_i - limit_i = -(alpha_hat - alpha) Y_{s_i-1} - (mu_hat - mu)
    Eigen::MatrixXd C(m, 2);
    for (Eigen::Index i = 0; i < m; ++i) {
        C(i, 0) = static_cast<double>(y[sc.times[i] - 1]);
        C(i, 1) = 1.0;
    }
    if (sc.mu_known) {
        const Eigen::VectorXd d = C.col(0);
        law.cov = cc.sigma2_alpha * d * d.transpose();
    } else {
        law.cov = C * cc.b_mat * C.transpose();
    }
    return law;
}

ZMoments z_moments(double alpha, double theta, long k) {
    const double ak = std::pow(alpha, static_cast<double>(k));
    ZMoments z;
    z.mean = theta * ak;
    z.second = theta * theta * ak * ak - theta * ak * (ak - 1);
    if (k >= 1) {
        const double ap = std::pow(alpha, static_cast<double>(k - 1));
        z.lag_product = alpha * (theta * theta * ap * ap - theta * ap * (ap - 1));
    } else {
        z.lag_product = 0.0;
    }
    return z;
}

}  // namespace inar
