#pragma once

#include <optional>
#include <vector>

#include "inar/model.hpp"

namespace inar {

// Closed-form CLS: the outlier sizes absorb the residuals at their own
// times, so alpha (and mu) come from the remaining terms.
EstimateReport estimate_innovational(const Series& y, const OutlierScenario& sc,
                                     std::optional<double> mu);

// Y_{s_i} - alpha Y_{s_i - 1} - mu for each outlier time.
std::vector<double> innovational_limits(double alpha, double mu, const Series& y,
                                        const OutlierScenario& sc);

AsymptoticLaw innovational_conditional_law(double alpha, double mu, const ModelSpec& model,
                                           const Series& y, const OutlierScenario& sc);

// Moments of the outlier process Z started at Z_s = theta, k steps later.
struct ZMoments {
    double mean;
    double second;
    double lag_product;  // E Z_{s+k-1} Z_{s+k}, k >= 1
};
ZMoments z_moments(double alpha, double theta, long k);

}  // namespace inar
