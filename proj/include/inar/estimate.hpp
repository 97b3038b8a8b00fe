#pragma once

#include <optional>

#include "inar/cls_additive.hpp"
#include "inar/model.hpp"

namespace inar {

// Routes to the clean, additive or innovational estimator.
EstimateReport estimate(const Series& y, const std::optional<OutlierScenario>& sc,
                        std::optional<double> mu, Method method = Method::Grid);

AsymptoticLaw conditional_law(double alpha, double mu, const ModelSpec& model,
                              const Series& y, const OutlierScenario& sc);

}  // namespace inar
