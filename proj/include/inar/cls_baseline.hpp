#pragma once

#include <optional>

#include "inar/model.hpp"

namespace inar {

// Known innovation mean: sum (y_k - mu) y_{k-1} / sum y_{k-1}^2.
double cls_alpha(const Series& y, double mu);

struct JointCls {
    double alpha = 0;
    double mu = 0;
};

JointCls cls_joint(const Series& y);

// Report form used by the CLI and the harness for the clean model.
EstimateReport estimate_clean(const Series& y, std::optional<double> mu);

}  // namespace inar
