#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "inar/model.hpp"

namespace inar {

// Describes the CLS residuals
//   r_k = y_k - a y_{k-1} - mu - sum_i a_{k,i} theta_i + a sum_i b_{k,i} theta_i
// for k = 1..n. Parameter order is (a, [mu], theta_1, ...).
struct ResidualLayout {
    Family family = Family::Additive;
    std::vector<long> times;  // sorted; empty for the clean model
    bool mu_known = true;
    double mu = 0.0;

    int dim() const { return 1 + (mu_known ? 0 : 1) + static_cast<int>(times.size()); }
    int theta_offset() const { return mu_known ? 1 : 2; }
};

ResidualLayout make_layout(Family family, std::vector<long> times, std::optional<double> mu);

std::vector<double> residuals(const Series& y, const ResidualLayout& L, const std::vector<double>& p);
double objective(const Series& y, const ResidualLayout& L, const std::vector<double>& p);
Eigen::VectorXd gradient(const Series& y, const ResidualLayout& L, const std::vector<double>& p);
// Exact Hessian, including the r * d2r term that the additive terms produce.
Eigen::MatrixXd hessian(const Series& y, const ResidualLayout& L, const std::vector<double>& p);

std::vector<double> leading_minors(const Eigen::MatrixXd& h);

// Newton steps on the full objective; a step is kept only when it lowers
// the gradient norm. Returns the number of accepted steps.
int newton_polish(const Series& y, const ResidualLayout& L, std::vector<double>& p, int max_iter = 20);

// Fills objective, gradient and certificate of a report from its parameters.
void finish_report(const Series& y, const ResidualLayout& L, EstimateReport& rep);

}  // namespace inar
