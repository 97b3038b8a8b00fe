#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "inar/model.hpp"
#include "inar/poly.hpp"

namespace inar {

enum class Method { Grid, Poly };
Method parse_method(const std::string& text);

// Q~(a) = sum w_k^2 - t(a)^T adj(a) t(a) / D(a), the CLS objective with the
// linear parameters (mu', theta') minimized out in closed form.
class ProfileObjective {
public:
    ProfileObjective(const Series& y, ScenarioTag tag, std::vector<long> times,
                     std::optional<double> mu);

    ScenarioTag tag() const { return tag_; }
    double value(double a) const;
    // Minimizing linear parameters at a, ordered ([mu'], theta_1, ...).
    std::vector<double> backout(double a) const;
    // Inverse of the Gram matrix from the adjugate and determinant.
    Eigen::MatrixXd inverse(double a) const;
    const Poly& determinant() const { return det_; }
    // R(a) = D(a) Q~(a), a polynomial.
    Poly numerator() const;

private:
    Eigen::VectorXd t_at(double a) const;
    Eigen::MatrixXd adj_at(double a) const;

    ScenarioTag tag_;
    Poly base_;
    Poly det_;
    std::vector<Poly> t_;
    std::vector<std::vector<Poly>> adj_;
};

// Coefficient c_n of the leading term in the profile objective. The
// minimizer exists only when it is positive.
double leading_coefficient(const Series& y, ScenarioTag tag, const std::vector<long>& times);

EstimateReport estimate_additive(const Series& y, const OutlierScenario& sc,
                                 std::optional<double> mu, Method method = Method::Grid);

// Almost-sure limits of the outlier size estimates, given the true alpha and
// innovation mean and the realized path.
std::vector<double> additive_limits(double alpha, double mu, const Series& y,
                                    const OutlierScenario& sc);

// Limits plus the covariance of the conditional normal law of
// sqrt(n) (theta_hat - limit).
AsymptoticLaw additive_conditional_law(double alpha, double mu, const ModelSpec& model,
                                       const Series& y, const OutlierScenario& sc);

}  // namespace inar
