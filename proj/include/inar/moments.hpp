#pragma once

#include <Eigen/Dense>

#include "inar/model.hpp"

namespace inar {

struct StationaryMoments {
    double m1 = 0, m2 = 0, m3 = 0, var = 0;
};

struct ClsCovariance {
    double sigma2_alpha = 0;
    Eigen::Matrix2d a_mat;
    Eigen::Matrix2d b_mat;
};

StationaryMoments stationary_moments(const ModelSpec& model);

// Third moment from the thinning recursion, written differently from the
// closed form. Handy as a cross-check.
double stationary_m3_recursive(const ModelSpec& model);

ClsCovariance cls_covariance(const ModelSpec& model);

// E X_k and Var M_k for M_k = X_k - alpha X_{k-1} - mu, started from E X_0.
double transient_mean(const ModelSpec& model, long k, double ex0);
double martingale_variance(const ModelSpec& model, long k, double ex0);

// Stationary pgf by the truncated product; K is the number of factors used.
struct PgfValue {
    double value = 0;
    long factors = 0;
};
PgfValue stationary_pgf(const ModelSpec& model, double s, double tol = 1e-15);

}  // namespace inar
