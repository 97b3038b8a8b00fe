#include "inar/moments.hpp"

#include <cmath>

namespace inar {

StationaryMoments stationary_moments(const ModelSpec& model) {
    const double a = model.alpha;
    const double mu = model.mu();
    const double s2 = model.sigma2();
    const double e3 = model.innovation.third_raw();

    StationaryMoments m;
    m.m1 = mu / (1 - a);
    m.m2 = (s2 + a * mu) / (1 - a * a) + mu * mu / ((1 - a) * (1 - a));
    m.m3 = (e3 - 3 * s2 * (1 + mu) - mu * mu * mu + 2 * mu) / (1 - a * a * a)
         + 3 * (s2 + a * mu) / (1 - a * a)
         - 2 * mu / (1 - a)
         + 3 * mu * (s2 + a * mu) / ((1 - a) * (1 - a * a))
         + mu * mu * mu / std::pow(1 - a, 3);
    m.var = m.m2 - m.m1 * m.m1;
    return m;
}

double stationary_m3_recursive(const ModelSpec& model) {
    const double a = model.alpha;
    const double mu = model.mu();
    const double s2 = model.sigma2();
    const double e3 = model.innovation.third_raw();
    const double m1 = mu / (1 - a);
    const double m2 = (s2 + a * mu) / (1 - a * a) + mu * mu / ((1 - a) * (1 - a));
    // expand E(a o X + eps)^3 with the binomial thinning moments
    const double num = 3 * a * a * (1 - a) * m2 + 3 * a * a * mu * m2
                     + 3 * a * m1 * (s2 + mu * mu) + e3
                     + 3 * a * (1 - a) * mu * m1 + a * (1 - a) * (1 - 2 * a) * m1;
    return num / (1 - a * a * a);
}

ClsCovariance cls_covariance(const ModelSpec& model) {
    const StationaryMoments m = stationary_moments(model);
    const double a = model.alpha;
    const double s2 = model.sigma2();
    if (!(m.var > 0))
        throw Error(ErrorKind::SingularMoment, "stationary variance is not positive");

    ClsCovariance c;
    c.sigma2_alpha = (a * (1 - a) * m.m3 + s2 * m.m2) / (m.m2 * m.m2);

    Eigen::Matrix2d third, second;
    third << m.m3, m.m2, m.m2, m.m1;
    second << m.m2, m.m1, m.m1, 1.0;
    c.a_mat = a * (1 - a) * third + s2 * second;

    Eigen::Matrix2d minv;
    minv << 1.0, -m.m1, -m.m1, m.m2;
    minv /= m.var;
    c.b_mat = minv * c.a_mat * minv;
    return c;
}

double transient_mean(const ModelSpec& model, long k, double ex0) {
    const double a = model.alpha;
    const double ak = std::pow(a, static_cast<double>(k));
    return ak * ex0 + model.mu() * (1 - ak) / (1 - a);
}

double martingale_variance(const ModelSpec& model, long k, double ex0) {
    const double a = model.alpha;
    const double mu = model.mu();
    return a * mu * (1 - std::pow(a, static_cast<double>(k - 1)))
         + std::pow(a, static_cast<double>(k)) * (1 - a) * ex0 + model.sigma2();
}

PgfValue stationary_pgf(const ModelSpec& model, double s, double tol) {
    if (!(s >= 0.0 && s <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "pgf argument must lie in [0,1]");
    const double a = model.alpha;
    const double mu = model.mu();
    PgfValue out;
    out.value = model.innovation.pgf(s);
    double ak = a;
    // the k-th factor differs from 1 by about a^k (1-s) mu
    while (ak * (1 - s) * mu >= tol && out.factors < 100000) {
        out.value *= model.innovation.pgf(1 + (s - 1) * ak);
        ak *= a;
        ++out.factors;
    }
    return out;
}

}  // namespace inar
