#include "inar/objective.hpp"

#include <algorithm>
#include <cmath>

namespace inar {

ResidualLayout make_layout(Family family, std::vector<long> times, std::optional<double> mu) {
    ResidualLayout L;
    L.family = family;
    L.times = std::move(times);
    std::sort(L.times.begin(), L.times.end());
    L.mu_known = mu.has_value();
    L.mu = mu.value_or(0.0);
    return L;
}

namespace {

// Walks k = 1..n and hands (k, r_k, J_k) to the visitor. J_k is dr_k/dp.
template <class Visit>
void walk(const Series& y, const ResidualLayout& L, const std::vector<double>& p, Visit&& visit) {
    const long n = sample_size(y);
    const int dim = L.dim();
    const int off = L.theta_offset();
    const double a = p[0];
    const double mu = L.mu_known ? L.mu : p[1];
    const bool add = L.family == Family::Additive;
    Eigen::VectorXd J(dim);
    for (long k = 1; k <= n; ++k) {
        double r = static_cast<double>(y[k]) - a * static_cast<double>(y[k - 1]) - mu;
        J.setZero();
        J[0] = -static_cast<double>(y[k - 1]);
        if (!L.mu_known) J[1] = -1.0;
        for (size_t i = 0; i < L.times.size(); ++i) {
            const double th = p[off + i];
            if (k == L.times[i]) {
                r -= th;
                J[off + i] -= 1.0;
            }
            if (add && k == L.times[i] + 1) {
                r += a * th;
                J[0] += th;
                J[off + i] += a;
            }
        }
        visit(k, r, J);
    }
}

}  // namespace

std::vector<double> residuals(const Series& y, const ResidualLayout& L, const std::vector<double>& p) {
    std::vector<double> out;
    out.reserve(y.size());
    walk(y, L, p, [&](long, double r, const Eigen::VectorXd&) { out.push_back(r); });
    return out;
}

double objective(const Series& y, const ResidualLayout& L, const std::vector<double>& p) {
    long double s = 0.0L;
    walk(y, L, p, [&](long, double r, const Eigen::VectorXd&) { s += static_cast<long double>(r) * r; });
    return static_cast<double>(s);
}

Eigen::VectorXd gradient(const Series& y, const ResidualLayout& L, const std::vector<double>& p) {
    const int dim = L.dim();
    std::vector<long double> g(dim, 0.0L);
    walk(y, L, p, [&](long, double r, const Eigen::VectorXd& J) {
        for (int i = 0; i < dim; ++i) g[i] += 2.0L * r * J[i];
    });
    Eigen::VectorXd out(dim);
    for (int i = 0; i < dim; ++i) out[i] = static_cast<double>(g[i]);
    return out;
}

Eigen::MatrixXd hessian(const Series& y, const ResidualLayout& L, const std::vector<double>& p) {
    const int dim = L.dim();
    const int off = L.theta_offset();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    walk(y, L, p, [&](long k, double r, const Eigen::VectorXd& J) {
        h.noalias() += 2.0 * J * J.transpose();
        if (L.family != Family::Additive) return;
        // d2 r_k / (da dtheta_i) = 1 at k = s_i + 1
        for (size_t i = 0; i < L.times.size(); ++i) {
            if (k == L.times[i] + 1) {
                h(0, off + i) += 2.0 * r;
                h(off + i, 0) += 2.0 * r;
            }
        }
    });
    return h;
}

std::vector<double> leading_minors(const Eigen::MatrixXd& h) {
    std::vector<double> out;
    for (Eigen::Index k = 1; k <= h.rows(); ++k) out.push_back(h.topLeftCorner(k, k).determinant());
    return out;
}

int newton_polish(const Series& y, const ResidualLayout& L, std::vector<double>& p, int max_iter) {
    int accepted = 0;
    Eigen::VectorXd g = gradient(y, L, p);
    for (int it = 0; it < max_iter; ++it) {
        const double gn = g.lpNorm<Eigen::Infinity>();
        if (gn == 0.0) break;
        Eigen::MatrixXd H = hessian(y, L, p);
        Eigen::VectorXd step = H.colPivHouseholderQr().solve(-g);
        if (!step.allFinite()) break;
        std::vector<double> q = p;
        for (int i = 0; i < L.dim(); ++i) q[i] += step[i];
        Eigen::VectorXd gq = gradient(y, L, q);
        if (!(gq.lpNorm<Eigen::Infinity>() < gn)) break;
        p = std::move(q);
        g = std::move(gq);
        ++accepted;
    }
    return accepted;
}

void finish_report(const Series& y, const ResidualLayout& L, EstimateReport& rep) {
    const std::vector<double> p = rep.params();
    rep.objective = objective(y, L, p);
    Eigen::VectorXd g = gradient(y, L, p);
    rep.gradient.assign(g.data(), g.data() + g.size());
    rep.certificate = leading_minors(hessian(y, L, p));
}

}  // namespace inar
