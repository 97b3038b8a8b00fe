#include "inar/cls_additive.hpp"

#include <cmath>
#include <limits>

#include "inar/moments.hpp"
#include "inar/objective.hpp"

namespace inar {

Method parse_method(const std::string& text) {
    if (text == "grid") return Method::Grid;
    if (text == "poly") return Method::Poly;
    throw Error(ErrorKind::InvalidArgument, "unknown method: " + text);
}

ProfileObjective::ProfileObjective(const Series& y, ScenarioTag tag, std::vector<long> times,
                                   std::optional<double> mu)
    : tag_(tag) {
    if (!is_additive(tag)) throw Error(ErrorKind::InvalidArgument, "profile needs an additive scenario");
    std::sort(times.begin(), times.end());
    const long n = sample_size(y);
    const double nn = static_cast<double>(n);
    long double s0 = 0, s1 = 0, q0 = 0, q1 = 0, c = 0;
    for (long k = 1; k <= n; ++k) {
        const long double p = y[k - 1], q = y[k];
        s0 += p;
        s1 += q;
        q0 += p * p;
        q1 += q * q;
        c += p * q;
    }
    const bool mk = mu.has_value();
    const double m = mu.value_or(0.0);
    if (mk)
        base_ = Poly{static_cast<double>(q1 - 2 * m * s1 + n * m * m),
                     static_cast<double>(-2 * c + 2 * m * s0), static_cast<double>(q0)};
    else
        base_ = Poly{static_cast<double>(q1), static_cast<double>(-2 * c), static_cast<double>(q0)};

    auto tt = [&](long s) {
        const double ys = static_cast<double>(y[s]);
        const double nb = static_cast<double>(y[s - 1] + y[s + 1]);
        return mk ? Poly{ys - m, -nb + m, ys} : Poly{ys, -nb, ys};
    };
    const Poly tmu{static_cast<double>(s1), static_cast<double>(-s0)};
    const Poly p2{1, 0, 1};   // 1 + a^2
    const Poly om{1, -1};     // 1 - a
    const long a1 = times.front();
    const long a2 = times.back();

    switch (tag) {
    case ScenarioTag::ADD1:
        t_ = {tt(a1)};
        adj_ = {{Poly{1}}};
        det_ = p2;
        break;
    case ScenarioTag::ADD1M:
        t_ = {tmu, tt(a1)};
        adj_ = {{p2, -1.0 * om}, {-1.0 * om, Poly{nn}}};
        det_ = Poly{nn - 1, 2, nn - 1};
        break;
    case ScenarioTag::ADD2SEP:
        t_ = {tt(a1), tt(a2)};
        adj_ = {{p2, Poly{0}}, {Poly{0}, p2}};
        det_ = p2 * p2;
        break;
    case ScenarioTag::ADD2ADJ:
        t_ = {tt(a1), tt(a1 + 1)};
        adj_ = {{p2, Poly{0, 1}}, {Poly{0, 1}, p2}};
        det_ = Poly{1, 0, 1, 0, 1};
        break;
    case ScenarioTag::ADD2SEPM: {
        const Poly u = -1.0 * (om * p2);
        const Poly w = nn * p2 - om * om;
        const Poly v = om * om;
        t_ = {tmu, tt(a1), tt(a2)};
        adj_ = {{p2 * p2, u, u}, {u, w, v}, {u, v, w}};
        det_ = p2 * Poly{nn - 2, 4, nn - 2};
        break;
    }
    case ScenarioTag::ADD2ADJM: {
        const Poly q{1, 1, 1};
        const Poly u = -1.0 * (om * q);
        const Poly w = nn * p2 - om * om;
        const Poly v = om * om + Poly{0, nn};
        t_ = {tmu, tt(a1), tt(a1 + 1)};
        adj_ = {{Poly{1, 0, 1, 0, 1}, u, u}, {u, w, v}, {u, v, w}};
        det_ = q * Poly{nn - 2, -(nn - 4), nn - 2};
        break;
    }
    default:
        break;
    }
}

Eigen::VectorXd ProfileObjective::t_at(double a) const {
    Eigen::VectorXd t(t_.size());
    for (size_t i = 0; i < t_.size(); ++i) t[i] = t_[i](a);
    return t;
}

Eigen::MatrixXd ProfileObjective::adj_at(double a) const {
    const auto d = static_cast<Eigen::Index>(adj_.size());
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = adj_[i][j](a);
    return m;
}

double ProfileObjective::value(double a) const {
    const Eigen::VectorXd t = t_at(a);
    return base_(a) - t.dot(adj_at(a) * t) / det_(a);
}

std::vector<double> ProfileObjective::backout(double a) const {
    const Eigen::VectorXd v = adj_at(a) * t_at(a) / det_(a);
    return {v.data(), v.data() + v.size()};
}

Eigen::MatrixXd ProfileObjective::inverse(double a) const { return adj_at(a) / det_(a); }

Poly ProfileObjective::numerator() const {
    Poly quad{0};
    for (size_t i = 0; i < t_.size(); ++i)
        for (size_t j = 0; j < t_.size(); ++j) quad = quad + t_[i] * adj_[i][j] * t_[j];
    return base_ * det_ - quad;
}

double leading_coefficient(const Series& y, ScenarioTag tag, const std::vector<long>& raw) {
    std::vector<long> times = raw;
    std::sort(times.begin(), times.end());
    const long n = sample_size(y);
    long double s0 = 0, q0 = 0;
    for (long k = 1; k <= n; ++k) {
        s0 += y[k - 1];
        q0 += static_cast<long double>(y[k - 1]) * y[k - 1];
    }
    const long double ya = y[times.front()];
    const long double yb = (tag == ScenarioTag::ADD2ADJ || tag == ScenarioTag::ADD2ADJM)
                               ? y[times.front() + 1]
                               : y[times.back()];
    long double c = 0;
    switch (tag) {
    case ScenarioTag::ADD1: c = q0 - ya * ya; break;
    case ScenarioTag::ADD1M: c = (n - 1) * q0 - s0 * s0 + 2 * ya * s0 - n * ya * ya; break;
    case ScenarioTag::ADD2SEP:
    case ScenarioTag::ADD2ADJ: c = q0 - ya * ya - yb * yb; break;
    case ScenarioTag::ADD2SEPM:
    case ScenarioTag::ADD2ADJM:
        c = (n - 2) * q0 - s0 * s0 - (n - 1) * (ya * ya + yb * yb) + 2 * (ya + yb) * s0 - 2 * ya * yb;
        break;
    default: throw Error(ErrorKind::InvalidArgument, "additive scenario expected");
    }
    return static_cast<double>(c);
}

namespace {

struct Bracket {
    double lo, hi;
};

Bracket grid_bracket(const ProfileObjective& P) {
    constexpr int N = 4001;
    constexpr double lo = -1.0, hi = 2.0;
    const double h = (hi - lo) / (N - 1);
    int best = 0;
    double fbest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i) {
        const double f = P.value(lo + h * i);
        if (f < fbest) {  // strict: ties keep the smallest a
            fbest = f;
            best = i;
        }
    }
    if (best > 0 && best < N - 1) return {lo + h * (best - 1), lo + h * (best + 1)};

    // minimizer lies beyond the grid; walk outwards with doubling steps
    const double dir = best == 0 ? -1.0 : 1.0;
    double prev = lo + h * (best == 0 ? 1 : N - 2);
    double x = lo + h * best;
    double fx = fbest;
    double step = h;
    for (int it = 0; it < 80; ++it) {
        step *= 2;
        const double x2 = x + dir * step;
        const double f2 = P.value(x2);
        if (!(f2 < fx)) return {std::min(prev, x2), std::max(prev, x2)};
        prev = x;
        x = x2;
        fx = f2;
    }
    throw Error(ErrorKind::OptimizerFailed, "profile objective has no bracketed minimum");
}

double golden(const ProfileObjective& P, Bracket b, int& iters) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = b.lo, d = b.hi;
    double x1 = d - g * (d - a), x2 = a + g * (d - a);
    double f1 = P.value(x1), f2 = P.value(x2);
    while (d - a > 1e-12 && iters < 500) {
        ++iters;
        if (f1 <= f2) {
            d = x2;
            x2 = x1;
            f2 = f1;
            x1 = d - g * (d - a);
            f1 = P.value(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (d - a);
            f2 = P.value(x2);
        }
    }
    return 0.5 * (a + d);
}

double poly_minimizer(const ProfileObjective& P) {
    const Poly R = P.numerator();
    const Poly& D = P.determinant();
    const Poly crit = R.derivative() * D - R * D.derivative();
    double best = std::numeric_limits<double>::quiet_NaN();
    double fbest = std::numeric_limits<double>::infinity();
    for (double r : real_roots(crit)) {
        const double f = P.value(r);
        if (f < fbest) {
            fbest = f;
            best = r;
        }
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::OptimizerFailed, "no real critical point");
    return best;
}

}  // namespace

EstimateReport estimate_additive(const Series& y, const OutlierScenario& raw,
                                 std::optional<double> mu, Method method) {
    const OutlierScenario sc = raw.canonical();
    if (sc.family != Family::Additive)
        throw Error(ErrorKind::InvalidArgument, "additive scenario expected");
    const ScenarioTag tag = validate_scenario(y, sc, sc.mu_known ? mu : std::nullopt);
    const std::optional<double> m = sc.mu_known ? mu : std::nullopt;
    if (!(leading_coefficient(y, tag, sc.times) > 0))
        throw Error(ErrorKind::DegenerateDenominator,
                    std::string(tag_name(tag)) + ": leading coefficient is not positive");

    const ProfileObjective P(y, tag, sc.times, m);
    EstimateReport rep;
    rep.tag = tag;
    rep.times = sc.times;
    rep.mu_known = sc.mu_known;

    double a = 0.0;
    if (method == Method::Grid) {
        const Bracket b = grid_bracket(P);
        rep.optimizer.method = "grid+golden";
        rep.optimizer.bracket_lo = b.lo;
        rep.optimizer.bracket_hi = b.hi;
        a = golden(P, b, rep.optimizer.iterations);
    } else {
        rep.optimizer.method = "poly";
        a = poly_minimizer(P);
        rep.optimizer.bracket_lo = rep.optimizer.bracket_hi = a;
    }

    const ResidualLayout L = make_layout(Family::Additive, sc.times, m);
    std::vector<double> p{a};
    for (double v : P.backout(a)) p.push_back(v);
    rep.optimizer.iterations += newton_polish(y, L, p);

    rep.alpha_hat = p[0];
    const std::vector<double> v = P.backout(rep.alpha_hat);
    size_t i = 0;
    if (!sc.mu_known) rep.mu_hat = v[i++];
    for (; i < v.size(); ++i) rep.theta_hat.push_back(v[i]);
    for (double x : rep.params())
        if (!std::isfinite(x)) throw Error(ErrorKind::OptimizerFailed, "non-finite estimate");
    finish_report(y, L, rep);
    return rep;
}

namespace {

// Limit of one isolated additive outlier and its derivatives in (alpha, mu).
struct SingleLimit {
    double value, d_alpha, d_mu;
};

SingleLimit single_limit(double a, double mu, const Series& y, long s) {
    const double q = 1 + a * a;
    const double S = static_cast<double>(y[s - 1] + y[s + 1]);
    SingleLimit out;
    out.value = static_cast<double>(y[s]) - a / q * S - (1 - a) / q * mu;
    out.d_alpha = ((a * a - 1) * S + (1 + 2 * a - a * a) * mu) / (q * q);
    out.d_mu = -(1 - a) / q;
    return out;
}

// Adjacent pair at (s, s+1): limits and the Jacobian rows in (alpha, mu).
void adjacent_limit(double a, double mu, const Series& y, long s, double lim[2], double jac[2][2]) {
    const double q = 1 + a * a + a * a * a * a;
    const double yl = static_cast<double>(y[s - 1]);
    const double yr = static_cast<double>(y[s + 2]);
    lim[0] = y[s] + (-a * (1 + a * a) * yl - a * a * yr - (1 - a * a * a) * mu) / q;
    lim[1] = y[s + 1] + (-a * a * yl - a * (1 + a * a) * yr - (1 - a * a * a) * mu) / q;
    const double p1 = (a * a - 1) * (a * a * a * a + 3 * a * a + 1);
    const double p2 = 2 * a * (a * a * a * a - 1);
    const double pm = a * (2 - a) * std::pow(1 + a + a * a, 2);
    jac[0][0] = (p1 * yl + p2 * yr + pm * mu) / (q * q);
    jac[1][0] = (p2 * yl + p1 * yr + pm * mu) / (q * q);
    jac[0][1] = jac[1][1] = (a * a * a - 1) / q;
}

}  // namespace

std::vector<double> additive_limits(double alpha, double mu, const Series& y,
                                    const OutlierScenario& raw) {
    const OutlierScenario sc = raw.canonical();
    const ScenarioTag tag = classify(sc);
    if (!is_additive(tag)) throw Error(ErrorKind::InvalidArgument, "additive scenario expected");
    if (tag == ScenarioTag::ADD2ADJ || tag == ScenarioTag::ADD2ADJM) {
        double lim[2], jac[2][2];
        adjacent_limit(alpha, mu, y, sc.times[0], lim, jac);
        return {lim[0], lim[1]};
    }
    std::vector<double> out;
    for (long s : sc.times) out.push_back(single_limit(alpha, mu, y, s).value);
    return out;
}

AsymptoticLaw additive_conditional_law(double alpha, double mu, const ModelSpec& model,
                                       const Series& y, const OutlierScenario& raw) {
    const OutlierScenario sc = raw.canonical();
    const ScenarioTag tag = classify(sc);
    if (!is_additive(tag)) throw Error(ErrorKind::InvalidArgument, "additive scenario expected");
    const ClsCovariance cc = cls_covariance(model);
    const int m = outlier_count(tag);

    Eigen::MatrixXd jac(m, 2);
    AsymptoticLaw law;
    if (tag == ScenarioTag::ADD2ADJ || tag == ScenarioTag::ADD2ADJM) {
        double lim[2], j[2][2];
        adjacent_limit(alpha, mu, y, sc.times[0], lim, j);
        law.limits = {lim[0], lim[1]};
        jac << j[0][0], j[0][1], j[1][0], j[1][1];
    } else {
        for (int i = 0; i < m; ++i) {
            const SingleLimit s = single_limit(alpha, mu, y, sc.times[i]);
            law.limits.push_back(s.value);
            jac(i, 0) = s.d_alpha;
            jac(i, 1) = s.d_mu;
        }
    }
    law.sigma2_alpha = cc.sigma2_alpha;
    if (is_mu_known(tag)) {
        const Eigen::VectorXd d = jac.col(0);
        law.cov = cc.sigma2_alpha * d * d.transpose();
    } else {
        law.cov = jac * cc.b_mat * jac.transpose();
    }
    return law;
}

}  // namespace inar
