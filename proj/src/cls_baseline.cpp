#include "inar/cls_baseline.hpp"

#include "inar/objective.hpp"

namespace inar {

namespace {

struct Sums {
    long double s0 = 0, s1 = 0, q0 = 0, c = 0;
    long n = 0;
};

Sums lag_sums(const Series& y) {
    if (y.size() < 3) throw Error(ErrorKind::SampleTooShort, "clean CLS needs n >= 2");
    Sums s;
    s.n = sample_size(y);
    for (long k = 1; k <= s.n; ++k) {
        const long double prev = y[k - 1], cur = y[k];
        s.s0 += prev;
        s.s1 += cur;
        s.q0 += prev * prev;
        s.c += prev * cur;
    }
    return s;
}

}  // namespace

double cls_alpha(const Series& y, double mu) {
    const Sums s = lag_sums(y);
    if (s.q0 <= 0) throw Error(ErrorKind::DegenerateDenominator, "all lagged values are zero");
    return static_cast<double>((s.c - mu * s.s0) / s.q0);
}

JointCls cls_joint(const Series& y) {
    const Sums s = lag_sums(y);
    const long double den = s.n * s.q0 - s.s0 * s.s0;
    if (den <= 0) throw Error(ErrorKind::DegenerateDenominator, "lagged values are constant");
    JointCls out;
    out.alpha = static_cast<double>((s.n * s.c - s.s1 * s.s0) / den);
    out.mu = static_cast<double>((s.q0 * s.s1 - s.s0 * s.c) / den);
    return out;
}

EstimateReport estimate_clean(const Series& y, std::optional<double> mu) {
    EstimateReport rep;
    rep.mu_known = mu.has_value();
    if (mu) {
        rep.alpha_hat = cls_alpha(y, *mu);
    } else {
        const JointCls j = cls_joint(y);
        rep.alpha_hat = j.alpha;
        rep.mu_hat = j.mu;
    }
    rep.optimizer.method = "closed_form";
    finish_report(y, make_layout(Family::Additive, {}, mu), rep);
    return rep;
}

}  // namespace inar
