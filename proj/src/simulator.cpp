#include "inar/simulator.hpp"

#include <boost/random/bernoulli_distribution.hpp>

#include "inar/rng.hpp"

namespace inar {

namespace {

void check_config(const SimConfig& cfg) {
    cfg.model.validate();
    if (cfg.n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
    if (!cfg.scenario) return;
    const auto& sc = *cfg.scenario;
    if (sc.times.empty()) throw Error(ErrorKind::BadTimes, "scenario without outlier times");
    if (sc.sizes.size() != sc.times.size())
        throw Error(ErrorKind::InvalidArgument, "one size per outlier time is required");
    for (long t : sc.times)
        if (t < 1 || t > cfg.n) throw Error(ErrorKind::BadTimes, "outlier time outside 1..n");
    for (long v : sc.sizes)
        if (v < 0) throw Error(ErrorKind::InvalidArgument, "outlier sizes must be >= 0");
}

long initial_value(const SimConfig& cfg) {
    if (cfg.model.init.kind == Distribution::Kind::Fixed) return cfg.model.init.value;
    Engine eng = substream(cfg.seed, 0, Stream::Init);
    return draw(cfg.model.init, eng);
}

long thin(long count, boost::random::bernoulli_distribution<double>& b, Engine& eng) {
    long s = 0;
    for (long j = 0; j < count; ++j) s += b(eng) ? 1 : 0;
    return s;
}

long innovation(const SimConfig& cfg, long k) {
    Engine eng = substream(cfg.seed, static_cast<std::uint64_t>(k), Stream::Innovation);
    return draw(cfg.model.innovation, eng);
}

}  // namespace

Series simulate_inar1(const SimConfig& cfg) {
    check_config(cfg);
    boost::random::bernoulli_distribution<double> b(cfg.model.alpha);
    Series x(cfg.n + 1);
    x[0] = initial_value(cfg);
    for (long k = 1; k <= cfg.n; ++k) {
        Engine eng = substream(cfg.seed, static_cast<std::uint64_t>(k), Stream::Thinning);
        x[k] = thin(x[k - 1], b, eng) + innovation(cfg, k);
    }
    return x;
}

Series contaminate_additive(const Series& x, const OutlierScenario& sc) {
    if (sc.family != Family::Additive)
        throw Error(ErrorKind::InvalidArgument, "additive scenario expected");
    if (sc.sizes.size() != sc.times.size())
        throw Error(ErrorKind::InvalidArgument, "one size per outlier time is required");
    Series y = x;
    const long n = sample_size(x);
    for (size_t i = 0; i < sc.times.size(); ++i) {
        const long t = sc.times[i];
        if (t < 0 || t > n) throw Error(ErrorKind::BadTimes, "outlier time outside the series");
        y[t] += sc.sizes[i];
    }
    return y;
}

DecomposedPath simulate_innovational(const SimConfig& cfg) {
    check_config(cfg);
    if (!cfg.scenario || cfg.scenario->family != Family::Innovational)
        throw Error(ErrorKind::InvalidArgument, "innovational scenario expected");
    const OutlierScenario sc = cfg.scenario->canonical();
    const size_t m = sc.times.size();
    boost::random::bernoulli_distribution<double> b(cfg.model.alpha);

    DecomposedPath p;
    p.x.assign(cfg.n + 1, 0);
    p.z.assign(m, Series(cfg.n + 1, 0));
    p.y.assign(cfg.n + 1, 0);
    p.x[0] = initial_value(cfg);
    p.y[0] = p.x[0];
    for (long k = 1; k <= cfg.n; ++k) {
        Engine eng = substream(cfg.seed, static_cast<std::uint64_t>(k), Stream::Thinning);
        p.x[k] = thin(p.x[k - 1], b, eng) + innovation(cfg, k);
        long y = p.x[k];
        for (size_t i = 0; i < m; ++i) {
            auto& z = p.z[i];
            if (k < sc.times[i]) z[k] = 0;
            else if (k == sc.times[i]) z[k] = sc.sizes[i];
            else z[k] = thin(z[k - 1], b, eng);
            y += z[k];
        }
        p.y[k] = y;
    }
    return p;
}

Series simulate_innovational_direct(const SimConfig& cfg) {
    check_config(cfg);
    if (!cfg.scenario || cfg.scenario->family != Family::Innovational)
        throw Error(ErrorKind::InvalidArgument, "innovational scenario expected");
    const auto& sc = *cfg.scenario;
    boost::random::bernoulli_distribution<double> b(cfg.model.alpha);
    Series y(cfg.n + 1);
    y[0] = initial_value(cfg);
    for (long k = 1; k <= cfg.n; ++k) {
        Engine eng = substream(cfg.seed, static_cast<std::uint64_t>(k), Stream::Thinning);
        long eta = innovation(cfg, k);
        for (size_t i = 0; i < sc.times.size(); ++i)
            if (sc.times[i] == k) eta += sc.sizes[i];
        y[k] = thin(y[k - 1], b, eng) + eta;
    }
    return y;
}

Series simulate(const SimConfig& cfg) {
    if (!cfg.scenario) return simulate_inar1(cfg);
    if (cfg.scenario->family == Family::Additive) {
        SimConfig clean = cfg;
        check_config(cfg);
        clean.scenario.reset();
        return contaminate_additive(simulate_inar1(clean), *cfg.scenario);
    }
    return simulate_innovational(cfg).y;
}

}  // namespace inar
