#pragma once

#include <vector>

#include "inar/model.hpp"
#include "inar/simulator.hpp"

namespace testing {

inline inar::OutlierScenario scenario(inar::Family f, std::vector<long> times, bool mu_known,
                                      std::vector<long> sizes = {}) {
    inar::OutlierScenario sc;
    sc.family = f;
    sc.times = std::move(times);
    sc.sizes = std::move(sizes);
    sc.mu_known = mu_known;
    return sc;
}

inline inar::ModelSpec poisson_model(double alpha = 0.5, double lambda = 1.0) {
    inar::ModelSpec m;
    m.alpha = alpha;
    m.innovation = inar::Distribution::poisson(lambda);
    m.init = inar::Distribution::poisson(lambda / (1 - alpha));
    return m;
}

// Scenario with the same shape as tag, outliers near the middle of an n-path.
inline inar::OutlierScenario shape_of(inar::ScenarioTag t, long s = 50) {
    using inar::Family;
    using inar::ScenarioTag;
    switch (t) {
    case ScenarioTag::ADD1: return scenario(Family::Additive, {s}, true, {10});
    case ScenarioTag::ADD1M: return scenario(Family::Additive, {s}, false, {10});
    case ScenarioTag::ADD2SEP: return scenario(Family::Additive, {s, s + 10}, true, {10, 6});
    case ScenarioTag::ADD2SEPM: return scenario(Family::Additive, {s, s + 10}, false, {10, 6});
    case ScenarioTag::ADD2ADJ: return scenario(Family::Additive, {s, s + 1}, true, {10, 6});
    case ScenarioTag::ADD2ADJM: return scenario(Family::Additive, {s, s + 1}, false, {10, 6});
    case ScenarioTag::INN1: return scenario(Family::Innovational, {s}, true, {10});
    case ScenarioTag::INN1M: return scenario(Family::Innovational, {s}, false, {10});
    case ScenarioTag::INN2: return scenario(Family::Innovational, {s, s + 10}, true, {10, 6});
    case ScenarioTag::INN2M: return scenario(Family::Innovational, {s, s + 10}, false, {10, 6});
    }
    return {};
}

inline inar::Series path(const inar::OutlierScenario& sc, long n, std::uint64_t seed,
                         const inar::ModelSpec& m = poisson_model()) {
    inar::SimConfig cfg;
    cfg.model = m;
    cfg.n = n;
    cfg.seed = seed;
    cfg.scenario = sc;
    return inar::simulate(cfg);
}

}  // namespace testing
