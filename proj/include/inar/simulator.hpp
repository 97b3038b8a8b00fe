#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "inar/model.hpp"

namespace inar {

struct SimConfig {
    ModelSpec model;
    long n = 100;
    std::uint64_t seed = 0;
    std::optional<OutlierScenario> scenario;
};

struct DecomposedPath {
    Series x;
    std::vector<Series> z;  // one per outlier, in time order
    Series y;
};

Series simulate_inar1(const SimConfig& cfg);

Series contaminate_additive(const Series& x, const OutlierScenario& sc);

// Builds X and the Z processes from one shared thinning stream per step.
DecomposedPath simulate_innovational(const SimConfig& cfg);

// Y_k = sum_{j<=Y_{k-1}} xi_{k,j} + eps_k + outlier terms, same draws as above.
Series simulate_innovational_direct(const SimConfig& cfg);

// Observed series for whatever scenario the config carries.
Series simulate(const SimConfig& cfg);

}  // namespace inar
