#pragma once

#include <cstdint>

#include <boost/random/taus88.hpp>

#include "inar/model.hpp"

namespace inar {

using Engine = boost::random::taus88;

// Each time step owns independent substreams, one per kind, so adding an
// outlier never shifts the draws of the clean process.
enum class Stream : std::uint32_t { Init = 0, Innovation = 1, Thinning = 2 };

Engine substream(std::uint64_t path_seed, std::uint64_t step, Stream kind);

// Seed of replication r in a campaign. Depends on (master, r) only.
std::uint64_t replication_seed(std::uint64_t master, std::uint64_t rep);

long draw(const Distribution& d, Engine& eng);

}  // namespace inar
