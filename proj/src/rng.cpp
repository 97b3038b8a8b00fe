#include "inar/rng.hpp"

#include <boost/random/discrete_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>
#include <boost/random/seed_seq.hpp>

namespace inar {

namespace {

std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Engine substream(std::uint64_t path_seed, std::uint64_t step, Stream kind) {
    boost::random::seed_seq seq{lo(path_seed), hi(path_seed), lo(step), hi(step),
                                static_cast<std::uint32_t>(kind)};
    return Engine(seq);
}

std::uint64_t replication_seed(std::uint64_t master, std::uint64_t rep) {
    boost::random::seed_seq seq{lo(master), hi(master), lo(rep), hi(rep), 0x7265u};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

long draw(const Distribution& d, Engine& eng) {
    switch (d.kind) {
    case Distribution::Kind::Poisson: {
        boost::random::poisson_distribution<long, double> p(d.lambda);
        return p(eng);
    }
    case Distribution::Kind::Pmf: {
        std::vector<double> w;
        w.reserve(d.support.size());
        for (const auto& e : d.support) w.push_back(e.second);
        boost::random::discrete_distribution<std::size_t, double> pick(w.begin(), w.end());
        return d.support[pick(eng)].first;
    }
    case Distribution::Kind::Fixed:
        return d.value;
    }
    return 0;
}

}  // namespace inar
