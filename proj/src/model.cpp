#include "inar/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace inar {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SampleTooShort: return "SampleTooShort";
    case ErrorKind::MissingMu: return "MissingMu";
    case ErrorKind::BadTimes: return "BadTimes";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::OptimizerFailed: return "OptimizerFailed";
    case ErrorKind::SingularMoment: return "SingularMoment";
    case ErrorKind::CampaignFailed: return "CampaignFailed";
    }
    return "Unknown";
}

Distribution Distribution::poisson(double lambda) {
    Distribution d;
    d.kind = Kind::Poisson;
    d.lambda = lambda;
    return d;
}

Distribution Distribution::pmf(std::vector<std::pair<long, double>> support) {
    Distribution d;
    d.kind = Kind::Pmf;
    d.support = std::move(support);
    return d;
}

Distribution Distribution::fixed(long value) {
    Distribution d;
    d.kind = Kind::Fixed;
    d.value = value;
    return d;
}

namespace {

double raw_moment(const Distribution& d, int order) {
    switch (d.kind) {
    case Distribution::Kind::Poisson: {
        const double l = d.lambda;
        if (order == 1) return l;
        if (order == 2) return l * l + l;
        return l * l * l + 3.0 * l * l + l;
    }
    case Distribution::Kind::Pmf: {
        double s = 0.0;
        for (auto [v, p] : d.support) s += p * std::pow(static_cast<double>(v), order);
        return s;
    }
    case Distribution::Kind::Fixed:
        return std::pow(static_cast<double>(d.value), order);
    }
    return 0.0;
}

}  // namespace

double Distribution::mean() const { return raw_moment(*this, 1); }
double Distribution::second_raw() const { return raw_moment(*this, 2); }
double Distribution::third_raw() const { return raw_moment(*this, 3); }

double Distribution::variance() const {
    const double m = mean();
    return std::max(0.0, second_raw() - m * m);
}

double Distribution::pgf(double s) const {
    switch (kind) {
    case Kind::Poisson: return std::exp(lambda * (s - 1.0));
    case Kind::Pmf: {
        double acc = 0.0;
        for (auto [v, p] : support) acc += p * std::pow(s, static_cast<double>(v));
        return acc;
    }
    case Kind::Fixed: return std::pow(s, static_cast<double>(value));
    }
    return 0.0;
}

void Distribution::validate() const {
    switch (kind) {
    case Kind::Poisson:
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw Error(ErrorKind::InvalidArgument, "poisson rate must be positive");
        return;
    case Kind::Pmf: {
        if (support.empty()) throw Error(ErrorKind::InvalidArgument, "empty pmf");
        double total = 0.0;
        for (auto [v, p] : support) {
            if (v < 0) throw Error(ErrorKind::InvalidArgument, "pmf support must be >= 0");
            if (!(p >= 0.0)) throw Error(ErrorKind::InvalidArgument, "pmf mass must be >= 0");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw Error(ErrorKind::InvalidArgument, "pmf masses must sum to 1");
        return;
    }
    case Kind::Fixed:
        if (value < 0) throw Error(ErrorKind::InvalidArgument, "fixed value must be >= 0");
        return;
    }
}

void Distribution::validate_innovation() const {
    validate();
    bool positive_mass = false;
    switch (kind) {
    case Kind::Poisson: positive_mass = true; break;
    case Kind::Pmf:
        for (auto [v, p] : support) positive_mass |= (v > 0 && p > 0.0);
        break;
    case Kind::Fixed: positive_mass = value > 0; break;
    }
    if (!positive_mass)
        throw Error(ErrorKind::InvalidArgument, "innovation must put mass on a positive value");
}

std::string Distribution::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
    case Kind::Poisson: os << "poisson:" << lambda; break;
    case Kind::Pmf: {
        os << "pmf:";
        for (size_t i = 0; i < support.size(); ++i) {
            if (i) os << ',';
            os << support[i].first << ':' << support[i].second;
        }
        break;
    }
    case Kind::Fixed: os << value; break;
    }
    return os.str();
}

namespace {

double to_double(const std::string& s) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "not a number: " + s);
    }
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not a number: " + s);
    return v;
}

long to_long(const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "not an integer: " + s);
    }
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: " + s);
    return v;
}

}  // namespace

Distribution parse_distribution(const std::string& text) {
    if (text.rfind("poisson:", 0) == 0) return Distribution::poisson(to_double(text.substr(8)));
    if (text.rfind("pmf:", 0) == 0) {
        std::vector<std::pair<long, double>> sup;
        std::stringstream ss(text.substr(4));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorKind::InvalidArgument, "pmf entries look like value:prob");
            sup.emplace_back(to_long(item.substr(0, colon)), to_double(item.substr(colon + 1)));
        }
        return Distribution::pmf(std::move(sup));
    }
    return Distribution::fixed(to_long(text));
}

void ModelSpec::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0,1)");
    innovation.validate_innovation();
    init.validate();
}

const char* family_name(Family f) {
    return f == Family::Additive ? "additive" : "innovational";
}

Family parse_family(const std::string& text) {
    if (text == "additive") return Family::Additive;
    if (text == "innovational") return Family::Innovational;
    throw Error(ErrorKind::InvalidArgument, "unknown outlier family: " + text);
}

OutlierScenario OutlierScenario::canonical() const {
    OutlierScenario out = *this;
    std::vector<size_t> idx(times.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return times[a] < times[b]; });
    for (size_t i = 0; i < idx.size(); ++i) {
        out.times[i] = times[idx[i]];
        if (sizes.size() == times.size()) out.sizes[i] = sizes[idx[i]];
    }
    return out;
}

const char* tag_name(ScenarioTag t) {
    switch (t) {
    case ScenarioTag::ADD1: return "ADD1";
    case ScenarioTag::ADD1M: return "ADD1M";
    case ScenarioTag::ADD2SEP: return "ADD2SEP";
    case ScenarioTag::ADD2SEPM: return "ADD2SEPM";
    case ScenarioTag::ADD2ADJ: return "ADD2ADJ";
    case ScenarioTag::ADD2ADJM: return "ADD2ADJM";
    case ScenarioTag::INN1: return "INN1";
    case ScenarioTag::INN1M: return "INN1M";
    case ScenarioTag::INN2: return "INN2";
    case ScenarioTag::INN2M: return "INN2M";
    }
    return "?";
}

ScenarioTag parse_tag(const std::string& text) {
    for (auto t : all_tags)
        if (text == tag_name(t)) return t;
    throw Error(ErrorKind::InvalidArgument, "unknown scenario tag: " + text);
}

bool is_additive(ScenarioTag t) {
    switch (t) {
    case ScenarioTag::ADD1: case ScenarioTag::ADD1M: case ScenarioTag::ADD2SEP:
    case ScenarioTag::ADD2SEPM: case ScenarioTag::ADD2ADJ: case ScenarioTag::ADD2ADJM:
        return true;
    default:
        return false;
    }
}

bool is_mu_known(ScenarioTag t) {
    switch (t) {
    case ScenarioTag::ADD1: case ScenarioTag::ADD2SEP: case ScenarioTag::ADD2ADJ:
    case ScenarioTag::INN1: case ScenarioTag::INN2:
        return true;
    default:
        return false;
    }
}

int outlier_count(ScenarioTag t) {
    switch (t) {
    case ScenarioTag::ADD1: case ScenarioTag::ADD1M:
    case ScenarioTag::INN1: case ScenarioTag::INN1M:
        return 1;
    default:
        return 2;
    }
}

ScenarioTag classify(const OutlierScenario& raw) {
    const OutlierScenario sc = raw.canonical();
    const auto& t = sc.times;
    if (t.empty() || t.size() > 2)
        throw Error(ErrorKind::BadTimes, "one or two outlier times are supported");
    if (t.size() == 2 && t[0] == t[1])
        throw Error(ErrorKind::BadTimes, "outlier times must be distinct");
    const bool mk = sc.mu_known;
    if (sc.family == Family::Additive) {
        if (t.size() == 1) return mk ? ScenarioTag::ADD1 : ScenarioTag::ADD1M;
        if (t[1] == t[0] + 1) return mk ? ScenarioTag::ADD2ADJ : ScenarioTag::ADD2ADJM;
        return mk ? ScenarioTag::ADD2SEP : ScenarioTag::ADD2SEPM;
    }
    if (t.size() == 1) return mk ? ScenarioTag::INN1 : ScenarioTag::INN1M;
    return mk ? ScenarioTag::INN2 : ScenarioTag::INN2M;
}

long minimum_n(ScenarioTag tag, const std::vector<long>& t) {
    const long s1 = t.front();
    const long s2 = t.back();
    switch (tag) {
    case ScenarioTag::ADD1: return s1 + 1;
    case ScenarioTag::ADD1M: return std::max(3L, s1 + 1);
    case ScenarioTag::ADD2SEP: return s2 + 1;
    case ScenarioTag::ADD2SEPM: return std::max(5L, s2 + 1);
    case ScenarioTag::ADD2ADJ: return s1 + 2;
    case ScenarioTag::ADD2ADJM: return std::max(3L, s1 + 2);
    case ScenarioTag::INN1: return std::max(3L, s1 + 1);
    case ScenarioTag::INN1M: return s1;
    case ScenarioTag::INN2: return std::max({3L, s1, s2});
    case ScenarioTag::INN2M: return std::max(s1, s2);
    }
    return 0;
}

ScenarioTag validate_scenario(const Series& y, const OutlierScenario& raw,
                              std::optional<double> mu_eps) {
    if (y.size() < 2) throw Error(ErrorKind::SampleTooShort, "series needs at least two values");
    for (long v : y)
        if (v < 0) throw Error(ErrorKind::InvalidArgument, "series values must be >= 0");
    const OutlierScenario sc = raw.canonical();
    const ScenarioTag tag = classify(sc);
    if (sc.mu_known && !mu_eps)
        throw Error(ErrorKind::MissingMu, "mu_known scenario needs the innovation mean");
    const long n = sample_size(y);
    const long need = minimum_n(tag, sc.times);
    if (n < need)
        throw Error(ErrorKind::SampleTooShort,
                    std::string(tag_name(tag)) + " needs n >= " + std::to_string(need) +
                        ", got " + std::to_string(n));
    if (sc.times.front() < 1)
        throw Error(ErrorKind::BadTimes, "outlier times must be >= 1");
    return tag;
}

bool EstimateReport::certificate_positive() const {
    return std::all_of(certificate.begin(), certificate.end(), [](double d) { return d > 0.0; });
}

double EstimateReport::gradient_norm() const {
    double m = 0.0;
    for (double g : gradient) m = std::max(m, std::abs(g));
    return m;
}

std::vector<double> EstimateReport::params() const {
    std::vector<double> p{alpha_hat};
    if (!mu_known && mu_hat) p.push_back(*mu_hat);
    p.insert(p.end(), theta_hat.begin(), theta_hat.end());
    return p;
}

}  // namespace inar
