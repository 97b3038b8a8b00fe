#include "inar/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace inar {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s == "nan") return std::nan("");
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error(ErrorKind::InvalidArgument, "bad number: " + s);
    return v;
}

void write_series_csv(std::ostream& os, const Series& y) {
    os << "y\n";
    for (long v : y) os << v << '\n';
}

Series read_series_csv(std::istream& is) {
    Series y;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line == "y") {
            first = false;
            continue;
        }
        first = false;
        long v = 0;
        auto res = std::from_chars(line.data(), line.data() + line.size(), v);
        if (res.ec != std::errc() || res.ptr != line.data() + line.size() || v < 0)
            throw Error(ErrorKind::InvalidArgument, "bad series value: " + line);
        y.push_back(v);
    }
    return y;
}

nlohmann::json series_to_json(const Series& y) { return nlohmann::json(y); }

Series series_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "series JSON must be an array");
    Series y;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0)
            throw Error(ErrorKind::InvalidArgument, "series values must be nonnegative integers");
        y.push_back(v.get<long>());
    }
    return y;
}

Series read_series(std::istream& is) {
    std::stringstream buf;
    buf << is.rdbuf();
    const std::string text = buf.str();
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '[') {
        try {
            return series_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::InvalidArgument, e.what());
        }
    }
    std::istringstream in(text);
    return read_series_csv(in);
}

nlohmann::json report_to_json(const EstimateReport& r) {
    nlohmann::json j;
    j["scenario"] = r.tag ? tag_name(*r.tag) : "none";
    j["times"] = r.times;
    j["mu_known"] = r.mu_known;
    j["alpha_hat"] = r.alpha_hat;
    if (r.mu_hat) j["mu_hat"] = *r.mu_hat;
    j["theta_hat"] = r.theta_hat;
    j["objective"] = r.objective;
    j["gradient"] = r.gradient;
    j["certificate"] = r.certificate;
    j["certificate_positive"] = r.certificate_positive();
    j["optimizer"] = {{"method", r.optimizer.method},
                      {"iterations", r.optimizer.iterations},
                      {"bracket", {r.optimizer.bracket_lo, r.optimizer.bracket_hi}}};
    return j;
}

}  // namespace inar
