#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "inar/estimate.hpp"
#include "inar/io.hpp"
#include "inar/mc.hpp"
#include "inar/moments.hpp"
#include "inar/simulator.hpp"

namespace inar {

namespace {

constexpr int exit_validation = 2;
constexpr int exit_degenerate = 3;
constexpr int exit_thresholds = 4;

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::SingularMoment:
    case ErrorKind::OptimizerFailed:
        return exit_degenerate;
    case ErrorKind::CampaignFailed:
        return exit_thresholds;
    default:
        return exit_validation;
    }
}

// "additive:s=50:theta=10,additive:s=60:theta=6"
OutlierScenario parse_outliers(const std::string& text) {
    OutlierScenario sc;
    std::stringstream items(text);
    std::string item;
    bool first = true;
    while (std::getline(items, item, ',')) {
        std::stringstream parts(item);
        std::string part;
        std::getline(parts, part, ':');
        const Family f = parse_family(part);
        if (!first && f != sc.family)
            throw Error(ErrorKind::InvalidArgument, "all outliers must share one family");
        sc.family = f;
        first = false;
        long s = -1, theta = -1;
        while (std::getline(parts, part, ':')) {
            const auto eq = part.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad outlier field: " + part);
            const std::string key = part.substr(0, eq);
            const long v = std::stol(part.substr(eq + 1));
            if (key == "s") s = v;
            else if (key == "theta") theta = v;
            else throw Error(ErrorKind::InvalidArgument, "bad outlier field: " + part);
        }
        if (s < 0 || theta < 0) throw Error(ErrorKind::InvalidArgument, "outlier needs s= and theta=");
        sc.times.push_back(s);
        sc.sizes.push_back(theta);
    }
    return sc;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    f << text;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"INAR(1) simulation and outlier-aware CLS estimation", "inar"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "simulate a path");
    double alpha = 0.5;
    std::string innov = "poisson:1", x0 = "0", outlier, out_path, format = "csv";
    long n = 100;
    std::uint64_t seed = 1;
    sim->add_option("--alpha", alpha, "thinning probability")->capture_default_str();
    sim->add_option("--innov", innov, "poisson:<rate> or pmf:<v:p,...>")->capture_default_str();
    sim->add_option("--x0", x0, "initial value or law")->capture_default_str();
    sim->add_option("--n", n, "number of steps")->capture_default_str();
    sim->add_option("--seed", seed, "path seed")->capture_default_str();
    sim->add_option("--outlier", outlier, "<family>:s=<t>:theta=<v>[,...]");
    sim->add_option("--out", out_path, "output file (stdout if empty)");
    sim->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // estimate
    auto* est = app.add_subcommand("estimate", "CLS estimates for a series");
    std::string in_path, scenario = "none", method = "grid", est_format = "json";
    std::optional<long> s1, s2;
    std::optional<double> mu;
    est->add_option("--in", in_path, "series file (csv or json)")->required();
    est->add_option("--scenario", scenario, "none, additive or innovational")
        ->check(CLI::IsMember({"none", "additive", "innovational"}));
    est->add_option("--s1", s1, "first outlier time");
    est->add_option("--s2", s2, "second outlier time");
    est->add_option("--mu", mu, "innovation mean, if known");
    est->add_option("--method", method, "grid or poly")->check(CLI::IsMember({"grid", "poly"}));
    est->add_option("--format", est_format, "json")->check(CLI::IsMember({"json"}));

    // moments
    auto* mom = app.add_subcommand("moments", "stationary moments and CLS covariances");
    double m_alpha = 0.5;
    std::string m_innov = "poisson:1";
    mom->add_option("--alpha", m_alpha)->capture_default_str();
    mom->add_option("--innov", m_innov)->capture_default_str();

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo campaign");
    std::string config, records_path, summary_path;
    std::vector<std::string> settings;
    std::optional<unsigned> threads;
    mc->add_option("--config", config, "key=value campaign file");
    mc->add_option("--set", settings, "inline key=value setting (repeatable)");
    mc->add_option("--threads", threads, "worker threads");
    mc->add_option("--records", records_path, "per-replication CSV");
    mc->add_option("--summary", summary_path, "summary JSON (stdout if empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : exit_validation;
    }

    try {
        if (*sim) {
            SimConfig cfg;
            cfg.model.alpha = alpha;
            cfg.model.innovation = parse_distribution(innov);
            cfg.model.init = parse_distribution(x0);
            cfg.n = n;
            cfg.seed = seed;
            if (!outlier.empty()) cfg.scenario = parse_outliers(outlier);
            const Series y = simulate(cfg);
            std::ostringstream os;
            if (format == "json") os << series_to_json(y).dump() << '\n';
            else write_series_csv(os, y);
            write_text(out_path, os.str(), out);
        } else if (*est) {
            std::ifstream f(in_path, std::ios::binary);
            if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + in_path);
            const Series y = read_series(f);
            std::optional<OutlierScenario> sc;
            if (scenario != "none") {
                OutlierScenario o;
                o.family = parse_family(scenario);
                if (!s1) throw Error(ErrorKind::BadTimes, "--s1 is required with outliers");
                o.times.push_back(*s1);
                if (s2) o.times.push_back(*s2);
                o.mu_known = mu.has_value();
                sc = o;
            } else if (s1 || s2) {
                throw Error(ErrorKind::InvalidArgument, "--s1/--s2 need an outlier scenario");
            }
            const EstimateReport r = estimate(y, sc, mu, parse_method(method));
            out << report_to_json(r).dump(2) << '\n';
        } else if (*mom) {
            ModelSpec m;
            m.alpha = m_alpha;
            m.innovation = parse_distribution(m_innov);
            m.validate();
            const StationaryMoments s = stationary_moments(m);
            const ClsCovariance c = cls_covariance(m);
            nlohmann::json j;
            j["m1"] = s.m1;
            j["m2"] = s.m2;
            j["m3"] = s.m3;
            j["var"] = s.var;
            j["sigma2_alpha"] = c.sigma2_alpha;
            j["a_mat"] = {{c.a_mat(0, 0), c.a_mat(0, 1)}, {c.a_mat(1, 0), c.a_mat(1, 1)}};
            j["b_mat"] = {{c.b_mat(0, 0), c.b_mat(0, 1)}, {c.b_mat(1, 0), c.b_mat(1, 1)}};
            out << j.dump(2) << '\n';
        } else if (*mc) {
            McCampaign c;
            if (!config.empty()) {
                std::ifstream f(config);
                if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + config);
                for (const auto& [k, v] : parse_campaign(f, c)) {
                    if (k == "records" && records_path.empty()) records_path = v;
                    if (k == "summary" && summary_path.empty()) summary_path = v;
                }
            }
            for (const auto& kv : settings) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--set expects key=value");
                apply_setting(c, kv.substr(0, eq), kv.substr(eq + 1));
            }
            if (threads) c.threads = *threads;
            const CampaignResult res = run_campaign(c);
            if (!records_path.empty()) {
                std::ofstream f(records_path, std::ios::binary);
                if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + records_path);
                write_records_csv(f, res.records);
            }
            write_text(summary_path, res.summary.to_json().dump(2) + "\n", out);
            if (!res.summary.degenerate_ok) {
                err << "CampaignFailed: too many degenerate replications\n";
                return exit_thresholds;
            }
            if (!res.summary.all_pass()) return exit_thresholds;
        }
    } catch (const Error& e) {
        err << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return 0;
}

}  // namespace inar
