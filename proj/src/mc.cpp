#include "inar/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "inar/cls_innovational.hpp"
#include "inar/estimate.hpp"
#include "inar/io.hpp"
#include "inar/moments.hpp"
#include "inar/rng.hpp"
#include "inar/simulator.hpp"

namespace inar {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long to_long(const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: " + s);
    return v;
}

double to_double(const std::string& s) {
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not a number: " + s);
    return v;
}

bool to_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw Error(ErrorKind::InvalidArgument, "not a boolean: " + s);
}

}  // namespace

const char* check_name(Check c) {
    switch (c) {
    case Check::Consistency: return "consistency";
    case Check::LimitConvergence: return "limit_convergence";
    case Check::ConditionalClt: return "conditional_clt";
    case Check::CovarianceMatch: return "covariance_match";
    case Check::ZMoments: return "z_moments";
    case Check::Decomposition: return "decomposition";
    }
    return "?";
}

Check parse_check(const std::string& text) {
    for (Check c : {Check::Consistency, Check::LimitConvergence, Check::ConditionalClt,
                    Check::CovarianceMatch, Check::ZMoments, Check::Decomposition})
        if (text == check_name(c)) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown check: " + text);
}

bool McCampaign::estimates_mu() const { return scenario ? !scenario->mu_known : !mu_known; }

std::string McCampaign::scenario_label() const {
    if (!scenario) return mu_known ? "NONE" : "NONEM";
    return tag_name(classify(*scenario));
}

void McCampaign::validate() const {
    model.validate();
    if (n_values.empty()) throw Error(ErrorKind::InvalidArgument, "campaign needs at least one n");
    for (long n : n_values)
        if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
    if (replications < 1) throw Error(ErrorKind::InvalidArgument, "replications must be positive");
    if (threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be positive");
    if (scenario) {
        classify(*scenario);
        if (scenario->sizes.size() != scenario->times.size())
            throw Error(ErrorKind::InvalidArgument, "one size per outlier time is required");
        for (long n : n_values)
            for (long t : scenario->times)
                if (t < 1 || t > n) throw Error(ErrorKind::BadTimes, "outlier time outside 1..n");
    }
    for (Check ch : checks) {
        const bool path_check = ch == Check::LimitConvergence || ch == Check::ConditionalClt;
        if (path_check && !scenario)
            throw Error(ErrorKind::InvalidArgument, std::string(check_name(ch)) + " needs outliers");
        const bool innov = ch == Check::ZMoments || ch == Check::Decomposition;
        if (innov && (!scenario || scenario->family != Family::Innovational))
            throw Error(ErrorKind::InvalidArgument,
                        std::string(check_name(ch)) + " needs an innovational scenario");
    }
}

void apply_setting(McCampaign& c, const std::string& key, const std::string& value) {
    auto ensure = [&]() -> OutlierScenario& {
        if (!c.scenario) {
            c.scenario.emplace();
            c.scenario->mu_known = c.mu_known;
        }
        return *c.scenario;
    };
    Thresholds& t = c.thresholds;
    if (key == "alpha") c.model.alpha = to_double(value);
    else if (key == "innov") c.model.innovation = parse_distribution(value);
    else if (key == "x0") c.model.init = parse_distribution(value);
    else if (key == "family") {
        if (value == "none") c.scenario.reset();
        else ensure().family = parse_family(value);
    } else if (key == "times") {
        auto& sc = ensure();
        sc.times.clear();
        for (const auto& s : split(value, ',')) sc.times.push_back(to_long(s));
    } else if (key == "sizes") {
        auto& sc = ensure();
        sc.sizes.clear();
        for (const auto& s : split(value, ',')) sc.sizes.push_back(to_long(s));
    } else if (key == "mu_known") {
        c.mu_known = to_bool(value);
        if (c.scenario) c.scenario->mu_known = c.mu_known;
    } else if (key == "n") {
        c.n_values.clear();
        for (const auto& s : split(value, ',')) c.n_values.push_back(to_long(s));
    } else if (key == "replications") c.replications = to_long(value);
    else if (key == "seed") c.master_seed = std::stoull(value);
    else if (key == "threads") c.threads = static_cast<unsigned>(to_long(value));
    else if (key == "checks") {
        c.checks.clear();
        for (const auto& s : split(value, ',')) c.checks.push_back(parse_check(s));
    }
    else if (key == "alpha_bias") t.alpha_bias = to_double(value);
    else if (key == "mu_bias") t.mu_bias = to_double(value);
    else if (key == "limit_tol") t.limit_tol = to_double(value);
    else if (key == "limit_fraction") t.limit_fraction = to_double(value);
    else if (key == "clt_var_lo") t.clt_var_lo = to_double(value);
    else if (key == "clt_var_hi") t.clt_var_hi = to_double(value);
    else if (key == "ks_max") t.ks_max = to_double(value);
    else if (key == "sigma2_rel") t.sigma2_rel = to_double(value);
    else if (key == "b_rel") t.b_rel = to_double(value);
    else if (key == "degenerate_max") t.degenerate_max = to_double(value);
    else if (key == "z_se") t.z_se = to_double(value);
    else throw Error(ErrorKind::InvalidArgument, "unknown campaign key: " + key);
}

std::vector<std::pair<std::string, std::string>> parse_campaign(std::istream& is, McCampaign& c) {
    static const char* passthrough[] = {"records", "summary"};
    std::vector<std::pair<std::string, std::string>> rest;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "expected key=value, got: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(std::begin(passthrough), std::end(passthrough), key) != std::end(passthrough))
            rest.emplace_back(key, value);
        else
            apply_setting(c, key, value);
    }
    return rest;
}

void parallel_for(long count, unsigned threads, const std::function<void(long)>& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(1L, count))));
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<McRecord> run_replications(const McCampaign& c) {
    c.validate();
    const long R = c.replications;
    const long total = R * static_cast<long>(c.n_values.size());
    std::vector<McRecord> out(total);
    const std::string label = c.scenario_label();
    const double mu_true = c.model.mu();
    const std::optional<double> mu_arg = c.estimates_mu() ? std::nullopt : std::optional<double>(mu_true);

    parallel_for(total, c.threads, [&](long i) {
        McRecord rec;
        rec.n = c.n_values[i / R];
        rec.rep = i % R;
        rec.scenario = label;
        rec.alpha_hat = rec.mu_hat = rec.theta_hat_1 = rec.theta_hat_2 = nan_v;
        rec.limit_1 = rec.limit_2 = nan_v;
        rec.cond_var_11 = rec.cond_var_12 = rec.cond_var_22 = nan_v;

        SimConfig cfg;
        cfg.model = c.model;
        cfg.n = rec.n;
        cfg.seed = replication_seed(c.master_seed, static_cast<std::uint64_t>(rec.rep));
        cfg.scenario = c.scenario;
        const Series y = simulate(cfg);
        try {
            const EstimateReport r = estimate(y, c.scenario, mu_arg, Method::Grid);
            rec.alpha_hat = r.alpha_hat;
            if (r.mu_hat) rec.mu_hat = *r.mu_hat;
            if (!r.theta_hat.empty()) rec.theta_hat_1 = r.theta_hat[0];
            if (r.theta_hat.size() > 1) rec.theta_hat_2 = r.theta_hat[1];
            if (c.scenario) {
                const AsymptoticLaw law = conditional_law(c.model.alpha, mu_true, c.model, y, *c.scenario);
                rec.limit_1 = law.limits[0];
                rec.cond_var_11 = law.cov(0, 0);
                if (law.limits.size() > 1) {
                    rec.limit_2 = law.limits[1];
                    rec.cond_var_12 = law.cov(0, 1);
                    rec.cond_var_22 = law.cov(1, 1);
                }
            }
        } catch (const Error&) {
            rec.degenerate = true;
        }
        out[i] = std::move(rec);
    });
    return out;
}

void write_records_csv(std::ostream& os, const std::vector<McRecord>& recs) {
    os << "n,rep,scenario,alpha_hat,mu_hat,theta_hat_1,theta_hat_2,limit_1,limit_2,"
          "cond_var_11,cond_var_12,cond_var_22,degenerate\n";
    for (const auto& r : recs) {
        os << r.n << ',' << r.rep << ',' << r.scenario;
        for (double v : {r.alpha_hat, r.mu_hat, r.theta_hat_1, r.theta_hat_2, r.limit_1, r.limit_2,
                         r.cond_var_11, r.cond_var_12, r.cond_var_22})
            os << ',' << format_double(v);
        os << ',' << (r.degenerate ? 1 : 0) << '\n';
    }
}

std::vector<McRecord> read_records_csv(std::istream& is) {
    std::vector<McRecord> out;
    std::string line;
    if (!std::getline(is, line)) return out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 13) throw Error(ErrorKind::InvalidArgument, "record needs 13 fields: " + line);
        McRecord r;
        r.n = to_long(f[0]);
        r.rep = to_long(f[1]);
        r.scenario = f[2];
        double* slots[] = {&r.alpha_hat, &r.mu_hat, &r.theta_hat_1, &r.theta_hat_2, &r.limit_1,
                           &r.limit_2, &r.cond_var_11, &r.cond_var_12, &r.cond_var_22};
        for (int k = 0; k < 9; ++k) *slots[k] = parse_double(f[3 + k]);
        r.degenerate = f[12] == "1";
        out.push_back(std::move(r));
    }
    return out;
}

double ks_normal(std::vector<double> xs) {
    if (xs.empty()) return nan_v;
    std::sort(xs.begin(), xs.end());
    const double N = static_cast<double>(xs.size());
    double d = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double F = 0.5 * std::erfc(-xs[i] / std::sqrt(2.0));
        d = std::max({d, (i + 1) / N - F, F - i / N});
    }
    return d;
}

namespace {

struct Moments {
    double mean = nan_v, var = nan_v;
    long count = 0;
};

Moments moments_of(const std::vector<double>& xs) {
    Moments m;
    m.count = static_cast<long>(xs.size());
    if (xs.empty()) return m;
    long double s = 0;
    for (double x : xs) s += x;
    m.mean = static_cast<double>(s / xs.size());
    if (xs.size() < 2) return m;
    long double q = 0;
    for (double x : xs) q += (x - m.mean) * static_cast<long double>(x - m.mean);
    m.var = static_cast<double>(q / (xs.size() - 1));
    return m;
}

double covariance(const std::vector<double>& a, const std::vector<double>& b) {
    const Moments ma = moments_of(a), mb = moments_of(b);
    long double q = 0;
    for (size_t i = 0; i < a.size(); ++i) q += (a[i] - ma.mean) * static_cast<long double>(b[i] - mb.mean);
    return static_cast<double>(q / (a.size() - 1));
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

}  // namespace

bool McSummary::all_pass() const {
    if (!degenerate_ok) return false;
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

nlohmann::json McSummary::to_json() const {
    nlohmann::json j;
    j["stats"] = stats;
    j["degenerate_ok"] = degenerate_ok;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results)
        j["checks"].push_back({{"check", r.name}, {"n", r.n}, {"pass", r.pass}, {"detail", r.detail}});
    j["all_pass"] = all_pass();
    return j;
}

McSummary summarize(const McCampaign& c, const std::vector<McRecord>& recs) {
    McSummary out;
    out.stats = nlohmann::json::array();
    const double alpha = c.model.alpha;
    const double mu = c.model.mu();
    const ClsCovariance cc = cls_covariance(c.model);
    const Thresholds& th = c.thresholds;
    const int outliers = c.scenario ? static_cast<int>(c.scenario->times.size()) : 0;

    for (long n : c.n_values) {
        std::vector<const McRecord*> rows;
        long degenerate = 0, total = 0;
        for (const auto& r : recs) {
            if (r.n != n) continue;
            ++total;
            if (r.degenerate) ++degenerate;
            else rows.push_back(&r);
        }
        const double sn = std::sqrt(static_cast<double>(n));
        nlohmann::json st;
        st["n"] = n;
        st["replications"] = total;
        st["degenerate"] = degenerate;
        const double deg_frac = total ? static_cast<double>(degenerate) / total : 1.0;
        const bool deg_ok = deg_frac <= th.degenerate_max;
        if (!deg_ok) {
            out.degenerate_ok = false;
            out.results.push_back({"degenerate_budget", n, false,
                                   "degenerate fraction " + fmt(deg_frac) + " > " + fmt(th.degenerate_max)});
        }

        std::vector<double> a, m, za, zm;
        for (const auto* r : rows) {
            a.push_back(r->alpha_hat);
            za.push_back(sn * (r->alpha_hat - alpha));
            if (c.estimates_mu()) {
                m.push_back(r->mu_hat);
                zm.push_back(sn * (r->mu_hat - mu));
            }
        }
        const Moments ma = moments_of(a);
        st["alpha"] = {{"mean", ma.mean}, {"sd", std::sqrt(ma.var)}, {"bias", ma.mean - alpha}};
        const Moments mza = moments_of(za);
        st["sqrt_n_alpha_var"] = mza.var;
        Moments mm;
        double cov_am = nan_v;
        if (c.estimates_mu()) {
            mm = moments_of(m);
            st["mu"] = {{"mean", mm.mean}, {"sd", std::sqrt(mm.var)}, {"bias", mm.mean - mu}};
            cov_am = covariance(za, zm);
            st["sqrt_n_cov"] = {mza.var, cov_am, moments_of(zm).var};
        }

        struct ThetaStats {
            double within = nan_v, zvar = nan_v, ks = nan_v;
        };
        std::vector<ThetaStats> ts(outliers);
        for (int i = 0; i < outliers; ++i) {
            std::vector<double> diff, z;
            long close = 0, excluded = 0;
            for (const auto* r : rows) {
                const double th_hat = i == 0 ? r->theta_hat_1 : r->theta_hat_2;
                const double lim = i == 0 ? r->limit_1 : r->limit_2;
                const double cv = i == 0 ? r->cond_var_11 : r->cond_var_22;
                const double d = th_hat - lim;
                diff.push_back(d);
                if (std::abs(d) < th.limit_tol) ++close;
                if (cv > 1e-12) z.push_back(sn * d / std::sqrt(cv));
                else ++excluded;
            }
            const Moments md = moments_of(diff);
            const Moments mz = moments_of(z);
            ts[i].within = rows.empty() ? nan_v : static_cast<double>(close) / rows.size();
            ts[i].zvar = mz.var;
            ts[i].ks = ks_normal(z);
            st["theta"].push_back({{"mean_minus_limit", md.mean},
                                   {"sd_minus_limit", std::sqrt(md.var)},
                                   {"within_tol_fraction", ts[i].within},
                                   {"z_mean", mz.mean},
                                   {"z_var", mz.var},
                                   {"ks", ts[i].ks},
                                   {"z_count", mz.count},
                                   {"z_excluded_zero_variance", excluded}});
        }
        out.stats.push_back(st);

        for (Check ch : c.checks) {
            CheckResult res{check_name(ch), n, false, ""};
            switch (ch) {
            case Check::Consistency: {
                res.pass = std::abs(ma.mean - alpha) < th.alpha_bias;
                res.detail = "alpha bias " + fmt(ma.mean - alpha);
                if (c.estimates_mu()) {
                    res.pass = res.pass && std::abs(mm.mean - mu) < th.mu_bias;
                    res.detail += ", mu bias " + fmt(mm.mean - mu);
                }
                break;
            }
            case Check::LimitConvergence: {
                res.pass = true;
                for (int i = 0; i < outliers; ++i) {
                    res.pass = res.pass && ts[i].within >= th.limit_fraction;
                    res.detail += (i ? ", " : "") + std::string("theta") + std::to_string(i + 1) +
                                  " within tol " + fmt(ts[i].within);
                }
                break;
            }
            case Check::ConditionalClt: {
                res.pass = true;
                for (int i = 0; i < outliers; ++i) {
                    res.pass = res.pass && ts[i].zvar >= th.clt_var_lo && ts[i].zvar <= th.clt_var_hi &&
                               ts[i].ks < th.ks_max;
                    res.detail += (i ? ", " : "") + std::string("theta") + std::to_string(i + 1) +
                                  " var " + fmt(ts[i].zvar) + " ks " + fmt(ts[i].ks);
                }
                break;
            }
            case Check::CovarianceMatch: {
                if (c.estimates_mu()) {
                    const double emp[3] = {mza.var, cov_am, moments_of(zm).var};
                    const double ref[3] = {cc.b_mat(0, 0), cc.b_mat(0, 1), cc.b_mat(1, 1)};
                    res.pass = true;
                    for (int k = 0; k < 3; ++k) {
                        const double rel = std::abs(emp[k] - ref[k]) / std::abs(ref[k]);
                        res.pass = res.pass && rel < th.b_rel;
                        res.detail += (k ? ", " : "") + fmt(emp[k]) + " vs " + fmt(ref[k]);
                    }
                } else {
                    const double rel = std::abs(mza.var - cc.sigma2_alpha) / cc.sigma2_alpha;
                    res.pass = rel < th.sigma2_rel;
                    res.detail = "var " + fmt(mza.var) + " vs " + fmt(cc.sigma2_alpha);
                }
                break;
            }
            case Check::ZMoments:
            case Check::Decomposition:
                continue;  // path-level, see run_campaign
            }
            out.results.push_back(res);
        }
    }
    return out;
}

CheckResult check_z_moments(const ModelSpec& model, const ZLawOptions& opt) {
    const long R = opt.replications;
    const long K = opt.k_max;
    const long lag = std::max(opt.extinction_lag, K);
    const long xs_lags[] = {1, 2, 5};
    // per replication: Z_{s..s+K}, Z_{s+lag}, monotone flag, X_{s+k} for the lags
    std::vector<std::vector<long>> zs(R), xs(R);
    std::vector<char> monotone(R, 1);
    std::vector<long> tail(R);

    parallel_for(R, opt.threads, [&](long r) {
        SimConfig cfg;
        cfg.model = model;
        cfg.n = opt.s + lag;
        cfg.seed = replication_seed(opt.seed, static_cast<std::uint64_t>(r));
        OutlierScenario sc;
        sc.family = Family::Innovational;
        sc.times = {opt.s};
        sc.sizes = {opt.theta};
        cfg.scenario = sc;
        const DecomposedPath p = simulate_innovational(cfg);
        const Series& z = p.z[0];
        zs[r].assign(z.begin() + opt.s, z.begin() + opt.s + K + 1);
        for (long k = opt.s; k < cfg.n; ++k)
            if (z[k + 1] > z[k]) monotone[r] = 0;
        tail[r] = z[opt.s + lag];
        for (long l : xs_lags) xs[r].push_back(p.x[opt.s + l]);
    });

    CheckResult res{"z_moments", opt.s, true, ""};
    double worst = 0.0;
    auto compare = [&](double emp, double se, double theo) {
        const double d = std::abs(emp - theo);
        if (se <= 0) {
            if (d > 1e-12) res.pass = false;
            return;
        }
        worst = std::max(worst, d / se);
        if (d > opt.z_se * se) res.pass = false;
    };
    for (long k = 0; k <= K; ++k) {
        std::vector<double> z1, z2, zz;
        for (long r = 0; r < R; ++r) {
            const double v = static_cast<double>(zs[r][k]);
            z1.push_back(v);
            z2.push_back(v * v);
            if (k >= 1) zz.push_back(v * static_cast<double>(zs[r][k - 1]));
        }
        const ZMoments th = z_moments(model.alpha, static_cast<double>(opt.theta), k);
        const Moments m1 = moments_of(z1), m2 = moments_of(z2);
        compare(m1.mean, std::sqrt(m1.var / R), th.mean);
        compare(m2.mean, std::sqrt(m2.var / R), th.second);
        if (k >= 1) {
            const Moments m3 = moments_of(zz);
            compare(m3.mean, std::sqrt(m3.var / R), th.lag_product);
        }
    }
    long mono = 0, extinct = 0;
    for (long r = 0; r < R; ++r) {
        mono += monotone[r];
        extinct += tail[r] == 0;
    }
    const double ext_frac = static_cast<double>(extinct) / R;
    res.pass = res.pass && mono == R && ext_frac > 0.99;

    // X and Z are independent: sample correlations should be O(1/sqrt R)
    double worst_corr = 0.0;
    for (long li = 0; li < 3; ++li) {
        std::vector<double> a, b;
        for (long r = 0; r < R; ++r) {
            a.push_back(static_cast<double>(xs[r][li]));
            b.push_back(static_cast<double>(zs[r][std::min(xs_lags[li], K)]));
        }
        const double va = moments_of(a).var, vb = moments_of(b).var;
        if (va > 0 && vb > 0) {
            const double corr = covariance(a, b) / std::sqrt(va * vb);
            worst_corr = std::max(worst_corr, std::abs(corr) * std::sqrt(static_cast<double>(R)));
            if (std::abs(corr) > opt.z_se / std::sqrt(static_cast<double>(R))) res.pass = false;
        }
    }
    res.detail = "worst moment gap " + fmt(worst) + " SE, monotone " + std::to_string(mono) + "/" +
                 std::to_string(R) + ", extinct by lag " + std::to_string(lag) + " " + fmt(ext_frac) +
                 ", worst |corr(X,Z)| " + fmt(worst_corr) + "/sqrt(R)";
    return res;
}

CheckResult check_decomposition(const ModelSpec& model, const OutlierScenario& sc, long n,
                                long replications, std::uint64_t seed, unsigned threads) {
    std::vector<char> ok(replications, 0);
    const OutlierScenario canon = sc.canonical();
    parallel_for(replications, threads, [&](long r) {
        SimConfig cfg;
        cfg.model = model;
        cfg.n = n;
        cfg.seed = replication_seed(seed, static_cast<std::uint64_t>(r));
        cfg.scenario = canon;
        const DecomposedPath p = simulate_innovational(cfg);
        const Series direct = simulate_innovational_direct(cfg);
        bool good = direct == p.y;
        for (long k = 0; k <= n && good; ++k) {
            long sum = p.x[k];
            for (size_t i = 0; i < p.z.size(); ++i) {
                const long s = canon.times[i];
                const Series& z = p.z[i];
                sum += z[k];
                if (k < s && z[k] != 0) good = false;
                if (k == s && z[k] != canon.sizes[i]) good = false;
                if (k > s && z[k] > z[k - 1]) good = false;
            }
            if (sum != p.y[k]) good = false;
        }
        ok[r] = good;
    });
    long good = 0;
    for (char g : ok) good += g;
    CheckResult res{"decomposition", n, good == replications, ""};
    res.detail = std::to_string(good) + "/" + std::to_string(replications) + " paths agree exactly";
    return res;
}

CampaignResult run_campaign(const McCampaign& c) {
    CampaignResult out;
    out.records = run_replications(c);
    out.summary = summarize(c, out.records);
    for (Check ch : c.checks) {
        if (ch == Check::ZMoments) {
            ZLawOptions opt;
            opt.theta = c.scenario->sizes.front();
            opt.s = c.scenario->canonical().times.front();
            opt.replications = c.replications;
            opt.seed = c.master_seed;
            opt.threads = c.threads;
            opt.z_se = c.thresholds.z_se;
            out.summary.results.push_back(check_z_moments(c.model, opt));
        } else if (ch == Check::Decomposition) {
            out.summary.results.push_back(check_decomposition(
                c.model, *c.scenario, c.n_values.front(), c.replications, c.master_seed, c.threads));
        }
    }
    return out;
}

}  // namespace inar
