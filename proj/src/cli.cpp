#include "obc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "obc/bdpc.hpp"
#include "obc/config.hpp"
#include "obc/figures.hpp"
#include "obc/regions.hpp"
#include "obc/ssc.hpp"

namespace obc::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kClaimViolated = 2;

Eigen::VectorXd parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string cell =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": expected comma-separated numbers");
        }
        if (used != cell.size())
            throw std::invalid_argument(std::string(what) + ": expected comma-separated numbers");
        values.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.good()) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

RunConfig load_config(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--config is required for this subcommand");
    return RunConfig::load(path);
}

Json containment_json(const ContainmentReport& report) {
    return Json{{"points_checked", report.points_checked},
                {"membership_violations", report.membership_violations},
                {"max_sum_rate_gap", report.max_sum_rate_gap}};
}

int run_quantile(const RunConfig& cfg, std::ostream& out) {
    const SystemSpec spec = cfg.make_spec();
    Json users = Json::array();
    for (std::size_t i = 0; i < cfg.users.size(); ++i) {
        const int k = spec.internal_index(static_cast<int>(i));
        users.push_back(Json{{"fading", cfg.users[i].fading},
                             {"epsilon", cfg.users[i].epsilon},
                             {"gain", spec.gain(k)},
                             {"rank", k}});
    }
    out << Json{{"rho_db", cfg.rho_db}, {"users", users}}.dump(2) << "\n";
    return kOk;
}

int run_region(const RunConfig& cfg, const std::string& scheme, const fs::path& out_dir,
               std::ostream& out) {
    const SystemSpec spec = cfg.make_spec();
    fs::create_directories(out_dir);
    Json summary{{"scheme", scheme}, {"grid", cfg.grid}};
    Json files = Json::array();
    int code = kOk;

    if (scheme == "star" || scheme == "both") {
        const auto path = out_dir / "star.csv";
        write_file(path, frontier_csv(star_frontier(spec, cfg.grid)));
        files.push_back(path.string());
    }
    if (scheme == "timesharing" || scheme == "both") {
        const auto path = out_dir / "timesharing.csv";
        write_file(path, frontier_csv(td_frontier(spec, cfg.grid)));
        files.push_back(path.string());
    }
    summary["files"] = files;
    if (scheme == "both") {
        const ContainmentReport report = containment_check(spec, cfg.grid);
        summary["containment"] = containment_json(report);
        if (report.membership_violations > 0) code = kClaimViolated;
    }
    out << summary.dump(2) << "\n";
    return code;
}

int run_bdpc_sweep(const DirtyPaperChannel& ch, double rate, int grid, const fs::path& out_dir,
                   std::ostream& out) {
    if (grid < 2) throw std::invalid_argument("--grid must be >= 2");
    fs::create_directories(out_dir);

    const double astar = optimal_alpha(rate);
    std::vector<double> alphas;
    alphas.reserve(static_cast<std::size_t>(grid) + 2);
    for (int i = 0; i <= grid; ++i)
        alphas.push_back(static_cast<double>(i) / static_cast<double>(grid));
    alphas.push_back(astar);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    std::string csv = "alpha,outage\n";
    double best = std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    char buf[80];
    for (double alpha : alphas) {
        const double p = outage_prob(ch, alpha, rate);
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", alpha, p);
        csv += buf;
        if (p < best) {
            best = p;
            best_alpha = alpha;
        }
    }
    const auto csv_path = out_dir / "bdpc_sweep.csv";
    write_file(csv_path, csv);

    Json summary{{"alpha_star", astar},
                 {"min_outage", min_outage_prob(ch, rate)},
                 {"sweep_min", best},
                 {"sweep_argmin", best_alpha},
                 {"csv", csv_path.string()}};
    try {
        const double a = a_star(ch, rate);
        summary["a_star"] = a;
        summary["alpha_dpc_at_a_star"] = alpha_dpc(ch, a);
    } catch (const std::domain_error&) {
        summary["a_star"] = nullptr;  // rate unreachable at every gain
        summary["alpha_dpc_at_a_star"] = nullptr;
    }
    out << summary.dump(2) << "\n";
    return kOk;
}

int run_simulate(const RunConfig& cfg, const Eigen::VectorXd& gamma_caller,
                 const Eigen::VectorXd& rates_caller, std::int64_t trials, std::uint64_t seed,
                 const std::optional<fs::path>& out_dir, std::ostream& out) {
    const SystemSpec spec = cfg.make_spec();
    const int K = spec.num_users();
    if (gamma_caller.size() != K) throw std::invalid_argument("--gamma needs one value per user");
    if (rates_caller.size() != K) throw std::invalid_argument("--rates needs one value per user");

    const PowerAllocation alloc(spec.to_internal(gamma_caller));
    const RatePoint rates = spec.to_internal(rates_caller);
    const McReport report = mc_outage(spec, alloc, rates, trials, seed);

    bool in_region = true;
    std::vector<double> analytic(static_cast<std::size_t>(K), 0.0);
    try {
        for (int k = 0; k < K; ++k) analytic[static_cast<std::size_t>(k)] =
            analytic_outage(spec, alloc, rates, k);
    } catch (const std::domain_error&) {
        in_region = false;
    }

    std::int64_t violations = 0;
    bool claim_met = true;
    Json users = Json::array();
    for (int i = 0; i < K; ++i) {
        const int k = spec.internal_index(i);
        const UserMcResult& r = report.users[static_cast<std::size_t>(k)];
        violations += r.indicator_violations;
        if (r.ci_low > spec.epsilon(k)) claim_met = false;
        Json u{{"fading", cfg.users[static_cast<std::size_t>(i)].fading},
               {"epsilon", cfg.users[static_cast<std::size_t>(i)].epsilon},
               {"gamma", gamma_caller[i]},
               {"rate", rates_caller[i]},
               {"estimate", r.estimate},
               {"ci_low", r.ci_low},
               {"ci_high", r.ci_high},
               {"outages", r.outages},
               {"indicator_violations", r.indicator_violations}};
        if (in_region)
            u["analytic"] = analytic[static_cast<std::size_t>(k)];
        else
            u["analytic"] = nullptr;
        users.push_back(std::move(u));
    }

    Json summary{{"seed", seed},
                 {"trials", trials},
                 {"in_region", in_region},
                 {"users", users},
                 {"indicator_violations_total", violations},
                 {"epsilon_claim_met", claim_met}};
    const std::string text = summary.dump(2) + "\n";
    out << text;
    if (out_dir) {
        fs::create_directories(*out_dir);
        write_file(*out_dir / "simulate.json", text);
    }
    return (violations > 0 || !claim_met) ? kClaimViolated : kOk;
}

int run_figure(const std::string& name, int grid, const fs::path& out_dir, std::ostream& out) {
    const FigureBundle bundle = make_figure(name, out_dir, grid);
    Json csvs = Json::array();
    for (const auto& p : bundle.csv_files) csvs.push_back(p.string());
    Json summary{{"name", name}, {"grid", grid}, {"csv", csvs},
                 {"svg", bundle.svg_file.string()}};
    int code = kOk;
    if (bundle.containment) {
        summary["containment"] = containment_json(*bundle.containment);
        if (bundle.containment->membership_violations > 0) code = kClaimViolated;
    }
    out << summary.dump(2) << "\n";
    return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"outage rate regions for fading broadcast downlinks"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_dir = ".";
    app.add_option("--config", config_path, "run configuration JSON file");
    app.add_option("--out", out_dir, "directory for CSV/SVG outputs");

    auto* sub_quantile =
        app.add_subcommand("quantile", "per-user outage-tolerance quantile gains");
    sub_quantile->fallthrough();

    auto* sub_region = app.add_subcommand("region", "sweep achievable-rate frontiers");
    sub_region->fallthrough();
    std::string scheme = "both";
    sub_region->add_option("--scheme", scheme, "star, timesharing, or both")
        ->check(CLI::IsMember({"star", "timesharing", "both"}));

    auto* sub_sweep = app.add_subcommand(
        "bdpc-sweep", "outage vs inflation factor for one dirty paper channel");
    sub_sweep->fallthrough();
    double power = 0.0, q1 = 0.0, q2 = 0.0, noise = 0.0, rate = 0.0;
    std::string sweep_fading;
    int sweep_grid = 10000;
    sub_sweep->add_option("--power", power, "signal power")->required();
    sub_sweep->add_option("--q1", q1, "known interference power")->required();
    sub_sweep->add_option("--q2", q2, "unknown interference power")->required();
    sub_sweep->add_option("--noise", noise, "noise power")->required();
    sub_sweep->add_option("--rate", rate, "target rate in nats")->required();
    sub_sweep->add_option("--fading", sweep_fading, "fading model text")->required();
    sub_sweep->add_option("--grid", sweep_grid, "number of inflation-factor steps");

    auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo outage for one rate point");
    sub_sim->fallthrough();
    std::string gamma_text, rates_text;
    std::int64_t trials = -1;
    std::uint64_t seed = 0;
    sub_sim->add_option("--gamma", gamma_text, "power fractions, config user order")->required();
    sub_sim->add_option("--rates", rates_text, "rates in nats, config user order")->required();
    auto* trials_opt = sub_sim->add_option("--trials", trials, "Monte Carlo draws per user");
    auto* seed_opt = sub_sim->add_option("--seed", seed, "Monte Carlo seed");

    auto* sub_figure = app.add_subcommand("figure", "canned two-user case studies");
    sub_figure->fallthrough();
    std::string figure_name;
    int figure_grid = 401;
    sub_figure->add_option("name", figure_name, "fig2, fig4, or fig5")->required();
    sub_figure->add_option("--grid", figure_grid, "sweep resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, std::cerr);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*sub_quantile) return run_quantile(load_config(config_path), out);
        if (*sub_region) return run_region(load_config(config_path), scheme, out_dir, out);
        if (*sub_sweep) {
            const DirtyPaperChannel ch{power, q1, q2, noise, FadingModel::parse(sweep_fading)};
            return run_bdpc_sweep(ch, rate, sweep_grid, out_dir, out);
        }
        if (*sub_sim) {
            const RunConfig cfg = load_config(config_path);
            const auto gamma = parse_list(gamma_text, "--gamma");
            const auto rates = parse_list(rates_text, "--rates");
            if (trials_opt->count() > 0 && trials <= 0)
                throw std::invalid_argument("--trials must be a positive integer");
            std::optional<fs::path> dir;
            if (out_dir != ".") dir = fs::path(out_dir);
            return run_simulate(cfg, gamma, rates, trials_opt->count() > 0 ? trials : cfg.mc_samples,
                                seed_opt->count() > 0 ? seed : cfg.seed, dir, out);
        }
        if (*sub_figure) return run_figure(figure_name, figure_grid, out_dir, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("obc");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out);
}

}  // namespace obc::cli
