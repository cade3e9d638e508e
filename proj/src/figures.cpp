#include "obc/figures.hpp"

#include <fstream>
#include <stdexcept>

#include "obc/svg.hpp"

namespace obc {

namespace {

constexpr double kRho = 100.0;      // 20 dB
constexpr double kEpsilon = 0.01;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.good()) throw std::runtime_error("figure: cannot write " + path.string());
    out << content;
}

std::vector<Eigen::Vector2d> curve_points(const Frontier& f) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(f.points.size());
    for (const auto& p : f.points) pts.emplace_back(p.rate[0], p.rate[1]);
    return pts;
}

SystemSpec two_user_spec(FadingModel strong, FadingModel weak) {
    return SystemSpec(kRho, {{std::move(strong), kEpsilon}, {std::move(weak), kEpsilon}});
}

}  // namespace

FigureBundle make_figure(const std::string& name, const std::filesystem::path& out_dir,
                         int grid) {
    std::filesystem::create_directories(out_dir);
    FigureBundle bundle;
    std::vector<SvgCurve> curves;
    std::string title;

    auto add_curve = [&](const Frontier& f, const std::string& csv_name,
                         const std::string& label, const std::string& dash = {}) {
        const auto path = out_dir / csv_name;
        write_file(path, frontier_csv(f));
        bundle.csv_files.push_back(path);
        curves.push_back({label, curve_points(f), "", dash});
    };

    if (name == "fig2") {
        title = "Superposition vs time sharing, rho = 20 dB";
        const SystemSpec spec =
            two_user_spec(FadingModel::exponential(10.0), FadingModel::exponential(1.0));
        add_curve(star_frontier(spec, grid), "fig2_star.csv", "superposition");
        add_curve(td_frontier(spec, grid), "fig2_timesharing.csv", "time sharing", "7 4");
        bundle.containment = containment_check(spec, grid);
    } else if (name == "fig4") {
        title = "Two receive antennas under correlation, rho = 20 dB";
        const double zetas[] = {0.0, 0.5, 0.9};
        const char* names[] = {"fig4_zeta00.csv", "fig4_zeta05.csv", "fig4_zeta09.csv"};
        const char* labels[] = {"two antennas, zeta=0", "two antennas, zeta=0.5",
                                "two antennas, zeta=0.9"};
        for (int i = 0; i < 3; ++i) {
            const SystemSpec spec = two_user_spec(simo_aggregate({10.0, 10.0}, zetas[i]),
                                                  simo_aggregate({1.0, 1.0}, zetas[i]));
            add_curve(star_frontier(spec, grid), names[i], labels[i]);
        }
        const SystemSpec base =
            two_user_spec(FadingModel::exponential(10.0), FadingModel::exponential(1.0));
        add_curve(star_frontier(base, grid), "fig4_single.csv", "one antenna", "3 4");
    } else if (name == "fig5") {
        title = "Evenly split transmit antennas, rho = 20 dB";
        const int counts[] = {1, 2, 4};
        const char* names[] = {"fig5_mt1.csv", "fig5_mt2.csv", "fig5_mt4.csv"};
        const char* labels[] = {"1 transmit antenna", "2 transmit antennas",
                                "4 transmit antennas"};
        for (int i = 0; i < 3; ++i) {
            const SystemSpec spec = two_user_spec(miso_aggregate(counts[i], 10.0),
                                                  miso_aggregate(counts[i], 1.0));
            add_curve(star_frontier(spec, grid), names[i], labels[i]);
        }
    } else {
        throw std::invalid_argument("figure: unknown name '" + name + "'");
    }

    bundle.svg_file = out_dir / (name + ".svg");
    write_file(bundle.svg_file, render_curves_svg(curves, "R_1 (nats)", "R_2 (nats)", title));
    return bundle;
}

}  // namespace obc
