#include "obc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace obc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::string fmt_sig9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

RatePoint star_rate(const SystemSpec& spec, const PowerAllocation& alloc) {
    require(alloc.size() == spec.num_users(), "star_rate: allocation length mismatch");
    const double rho = spec.rho();
    RatePoint r(alloc.size());
    double assigned = 0.0;  // power fraction already spent on stronger users
    for (Eigen::Index k = 0; k < alloc.size(); ++k) {
        const double g = spec.gain(static_cast<int>(k));
        r[k] = std::log1p(g * alloc[k] * rho / (g * assigned * rho + 1.0));
        assigned += alloc[k];
    }
    return r;
}

RatePoint td_rate(const SystemSpec& spec, const TimeSharingPolicy& policy) {
    require(policy.size() == spec.num_users(), "td_rate: policy length mismatch");
    const double rho = spec.rho();
    RatePoint r(policy.size());
    for (Eigen::Index k = 0; k < policy.size(); ++k)
        r[k] = policy.mu()[k] *
               std::log1p(spec.gain(static_cast<int>(k)) * policy.eta()[k] * rho);
    return r;
}

std::optional<PowerAllocation> star_membership(const SystemSpec& spec, const RatePoint& target) {
    require(target.size() == spec.num_users(), "star_membership: rate length mismatch");
    const double rho = spec.rho();
    Eigen::VectorXd gamma(target.size());
    double assigned = 0.0;
    for (Eigen::Index k = 0; k < target.size(); ++k) {
        require(std::isfinite(target[k]) && target[k] >= 0.0,
                "star_membership: rates must be finite and >= 0");
        if (target[k] == 0.0) {
            gamma[k] = 0.0;
            continue;
        }
        const double g = spec.gain(static_cast<int>(k));
        if (g <= 0.0) return std::nullopt;  // positive rate needs positive quantile gain
        const double growth = std::expm1(target[k]);
        gamma[k] = growth * (g * assigned * rho + 1.0) / (g * rho);
        assigned += gamma[k];
        if (!(assigned <= 1.0 + 1e-9)) return std::nullopt;
    }
    // Leftover budget only helps the last layer, so the certificate stays
    // valid after topping it up to an exact simplex point.
    gamma[gamma.size() - 1] += std::max(0.0, 1.0 - assigned);
    return PowerAllocation(gamma);
}

void prune_dominated(std::vector<FrontierPoint>& points) {
    if (points.empty()) return;
    const auto dims = points.front().rate.size();
    auto desc = [](const FrontierPoint& a, const FrontierPoint& b) {
        for (Eigen::Index i = 0; i < a.rate.size(); ++i) {
            if (a.rate[i] != b.rate[i]) return a.rate[i] > b.rate[i];
        }
        return false;
    };
    std::sort(points.begin(), points.end(), desc);

    std::vector<FrontierPoint> kept;
    kept.reserve(points.size());
    if (dims == 2) {
        // Sorted by rate[0] descending, a point survives iff its rate[1]
        // beats everything seen so far.
        double best = -1.0;
        for (auto& p : points) {
            if (p.rate[1] > best) {
                best = p.rate[1];
                kept.push_back(std::move(p));
            }
        }
    } else {
        for (auto& p : points) {
            bool dominated = false;
            for (const auto& q : kept) {
                bool geq = true;
                for (Eigen::Index i = 0; i < dims && geq; ++i) geq = q.rate[i] >= p.rate[i];
                if (geq) {  // q either dominates p or duplicates it
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(std::move(p));
        }
    }
    std::sort(kept.begin(), kept.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
        return a.rate[0] < b.rate[0];
    });
    points = std::move(kept);
}

namespace {

std::vector<std::string> numbered_names(const char* stem, int count) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) names.push_back(std::string(stem) + "_" + std::to_string(i));
    return names;
}

}  // namespace

Frontier star_frontier(const SystemSpec& spec, int grid) {
    require(grid >= 2, "star_frontier: grid must be >= 2");
    const int K = spec.num_users();
    require(K <= 3, "star_frontier: sweep supports up to 3 users");

    Frontier f;
    f.scheme = FrontierScheme::star;
    f.param_names = numbered_names("gamma", K);

    auto push = [&](const Eigen::VectorXd& gamma) {
        PowerAllocation alloc(gamma);
        f.points.push_back({alloc.gamma(), star_rate(spec, alloc)});
    };

    const double step = 1.0 / static_cast<double>(grid - 1);
    if (K == 1) {
        push(Eigen::VectorXd::Ones(1));
    } else if (K == 2) {
        for (int i = 0; i < grid; ++i) {
            const double g1 = static_cast<double>(i) * step;
            push(Eigen::Vector2d(g1, 1.0 - g1));
        }
    } else {
        for (int i = 0; i < grid; ++i) {
            for (int j = 0; j + i < grid; ++j) {
                const double g1 = static_cast<double>(i) * step;
                const double g2 = static_cast<double>(j) * step;
                push(Eigen::Vector3d(g1, g2, std::max(0.0, 1.0 - g1 - g2)));
            }
        }
    }
    prune_dominated(f.points);
    return f;
}

Frontier td_frontier(const SystemSpec& spec, int grid) {
    require(grid >= 2, "td_frontier: grid must be >= 2");
    require(spec.num_users() == 2, "td_frontier: sweep supports exactly two users");

    Frontier f;
    f.scheme = FrontierScheme::time_sharing;
    f.param_names = {"mu_1", "eta_1", "mu_2", "eta_2"};

    auto push = [&](double mu1, double eta1, double eta2) {
        TimeSharingPolicy policy(Eigen::Vector2d(mu1, 1.0 - mu1), Eigen::Vector2d(eta1, eta2));
        Eigen::VectorXd params(4);
        params << policy.mu()[0], policy.eta()[0], policy.mu()[1], policy.eta()[1];
        f.points.push_back({params, td_rate(spec, policy)});
    };

    const double denom = static_cast<double>(grid - 1);
    for (int i = 0; i < grid; ++i) {
        const double mu1 = static_cast<double>(i) / denom;
        if (mu1 == 0.0) {
            push(0.0, 0.0, 1.0);
            continue;
        }
        if (mu1 == 1.0) {
            push(1.0, 1.0, 0.0);
            continue;
        }
        auto push_eta = [&](double eta1) {
            const double eta2 = std::max(0.0, (1.0 - mu1 * eta1) / (1.0 - mu1));
            push(mu1, eta1, eta2);
        };
        // Geometric sweep of the boost, spanning nearly-off to the full
        // budget 1/mu1, plus the uniform-power point exactly.
        for (int j = 0; j < grid; ++j)
            push_eta(1e-3 * std::pow(1000.0 / mu1, static_cast<double>(j) / denom));
        push_eta(1.0);
    }
    prune_dominated(f.points);
    return f;
}

UpperEnvelope::UpperEnvelope(const Frontier& frontier) {
    require(!frontier.points.empty(), "envelope: frontier is empty");
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(frontier.points.size());
    for (const auto& p : frontier.points) {
        require(p.rate.size() == 2, "envelope: two-user frontiers only");
        pts.emplace_back(p.rate[0], p.rate[1]);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.x() != b.x() ? a.x() < b.x() : a.y() > b.y();
    });
    // Upper convex hull, left to right: drop any vertex that sits on or
    // below the chord of its neighbors.
    for (const auto& p : pts) {
        if (!vertices_.empty() && vertices_.back().x() == p.x()) continue;
        while (vertices_.size() >= 2) {
            const auto& a = vertices_[vertices_.size() - 2];
            const auto& b = vertices_.back();
            const double cross =
                (b.x() - a.x()) * (p.y() - b.y()) - (b.y() - a.y()) * (p.x() - b.x());
            if (cross >= 0.0)
                vertices_.pop_back();
            else
                break;
        }
        vertices_.push_back(p);
    }
}

double UpperEnvelope::rate2_at(double r1) const {
    if (r1 <= vertices_.front().x()) return vertices_.front().y();
    if (r1 >= vertices_.back().x()) return vertices_.back().y();
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), r1,
                               [](const Eigen::Vector2d& v, double x) { return v.x() < x; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (r1 - lo.x()) / (hi.x() - lo.x());
    return lo.y() + w * (hi.y() - lo.y());
}

ContainmentReport containment_check(const SystemSpec& spec, int grid) {
    const Frontier td = td_frontier(spec, grid);
    const Frontier star = star_frontier(spec, grid);

    ContainmentReport report;
    report.points_checked = static_cast<int>(td.points.size());
    for (const auto& p : td.points)
        if (!star_membership(spec, p.rate)) ++report.membership_violations;

    const UpperEnvelope star_env(star);
    const UpperEnvelope td_env(td);
    // The gap between two piecewise-linear curves peaks at a vertex of
    // one of them.
    auto probe = [&](double r1) {
        report.max_sum_rate_gap =
            std::max(report.max_sum_rate_gap, star_env.rate2_at(r1) - td_env.rate2_at(r1));
    };
    for (const auto& v : star_env.vertices()) probe(v.x());
    for (const auto& v : td_env.vertices()) probe(v.x());
    return report;
}

std::string frontier_csv(const Frontier& frontier) {
    std::string out;
    for (std::size_t i = 0; i < frontier.param_names.size(); ++i) {
        if (i) out += ',';
        out += frontier.param_names[i];
    }
    const auto K = frontier.points.empty() ? 0 : frontier.points.front().rate.size();
    for (Eigen::Index k = 1; k <= K; ++k) out += ",R_" + std::to_string(k);
    out += '\n';
    for (const auto& p : frontier.points) {
        for (Eigen::Index i = 0; i < p.params.size(); ++i) {
            if (i) out += ',';
            out += fmt_sig9(p.params[i]);
        }
        for (Eigen::Index k = 0; k < p.rate.size(); ++k) {
            out += ',';
            out += fmt_sig9(p.rate[k]);
        }
        out += '\n';
    }
    return out;
}

Frontier parse_frontier_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "frontier csv: missing header");

    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            cells.push_back(s.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return cells;
    };

    const auto header = split(line);
    std::size_t first_rate = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i].rfind("R_", 0) == 0) {
            first_rate = i;
            break;
        }
    }
    require(first_rate > 0 && first_rate < header.size(),
            "frontier csv: header must list parameters then rates");

    Frontier f;
    f.param_names.assign(header.begin(), header.begin() + static_cast<long>(first_rate));
    f.scheme = f.param_names.front().rfind("gamma", 0) == 0 ? FrontierScheme::star
                                                            : FrontierScheme::time_sharing;
    const std::size_t K = header.size() - first_rate;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        require(cells.size() == header.size(), "frontier csv: ragged row");
        FrontierPoint p;
        p.params.resize(static_cast<Eigen::Index>(first_rate));
        p.rate.resize(static_cast<Eigen::Index>(K));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::size_t used = 0;
            const double v = std::stod(cells[i], &used);
            require(used == cells[i].size(), "frontier csv: bad number");
            if (i < first_rate)
                p.params[static_cast<Eigen::Index>(i)] = v;
            else
                p.rate[static_cast<Eigen::Index>(i - first_rate)] = v;
        }
        f.points.push_back(std::move(p));
    }
    return f;
}

}  // namespace obc
