#include "obc/fading.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "obc/numerics.hpp"
#include "obc/rng.hpp"

namespace obc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

bool all_finite(double v) { return std::isfinite(v); }

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

struct Overloaded {
    template <class... Fs>
    struct Set;
};

template <class... Fs>
struct VisitSet : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
VisitSet(Fs...) -> VisitSet<Fs...>;

}  // namespace

FadingModel FadingModel::exponential(double mean) {
    require(all_finite(mean) && mean > 0.0, "exponential gain: mean must be positive");
    return FadingModel(ExponentialGain{mean});
}

FadingModel FadingModel::iid_sum(int count, double branch_mean, double scale) {
    require(count >= 1, "iid sum gain: count must be >= 1");
    require(all_finite(branch_mean) && branch_mean > 0.0,
            "iid sum gain: branch mean must be positive");
    require(all_finite(scale) && scale > 0.0, "iid sum gain: scale must be positive");
    return FadingModel(IidSumGain{count, branch_mean, scale});
}

FadingModel FadingModel::correlated_pair(double mean1, double mean2, double zeta) {
    require(all_finite(mean1) && mean1 > 0.0, "correlated pair gain: mean1 must be positive");
    require(all_finite(mean2) && mean2 > 0.0, "correlated pair gain: mean2 must be positive");
    require(all_finite(zeta) && std::abs(zeta) <= 1.0,
            "correlated pair gain: zeta must lie in [-1, 1]");
    const double c = zeta * std::sqrt(mean1 * mean2);
    Eigen::Matrix2d cov;
    cov << mean1, c, c, mean2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
    // Eigen reports eigenvalues ascending; both are nonnegative up to
    // roundoff because cov is positive semidefinite by construction.
    const double l2 = std::max(0.0, es.eigenvalues()(0));
    const double l1 = es.eigenvalues()(1);
    return FadingModel(CorrelatedPairGain{mean1, mean2, zeta, l1, l2});
}

FadingModel FadingModel::empirical(std::vector<double> samples, std::string source) {
    require(!samples.empty(), "empirical gain: sample set must be nonempty");
    for (double s : samples)
        require(all_finite(s) && s >= 0.0, "empirical gain: samples must be finite and >= 0");
    std::sort(samples.begin(), samples.end());
    return FadingModel(EmpiricalGain{std::move(samples), std::move(source)});
}

double FadingModel::cdf(double a) const {
    if (!(a >= 0.0)) throw std::domain_error("gain cdf: argument must be >= 0");
    return std::visit(
        VisitSet{
            [a](const ExponentialGain& p) { return -std::expm1(-a / p.mean); },
            [a](const IidSumGain& p) {
                return num::regularized_gamma_p(p.count, a / (p.scale * p.branch_mean));
            },
            [a](const CorrelatedPairGain& p) {
                const double l1 = p.lambda1;
                const double l2 = p.lambda2;
                if (l2 <= 1e-14 * l1) return -std::expm1(-a / l1);
                if (l1 - l2 <= 1e-9 * l1) {
                    // Equal-eigenvalue limit: the two-term formula cancels,
                    // but the law degenerates to a shape-2 gamma.
                    return num::regularized_gamma_p(2, a / (0.5 * (l1 + l2)));
                }
                return 1.0 - (l1 * std::exp(-a / l1) - l2 * std::exp(-a / l2)) / (l1 - l2);
            },
            [a](const EmpiricalGain& p) {
                const auto it = std::upper_bound(p.samples.begin(), p.samples.end(), a);
                return static_cast<double>(it - p.samples.begin()) /
                       static_cast<double>(p.samples.size());
            },
        },
        v_);
}

double FadingModel::quantile(double t) const {
    if (!(t >= 0.0) || t >= 1.0) throw std::domain_error("gain quantile: t must lie in [0, 1)");
    if (const auto* p = std::get_if<ExponentialGain>(&v_))
        return -p->mean * std::log1p(-t);
    if (const auto* p = std::get_if<EmpiricalGain>(&v_)) {
        const auto n = static_cast<std::int64_t>(p->samples.size());
        auto idx = static_cast<std::int64_t>(
            std::ceil(t * static_cast<double>(n) - 1e-9));
        idx = std::clamp<std::int64_t>(idx, 1, n);
        return p->samples[static_cast<std::size_t>(idx - 1)];
    }
    // Continuous families without a closed-form inverse: bracket the root
    // of cdf(a) = t, then bisect to full double precision.
    if (t == 0.0) return 0.0;
    double hi = mean() * 64.0 * std::max(1.0, -std::log1p(-t));
    for (int it = 0; it < 60 && cdf(hi) < t; ++it) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 200 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket is one ulp wide
        if (cdf(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Eigen::VectorXd FadingModel::sample(std::uint64_t seed, Eigen::Index n) const {
    if (n < 0) throw std::invalid_argument("gain sample: n must be >= 0");
    auto eng = rng::make_engine(seed);
    Eigen::VectorXd out(n);
    std::visit(
        VisitSet{
            [&](const ExponentialGain& p) {
                std::exponential_distribution<double> d(1.0);
                for (Eigen::Index i = 0; i < n; ++i) out[i] = p.mean * d(eng);
            },
            [&](const IidSumGain& p) {
                std::exponential_distribution<double> d(1.0);
                for (Eigen::Index i = 0; i < n; ++i) {
                    double acc = 0.0;
                    for (int b = 0; b < p.count; ++b) acc += d(eng);
                    out[i] = p.scale * p.branch_mean * acc;
                }
            },
            [&](const CorrelatedPairGain& p) {
                // In the eigenbasis of the branch covariance the two
                // complex coefficients are independent with powers
                // lambda1, lambda2, so each contributes the squared
                // magnitude of a circular Gaussian.
                std::normal_distribution<double> d(0.0, 1.0);
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double x1 = d(eng), y1 = d(eng);
                    const double x2 = d(eng), y2 = d(eng);
                    out[i] = 0.5 * (p.lambda1 * (x1 * x1 + y1 * y1) +
                                    p.lambda2 * (x2 * x2 + y2 * y2));
                }
            },
            [&](const EmpiricalGain& p) {
                std::uniform_int_distribution<std::size_t> d(0, p.samples.size() - 1);
                for (Eigen::Index i = 0; i < n; ++i) out[i] = p.samples[d(eng)];
            },
        },
        v_);
    return out;
}

double FadingModel::mean() const {
    return std::visit(
        VisitSet{
            [](const ExponentialGain& p) { return p.mean; },
            [](const IidSumGain& p) { return p.count * p.branch_mean * p.scale; },
            [](const CorrelatedPairGain& p) { return p.mean1 + p.mean2; },
            [](const EmpiricalGain& p) {
                return std::accumulate(p.samples.begin(), p.samples.end(), 0.0) /
                       static_cast<double>(p.samples.size());
            },
        },
        v_);
}

std::string FadingModel::str() const {
    return std::visit(
        VisitSet{
            [](const ExponentialGain& p) { return "exp(mean=" + fmt_double(p.mean) + ")"; },
            [](const IidSumGain& p) {
                return "iidsum(m=" + std::to_string(p.count) + ",mean=" + fmt_double(p.branch_mean) +
                       ",scale=" + fmt_double(p.scale) + ")";
            },
            [](const CorrelatedPairGain& p) {
                return "pair(m1=" + fmt_double(p.mean1) + ",m2=" + fmt_double(p.mean2) +
                       ",zeta=" + fmt_double(p.zeta) + ")";
            },
            [](const EmpiricalGain& p) { return "empirical(path=" + p.source + ")"; },
        },
        v_);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct ParsedCall {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args;

    std::string_view get(const char* key) const {
        for (const auto& [k, v] : args)
            if (k == key) return v;
        throw std::invalid_argument(std::string("fading parse: missing key '") + key + "'");
    }
};

ParsedCall split_call(std::string_view text) {
    text = trim(text);
    const auto open = text.find('(');
    require(open != std::string_view::npos && !text.empty() && text.back() == ')',
            "fading parse: expected name(key=value,...)");
    ParsedCall call;
    call.name = std::string(trim(text.substr(0, open)));
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (!inner.empty()) {
        const auto comma = inner.find(',');
        std::string_view part =
            comma == std::string_view::npos ? inner : inner.substr(0, comma);
        inner = comma == std::string_view::npos ? std::string_view{} : inner.substr(comma + 1);
        const auto eq = part.find('=');
        require(eq != std::string_view::npos, "fading parse: expected key=value");
        call.args.emplace_back(std::string(trim(part.substr(0, eq))),
                               std::string(trim(part.substr(eq + 1))));
    }
    return call;
}

double to_double(std::string_view v, const char* key) {
    const std::string s(v);
    std::size_t used = 0;
    double out;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("fading parse: bad number for '") + key + "'");
    }
    require(used == s.size(), "fading parse: trailing characters after number");
    return out;
}

int to_int(std::string_view v, const char* key) {
    const std::string s(v);
    std::size_t used = 0;
    long out;
    try {
        out = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("fading parse: bad integer for '") + key + "'");
    }
    require(used == s.size(), "fading parse: trailing characters after integer");
    return static_cast<int>(out);
}

std::vector<double> load_samples(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "empirical gain: cannot open sample file");
    std::vector<double> xs;
    double x;
    while (in >> x) xs.push_back(x);
    require(in.eof(), "empirical gain: sample file contains non-numeric data");
    return xs;
}

}  // namespace

FadingModel FadingModel::parse(std::string_view text) {
    const ParsedCall call = split_call(text);
    if (call.name == "exp") {
        require(call.args.size() == 1, "fading parse: exp takes exactly mean=");
        return exponential(to_double(call.get("mean"), "mean"));
    }
    if (call.name == "iidsum") {
        require(call.args.size() == 3, "fading parse: iidsum takes m=, mean=, scale=");
        return iid_sum(to_int(call.get("m"), "m"), to_double(call.get("mean"), "mean"),
                       to_double(call.get("scale"), "scale"));
    }
    if (call.name == "pair") {
        require(call.args.size() == 3, "fading parse: pair takes m1=, m2=, zeta=");
        return correlated_pair(to_double(call.get("m1"), "m1"), to_double(call.get("m2"), "m2"),
                               to_double(call.get("zeta"), "zeta"));
    }
    if (call.name == "empirical") {
        require(call.args.size() == 1, "fading parse: empirical takes exactly path=");
        const std::string path(call.get("path"));
        return empirical(load_samples(path), path);
    }
    throw std::invalid_argument("fading parse: unknown family '" + call.name + "'");
}

FadingModel simo_aggregate(const std::vector<double>& branch_means, double zeta) {
    require(!branch_means.empty(), "receive aggregate: need at least one branch");
    if (branch_means.size() == 1) return FadingModel::exponential(branch_means[0]);
    if (branch_means.size() == 2)
        return FadingModel::correlated_pair(branch_means[0], branch_means[1], zeta);
    require(zeta == 0.0, "receive aggregate: more than two branches require zeta = 0");
    for (double m : branch_means)
        require(m == branch_means[0],
                "receive aggregate: more than two branches require equal means");
    return FadingModel::iid_sum(static_cast<int>(branch_means.size()), branch_means[0], 1.0);
}

FadingModel miso_aggregate(int count, double branch_mean) {
    require(count >= 1, "transmit aggregate: count must be >= 1");
    return FadingModel::iid_sum(count, branch_mean, 1.0 / count);
}

}  // namespace obc
