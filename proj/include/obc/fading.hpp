#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace obc {

// Channel power gain distributions. A model describes the law of the
// scalar gain `a` seen by one receiver; rates and outage thresholds are
// compared against quantiles of this law.

// Gain is exponential with the given mean (single Rayleigh branch).
struct ExponentialGain {
    double mean;
};

// Gain is `scale` times a sum of `count` iid exponentials with mean
// `branch_mean` (a Gamma law with integer shape). Covers receive
// aggregation of equal independent branches and per-antenna power
// splitting at the transmit side.
struct IidSumGain {
    int count;
    double branch_mean;
    double scale;
};

// Gain is |h1|^2 + |h2|^2 for jointly Gaussian branches with powers
// `mean1`, `mean2` and correlation `zeta`. lambda1 >= lambda2 are the
// eigenvalues of the 2x2 branch covariance; they fully determine the law.
struct CorrelatedPairGain {
    double mean1;
    double mean2;
    double zeta;
    double lambda1;
    double lambda2;
};

// Gain takes one of finitely many recorded values, uniformly at random.
// `samples` is kept sorted ascending. `source` remembers the file the
// samples came from, when there was one, for printing.
struct EmpiricalGain {
    std::vector<double> samples;
    std::string source;
};

class FadingModel {
public:
    using Variant = std::variant<ExponentialGain, IidSumGain, CorrelatedPairGain, EmpiricalGain>;

    static FadingModel exponential(double mean);
    static FadingModel iid_sum(int count, double branch_mean, double scale);
    static FadingModel correlated_pair(double mean1, double mean2, double zeta);
    static FadingModel empirical(std::vector<double> samples, std::string source = {});

    // P[gain <= a]. Throws std::domain_error for a < 0.
    double cdf(double a) const;

    // Smallest a with P[gain <= a] >= t, i.e. the lower t-quantile.
    // t must lie in [0, 1); t = 0 maps to the smallest attainable gain.
    // Continuous families invert the CDF to within 1e-12; the empirical
    // family returns the ceil(t*n)-th order statistic.
    double quantile(double t) const;

    // n iid draws, fully determined by `seed`.
    Eigen::VectorXd sample(std::uint64_t seed, Eigen::Index n) const;

    // Mean of the law (sample mean for the empirical family).
    double mean() const;

    // Canonical text form, e.g. "exp(mean=10)". parse(str()) reproduces
    // the model; for the empirical family this requires `source` to name
    // a readable file.
    std::string str() const;

    // Parses the text forms exp(mean=), iidsum(m=,mean=,scale=),
    // pair(m1=,m2=,zeta=), empirical(path=). The empirical form loads
    // whitespace-separated gains from the file. Malformed text or an
    // unreadable/empty file throws std::invalid_argument.
    static FadingModel parse(std::string_view text);

    const Variant& variant() const { return v_; }

private:
    explicit FadingModel(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Law of the summed gain across receive branches. One branch gives the
// exponential law; two branches the correlated-pair law; more than two
// are supported only uncorrelated with equal means (zeta must be 0).
FadingModel simo_aggregate(const std::vector<double>& branch_means, double zeta);

// Law of the effective gain when transmit power is split evenly over
// `count` independent equal-mean branches.
FadingModel miso_aggregate(int count, double branch_mean);

}  // namespace obc
