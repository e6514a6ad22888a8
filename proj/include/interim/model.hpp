#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace interim {

// Ordered per-period effect estimates with a known sampling scale. The pair
// (estimates, sigma) is the sufficient data for every inference here.
struct EffectStream {
    std::vector<double> estimates;
    double sigma = 1.0;

    std::size_t size() const { return estimates.size(); }

    // first `n` periods as a view over the same sigma
    EffectStream prefix(std::size_t n) const {
        return {std::vector<double>(estimates.begin(), estimates.begin() + static_cast<std::ptrdiff_t>(n)), sigma};
    }
};

// throws on empty stream, bad sigma, or nonfinite estimates
void validate_stream(const EffectStream& stream);

struct GaussianDist {
    double mean = 0.0;
    double variance = 0.0;

    double sd() const;
    // N(mean, variance) CDF; a step function when the variance is zero
    double cdf(double x) const;
};

struct Prior {
    enum class Kind { FlatLimit, Proper };

    Kind kind = Kind::FlatLimit;
    double m0 = 0.0;   // Proper only
    double tau = 0.0;  // Proper only: prior variance, > 0

    static Prior flat() { return {}; }
    static Prior proper(double m0, double tau) { return {Kind::Proper, m0, tau}; }
};

// The paper-printed predictive variance and the variance implied by the
// two-stage generative process disagree; both are available and the
// generative one is the default (it is the one the Monte-Carlo estimator
// integrates over).
enum class PredictiveMode { PaperFormula, GenerativeAggregate };

struct ModelConfig {
    double alpha = 0.05;
    int horizon = 14;
    Prior prior = Prior::flat();
    PredictiveMode predictive_mode = PredictiveMode::GenerativeAggregate;
};

void validate_model(const ModelConfig& config);

// Conjugate posterior for the mean effect given the observed stream.
// FlatLimit: N(mean(estimates), sigma^2/n). Proper: precision-weighted
// combination of the prior with the likelihood.
GaussianDist posterior(const EffectStream& stream, const ModelConfig& config);

namespace detail {
// posterior as a function of the (canonically summed) estimate total; the
// Monte-Carlo engine reuses this so per-replicate scoring is bit-identical
// to final_success on the assembled stream
GaussianDist posterior_from_sum(double sum, double n, double sigma, const ModelConfig& config);
}  // namespace detail

// P(theta > 0) under the posterior; indicator semantics at zero variance
double prob_positive(const GaussianDist& post);

// end-of-horizon success: P(theta > 0 | full stream) strictly above 1 - alpha
bool final_success(const EffectStream& stream, const ModelConfig& config);

// Distribution of the end-of-horizon overall mean estimate given an interim
// stream of length < horizon, under the selected predictive mode.
GaussianDist predictive_end_state(const EffectStream& stream, const ModelConfig& config);

}  // namespace interim
