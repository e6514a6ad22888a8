#include "interim/model.hpp"

#include <cmath>

#include "interim/errors.hpp"
#include "interim/kernels/kernels.hpp"
#include "interim/sums.hpp"

namespace interim {

void validate_stream(const EffectStream& stream) {
    if (stream.estimates.empty()) throw EmptyStreamError("stream has no estimates");
    if (!(stream.sigma > 0.0) || !std::isfinite(stream.sigma))
        throw InvalidScaleError("sigma must be positive and finite");
    for (double x : stream.estimates)
        if (!std::isfinite(x)) throw InvalidEstimateError("estimate is not finite");
}

void validate_model(const ModelConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw InvalidConfigError("alpha must lie in (0, 1)");
    if (config.horizon < 1) throw InvalidConfigError("horizon must be at least 1");
    if (config.prior.kind == Prior::Kind::Proper) {
        if (!(config.prior.tau > 0.0) || !std::isfinite(config.prior.tau))
            throw InvalidConfigError("proper prior requires tau > 0");
        if (!std::isfinite(config.prior.m0)) throw InvalidConfigError("prior mean must be finite");
    }
}

double GaussianDist::sd() const { return std::sqrt(variance); }

double GaussianDist::cdf(double x) const {
    if (variance == 0.0) {
        if (x < mean) return 0.0;
        return x == mean ? 0.5 : 1.0;
    }
    return kern::norm_cdf((x - mean) / sd());
}

GaussianDist posterior(const EffectStream& stream, const ModelConfig& config) {
    validate_stream(stream);
    validate_model(config);
    const double n = static_cast<double>(stream.size());
    const double sum = stable_sum(stream.estimates);
    const double s2 = stream.sigma * stream.sigma;
    if (config.prior.kind == Prior::Kind::FlatLimit) {
        return {sum / n, s2 / n};
    }
    const double prior_prec = 1.0 / config.prior.tau;
    const double var = 1.0 / (prior_prec + n / s2);
    const double mean = var * (config.prior.m0 * prior_prec + sum / s2);
    return {mean, var};
}

double prob_positive(const GaussianDist& post) {
    if (post.variance == 0.0) return post.mean > 0.0 ? 1.0 : 0.0;
    return kern::norm_cdf(post.mean / post.sd());
}

bool final_success(const EffectStream& stream, const ModelConfig& config) {
    validate_stream(stream);
    validate_model(config);
    if (stream.size() != static_cast<std::size_t>(config.horizon))
        throw HorizonMismatchError("final decision requires the full horizon");
    return prob_positive(posterior(stream, config)) > 1.0 - config.alpha;
}

GaussianDist predictive_end_state(const EffectStream& stream, const ModelConfig& config) {
    validate_stream(stream);
    validate_model(config);
    const auto n = stream.size();
    const auto horizon = static_cast<std::size_t>(config.horizon);
    if (n >= horizon) throw NothingToPredictError("interim stream must be shorter than the horizon");

    const GaussianDist post = posterior(stream, config);
    const double s2 = stream.sigma * stream.sigma;
    const double t_total = static_cast<double>(horizon);
    const double t_future = static_cast<double>(horizon - n);

    if (config.predictive_mode == PredictiveMode::PaperFormula) {
        return {post.mean, s2 / t_total + post.variance};
    }
    // end-of-horizon mean of the completed stream: observed part is fixed,
    // future part averages t_future draws around a posterior effect draw
    const double obs_sum = stable_sum(stream.estimates);
    const double mean = (obs_sum + t_future * post.mean) / t_total;
    const double frac = t_future / t_total;
    const double variance = frac * frac * (post.variance + s2 / t_future);
    return {mean, variance};
}

}  // namespace interim
