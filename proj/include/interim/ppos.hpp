#pragma once

#include <cstdint>

#include "interim/model.hpp"

namespace interim {

enum class Verdict { Continue, StopSuccess, StopFailure };

const char* verdict_name(Verdict v);

struct PposConfig {
    double gamma_success = 0.9;
    double gamma_failure = 0.1;
    std::uint64_t mc_draws = 10000;
    std::uint64_t seed = 0;
};

void validate_ppos(const PposConfig& config);

enum class PposMethod { MonteCarlo, ClosedForm };

struct PposResult {
    double estimate = 0.0;
    double mc_std_error = 0.0;
    PposMethod method = PposMethod::ClosedForm;
    std::uint64_t draws_used = 0;
};

// Predictive probability that the completed experiment meets the final
// success criterion, by forward simulation: per replicate, draw an effect
// from the interim posterior, simulate the remaining periods, and score the
// completed stream with the final rule. Deterministic given (seed, mc_draws)
// and independent of execution order.
PposResult ppos_monte_carlo(const EffectStream& stream, const ModelConfig& config, const PposConfig& pcfg);

// Same quantity in closed form under the selected predictive mode. At the
// horizon both estimators degenerate to the final-success indicator.
PposResult ppos_closed_form(const EffectStream& stream, const ModelConfig& config, double alpha);

inline PposResult ppos_closed_form(const EffectStream& stream, const ModelConfig& config) {
    return ppos_closed_form(stream, config, config.alpha);
}

// PPoS below gamma_failure abandons, above gamma_success stops for success,
// and boundary values continue.
Verdict ppos_decision(const PposResult& result, const PposConfig& pcfg);

}  // namespace interim
