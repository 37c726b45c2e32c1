#ifndef LAKEFLOW_ANNEALER_HPP
#define LAKEFLOW_ANNEALER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <vector>

#include "lakeflow/core.hpp"

namespace lakeflow {

// Per-coordinate box the search is confined to.
struct Bounds {
    std::vector<double> lo;
    std::vector<double> hi;

    size_t size() const { return lo.size(); }

    void validate() const {
        if (lo.size() != hi.size() || lo.empty())
            throw PreconditionError("bounds: lo/hi must be equal-length and nonempty");
        for (size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] < hi[i]))
                throw PreconditionError("bounds: need lo < hi in every coordinate");
    }

    bool contains(const std::vector<double>& x) const {
        if (x.size() != lo.size())
            return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i])
                return false;
        return true;
    }

    std::vector<double> clip(std::vector<double> x) const {
        for (size_t i = 0; i < x.size(); ++i)
            x[i] = std::clamp(x[i], lo[i], hi[i]);
        return x;
    }
};

struct AnnealConfig {
    double t0 = 1.0;            // initial temperature, score units
    double t_min = 1e-4;        // stop when the temperature falls to this
    double alpha = 0.995;       // geometric cooling rate
    int iters_per_temp = 20;    // proposals per temperature level (1 = cool every move)
    double step_fraction = 0.05; // proposal half-width as a fraction of bound width
    std::uint64_t seed = 0;
    int restarts = 4;           // independent chains, best result wins
    int trace_stride = 1;       // record every n-th iteration; 0 disables the trace

    void validate() const {
        if (!(t_min > 0.0 && t_min < t0))
            throw PreconditionError("anneal config: need 0 < t_min < t0");
        if (!(alpha > 0.0 && alpha < 1.0))
            throw PreconditionError("anneal config: need 0 < alpha < 1");
        if (iters_per_temp < 1)
            throw PreconditionError("anneal config: need at least one iteration per temperature");
        if (!(step_fraction > 0.0 && step_fraction <= 1.0))
            throw PreconditionError("anneal config: step fraction must be in (0, 1]");
        if (restarts < 1)
            throw PreconditionError("anneal config: need at least one chain");
    }
};

struct TracePoint {
    std::int64_t iteration = 0;
    double temperature = 0.0;
    double current = 0.0;
    double best = 0.0;
};

struct AnnealTrace {
    std::vector<TracePoint> points;
};

struct AnnealResult {
    std::vector<double> best;
    double best_score = 0.0;
    AnnealTrace trace;
};

// Objective evaluation produced a non-finite score; carries the offending
// vector rather than treating it as -inf (silent -inf masks model bugs).
class OptimizationError : public Error {
  public:
    OptimizationError(const std::string& msg, std::vector<double> plan)
        : Error(msg), offending_plan(std::move(plan)) {}

    std::vector<double> offending_plan;
};

using Objective = std::function<double(const std::vector<double>&)>;

/**
 * Proposal move: perturbs one uniformly chosen coordinate by a uniform draw
 * in +/-(step_fraction * bound width), then clips to the box.
 */
inline std::vector<double> neighbor(const std::vector<double>& x, const Bounds& bounds,
                                    double step_fraction, std::mt19937_64& rng) {
    if (x.empty())
        throw PreconditionError("neighbor: empty plan");
    std::uniform_int_distribution<size_t> pick(0, x.size() - 1);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    size_t i = pick(rng);
    double width = bounds.hi[i] - bounds.lo[i];
    std::vector<double> y = x;
    y[i] = std::clamp(y[i] + unit(rng) * step_fraction * width, bounds.lo[i], bounds.hi[i]);
    return y;
}

namespace detail {

inline double evaluate(const Objective& objective, const std::vector<double>& x) {
    double g = objective(x);
    if (!std::isfinite(g))
        throw OptimizationError("objective returned a non-finite score", x);
    return g;
}

} // namespace detail

/**
 * Metropolis maximization with geometric cooling: accept any improvement,
 * accept a worse move with probability exp(dG/T), cool by alpha after each
 * block of iters_per_temp proposals, stop at t_min. Returns the best plan
 * ever visited.
 */
inline AnnealResult anneal(const Objective& objective, std::vector<double> initial,
                           const Bounds& bounds, const AnnealConfig& config) {
    config.validate();
    bounds.validate();
    if (initial.size() != bounds.size())
        throw PreconditionError("anneal: initial plan does not match bounds");
    if (!bounds.contains(initial))
        throw PreconditionError("anneal: initial plan outside bounds");

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    AnnealResult r;
    std::vector<double> current = std::move(initial);
    double g_current = detail::evaluate(objective, current);
    r.best = current;
    r.best_score = g_current;

    std::int64_t iteration = 0;
    auto record = [&](double temperature) {
        if (config.trace_stride > 0 && iteration % config.trace_stride == 0)
            r.trace.points.push_back({iteration, temperature, g_current, r.best_score});
    };

    for (double t = config.t0; t > config.t_min; t *= config.alpha) {
        for (int i = 0; i < config.iters_per_temp; ++i, ++iteration) {
            std::vector<double> candidate = neighbor(current, bounds, config.step_fraction, rng);
            double g_new = detail::evaluate(objective, candidate);
            double dg = g_new - g_current;
            if (dg > 0.0 || std::exp(dg / t) > unit(rng)) {
                current = std::move(candidate);
                g_current = g_new;
                if (g_current > r.best_score) {
                    r.best = current;
                    r.best_score = g_current;
                }
            }
            record(t);
        }
    }
    return r;
}

/**
 * Runs `config.restarts` independent chains and keeps the best. Chain 0
 * starts from the supplied plan, the rest from seeded uniform draws inside
 * the box. Chains run concurrently, so the objective must be safe to call
 * from several threads; the winner is chosen deterministically (score, then
 * lowest chain index).
 */
inline AnnealResult anneal_restarts(const Objective& objective, const std::vector<double>& initial,
                                    const Bounds& bounds, const AnnealConfig& config,
                                    bool parallel = true) {
    config.validate();
    bounds.validate();

    auto run_chain = [&](int chain) {
        AnnealConfig c = config;
        c.seed = config.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(chain + 1);
        std::vector<double> start = initial;
        if (chain > 0) {
            std::mt19937_64 rng(c.seed ^ 0x5bf03635ull);
            start.resize(bounds.size());
            for (size_t i = 0; i < bounds.size(); ++i) {
                std::uniform_real_distribution<double> d(bounds.lo[i], bounds.hi[i]);
                start[i] = d(rng);
            }
        }
        return anneal(objective, start, bounds, c);
    };

    std::vector<AnnealResult> results(static_cast<size_t>(config.restarts));
    if (parallel && config.restarts > 1) {
        std::vector<std::future<AnnealResult>> futures;
        futures.reserve(static_cast<size_t>(config.restarts));
        for (int c = 0; c < config.restarts; ++c)
            futures.push_back(std::async(std::launch::async, run_chain, c));
        for (int c = 0; c < config.restarts; ++c)
            results[static_cast<size_t>(c)] = futures[static_cast<size_t>(c)].get();
    } else {
        for (int c = 0; c < config.restarts; ++c)
            results[static_cast<size_t>(c)] = run_chain(c);
    }

    size_t winner = 0;
    for (size_t c = 1; c < results.size(); ++c)
        if (results[c].best_score > results[winner].best_score)
            winner = c;
    return results[winner];
}

} // namespace lakeflow

#endif // LAKEFLOW_ANNEALER_HPP
