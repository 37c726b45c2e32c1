#ifndef LAKEFLOW_WLPCM_HPP
#define LAKEFLOW_WLPCM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lakeflow/annealer.hpp"
#include "lakeflow/grading.hpp"
#include "lakeflow/indicators.hpp"
#include "lakeflow/scenario.hpp"

namespace lakeflow {

// ============================================================================
// Configuration
// ============================================================================

struct LevelBand {
    double lo = 0.0;
    double hi = 0.0;
};

struct MpcConfig {
    int horizon = 6;      // months optimized per step
    int apply_window = 1; // months executed before re-planning
    bool ontario = false; // grade the Lake Ontario extension terms
    AnnealConfig anneal;
    std::array<std::optional<LevelBand>, kLakeCount> emergency{};

    void validate() const {
        if (horizon < 1)
            throw PreconditionError("mpc config: horizon must be at least one month");
        if (apply_window < 1 || apply_window > horizon)
            throw PreconditionError("mpc config: need 1 <= apply_window <= horizon");
        anneal.validate();
    }
};

// Advances the true system by one month under the given dam releases. The
// controller sees nothing else of the truth.
using TruthSimulator = std::function<LakeState(const LakeState&, const MonthControls&)>;

// Exogenous Montreal-side inputs: realized values for past months, calendar
// means as the stand-in for months that have not happened yet.
struct ExogenousSeries {
    MonthlySeries ottawa;
    MonthlySeries stl;
    std::array<double, 12> ottawa_monthly_mean{};
    std::array<double, 12> stl_monthly_mean{};
};

/**
 * Everything the controller knows at the start of a run: the fitted model,
 * demands, baselines and the recorded buffers it keeps extending with
 * realized feedback.
 */
struct MpcInputs {
    NetworkTopology topology;
    FlowCoefficients coefficients;
    StakeholderConstraints constraints;
    Baselines baselines;

    std::array<MonthlySeries, kLakeCount> level_history{}; // through the initial month
    MonthlySeries a_release_history;                       // through the initial month - 1
    MonthlySeries e_release_history;
    IndicatorSeries indicator_history;                     // through the initial month - 1
    ExogenousSeries exogenous;
};

inline MpcInputs make_mpc_inputs(const Scenario& sc, const StakeholderConstraints& R) {
    MpcInputs in;
    in.topology = sc.topology;
    in.coefficients = sc.coefficients;
    in.constraints = R;
    in.baselines = sc.baselines;
    int hist_n = sc.eval_start - sc.history_start;
    for (int k = 0; k < kLakeCount; ++k)
        in.level_history[static_cast<size_t>(k)] =
            sc.level_history[static_cast<size_t>(k)].slice(sc.history_start, hist_n + 1);
    in.a_release_history =
        sc.flow_history[static_cast<size_t>(index(River::StMarys))].slice(sc.history_start, hist_n);
    in.e_release_history = sc.flow_history[static_cast<size_t>(index(River::StLawrence))].slice(
        sc.history_start, hist_n);
    in.indicator_history = sc.indicator_history;
    if (!sc.flow_history[static_cast<size_t>(index(River::Ottawa))].empty()) {
        in.exogenous.ottawa = sc.flow_history[static_cast<size_t>(index(River::Ottawa))];
        in.exogenous.ottawa_monthly_mean = sc.baselines.for_river(River::Ottawa).monthly_mean;
    }
    if (!sc.stl_history.empty()) {
        in.exogenous.stl = sc.stl_history;
        in.exogenous.stl_monthly_mean = sc.baselines.stl_monthly_mean;
    }
    return in;
}

// Truth-mode handle: the scenario's own indicators drive the transitions.
inline TruthSimulator make_truth(const Scenario& sc) {
    return [&sc](const LakeState& state, const MonthControls& mc) {
        return step(state, mc, sc.truth_indicators.at_month(state.month), sc.topology,
                    sc.coefficients);
    };
}

// ============================================================================
// Horizon planning
// ============================================================================

namespace detail {

// Level window of 12 months ending at m_end: realized history up to and
// including the planning month, simulated states beyond it.
inline MonthlySeries mixed_level_window(const MonthlySeries& history, const Trajectory& traj,
                                        Lake lake, int m_end) {
    int planning_month = traj.states.front().month;
    MonthlySeries out(m_end - 11, {});
    for (int m = m_end - 11; m <= m_end; ++m)
        out.push_back(m <= planning_month ? history.at_month(m) : traj.at_month(m).level(lake));
    return out;
}

// Release / exogenous window of the 12 transitions ending at m_end - 1.
inline MonthlySeries mixed_flow_window(const MonthlySeries& realized, int realized_end,
                                       const std::function<double(int)>& future, int m_end) {
    MonthlySeries out(m_end - 12, {});
    for (int m = m_end - 12; m < m_end; ++m)
        out.push_back(m < realized_end ? realized.at_month(m) : future(m));
    return out;
}

} // namespace detail

/**
 * Objective for one planning step: simulate the horizon under the candidate
 * plan and forecast indicators, then average the network grade of the rolling
 * 12-month window ending at each horizon month (padded with realized
 * history). Grades are 12-month statistics; this is how a 6-month plan is
 * scored against them.
 */
inline double horizon_objective(const std::vector<double>& x, const LakeState& state,
                                const IndicatorSeries& forecast, const MpcInputs& in,
                                const MpcConfig& config) {
    ControlPlan plan = unflatten(x, state.month);
    Trajectory traj =
        simulate(state, plan, forecast, in.topology, in.coefficients, config.horizon);

    auto ottawa_future = [&](int m) {
        return in.exogenous.ottawa_monthly_mean[static_cast<size_t>(calendar_of(m))];
    };
    auto stl_future = [&](int m) {
        return in.exogenous.stl_monthly_mean[static_cast<size_t>(calendar_of(m))];
    };

    double total = 0.0;
    for (int j = 1; j <= config.horizon; ++j) {
        int m_end = state.month + j;
        GradeWindow w;
        for (int k = 0; k < kLakeCount; ++k)
            w.levels[static_cast<size_t>(k)] = detail::mixed_level_window(
                in.level_history[static_cast<size_t>(k)], traj, static_cast<Lake>(k), m_end);
        if (config.ontario && in.constraints.ontario) {
            auto e_future = [&](int m) { return plan.at_month(m).e; };
            w.e_flows =
                detail::mixed_flow_window(in.e_release_history, state.month, e_future, m_end);
            w.ottawa_flows =
                detail::mixed_flow_window(in.exogenous.ottawa, state.month, ottawa_future, m_end);
            w.stl_flows =
                detail::mixed_flow_window(in.exogenous.stl, state.month, stl_future, m_end);
        }
        StakeholderConstraints R = in.constraints;
        if (!config.ontario)
            R.ontario.reset();
        total += grade_window(w, R, in.baselines).total;
    }
    return total / static_cast<double>(config.horizon);
}

/**
 * One receding-horizon optimization: anneal the horizon-month release plan
 * that maximizes the rolling-window grade. Chain 0 starts from the historical
 * per-calendar-month releases; the other restarts start from random plans.
 * (Warm-starting from the previous step's plan measures worse here: it
 * anchors the chain to a solution computed for a stale state.)
 */
inline ControlPlan plan_horizon(const LakeState& state, const IndicatorSeries& forecast,
                                const MpcInputs& in, const MpcConfig& config,
                                double* best_score = nullptr) {
    config.validate();
    if (!forecast.covers(state.month, config.horizon))
        throw PreconditionError("plan_horizon: forecast does not cover the horizon");

    Bounds bounds = control_bounds(in.topology, config.horizon);
    std::array<double, 12> a_mean = monthly_baseline(to_samples(in.a_release_history));
    std::array<double, 12> e_mean = monthly_baseline(to_samples(in.e_release_history));
    ControlPlan initial;
    initial.start_month = state.month;
    for (int t = 0; t < config.horizon; ++t) {
        int cal = calendar_of(state.month + t);
        initial.a.push_back(a_mean[static_cast<size_t>(cal)]);
        initial.e.push_back(e_mean[static_cast<size_t>(cal)]);
    }

    Objective objective = [&](const std::vector<double>& x) {
        return horizon_objective(x, state, forecast, in, config);
    };
    AnnealResult r = anneal_restarts(objective, bounds.clip(flatten(initial)), bounds,
                                     config.anneal);
    if (best_score)
        *best_score = r.best_score;
    return unflatten(r.best, state.month);
}

// ============================================================================
// The MPC loop
// ============================================================================

struct MpcStepRecord {
    int month = 0;               // planning month
    IndicatorSeries forecast;    // what the planner believed
    ControlPlan plan;            // the optimized horizon plan
    double planned_objective = 0.0;
    std::vector<MonthControls> applied;                          // first apply-window slice
    std::vector<LakeState> realized;                             // one per applied month
    std::vector<std::array<double, kLakeCount>> realized_indicators;
    GradeReport grade_to_date;
    int history_len_after = 0; // indicator months known after this step
};

struct MpcRunRecord {
    std::vector<MpcStepRecord> steps;
    Trajectory realized; // the whole realized path from the initial state
    bool emergency_stopped = false;
    std::string stop_reason;
};

inline MpcRunRecord mpc_run(const LakeState& initial, const TruthSimulator& truth, MpcInputs in,
                            const MpcConfig& config, int months) {
    config.validate();
    if (months < 1)
        throw PreconditionError("mpc_run: need at least one month");
    in.indicator_history.check_aligned();
    if (in.indicator_history.end() != initial.month)
        throw PreconditionError("mpc_run: indicator history must end at the initial month");
    if (config.ontario && in.constraints.ontario &&
        (in.exogenous.ottawa.empty() || in.exogenous.stl.empty()))
        throw PreconditionError("mpc_run: ontario mode needs ottawa and stl series");

    const int run_end = initial.month + months;
    const double ms = in.topology.month_seconds();

    MpcRunRecord rec;
    rec.realized.plan.start_month = initial.month;
    rec.realized.indicators =
        IndicatorSeries{{MonthlySeries(initial.month, {}), MonthlySeries(initial.month, {}),
                         MonthlySeries(initial.month, {}), MonthlySeries(initial.month, {}),
                         MonthlySeries(initial.month, {})}};
    rec.realized.states.push_back(initial);

    LakeState state = initial;
    std::uint64_t base_seed = config.anneal.seed;

    while (state.month < run_end && !rec.emergency_stopped) {
        MpcStepRecord step_rec;
        step_rec.month = state.month;

        step_rec.forecast = forecast_indicator(in.indicator_history, config.horizon);

        MpcConfig step_config = config;
        step_config.anneal.seed =
            base_seed + 0x100000001b3ull *
                            static_cast<std::uint64_t>(state.month - initial.month + 1);
        step_rec.plan =
            plan_horizon(state, step_rec.forecast, in, step_config, &step_rec.planned_objective);

        int apply_n = std::min(config.apply_window, run_end - state.month);
        for (int w = 0; w < apply_n; ++w) {
            MonthControls mc = step_rec.plan.at_month(state.month);
            LakeState prev = state;
            state = truth(prev, mc);

            // Feedback: re-derive the realized natural indicator from the
            // observed transition and extend every buffer.
            auto flows = detail::effective_flows(prev, mc);
            std::array<double, kLakeCount> realized_delta{};
            for (int k = 0; k < kLakeCount; ++k) {
                double inflow = (k == 0) ? 0.0 : flows[static_cast<size_t>(k - 1)];
                double outflow = flows[static_cast<size_t>(k)];
                realized_delta[static_cast<size_t>(k)] =
                    in.topology.lakes[static_cast<size_t>(k)].area_m2 *
                        (state.level_m[static_cast<size_t>(k)] -
                         prev.level_m[static_cast<size_t>(k)]) -
                    (inflow - outflow) * ms;
                in.level_history[static_cast<size_t>(k)].push_back(
                    state.level_m[static_cast<size_t>(k)]);
                in.indicator_history.lake[static_cast<size_t>(k)].push_back(
                    realized_delta[static_cast<size_t>(k)]);
            }
            in.a_release_history.push_back(mc.a);
            in.e_release_history.push_back(mc.e);

            step_rec.applied.push_back(mc);
            step_rec.realized.push_back(state);
            step_rec.realized_indicators.push_back(realized_delta);
            rec.realized.states.push_back(state);
            rec.realized.plan.a.push_back(mc.a);
            rec.realized.plan.e.push_back(mc.e);
            for (int k = 0; k < kLakeCount; ++k)
                rec.realized.indicators.lake[static_cast<size_t>(k)].push_back(
                    realized_delta[static_cast<size_t>(k)]);

            for (int k = 0; k < kLakeCount; ++k) {
                const auto& band = config.emergency[static_cast<size_t>(k)];
                if (band && (state.level_m[static_cast<size_t>(k)] < band->lo ||
                             state.level_m[static_cast<size_t>(k)] > band->hi)) {
                    rec.emergency_stopped = true;
                    rec.stop_reason = "lake " +
                                      std::string(lake_id(static_cast<Lake>(k))) + " level " +
                                      std::to_string(state.level_m[static_cast<size_t>(k)]) +
                                      " left band [" + std::to_string(band->lo) + ", " +
                                      std::to_string(band->hi) + "] at month " +
                                      format_year_month(state.month);
                }
            }
            if (rec.emergency_stopped)
                break;
        }

        // Grade of the trailing year at the point just reached.
        {
            GradeWindow w;
            for (int k = 0; k < kLakeCount; ++k)
                w.levels[static_cast<size_t>(k)] =
                    in.level_history[static_cast<size_t>(k)].slice(state.month - 11, 12);
            StakeholderConstraints R = in.constraints;
            if (config.ontario && in.constraints.ontario) {
                w.e_flows = in.e_release_history.slice(state.month - 12, 12);
                w.ottawa_flows = in.exogenous.ottawa.slice(state.month - 12, 12);
                w.stl_flows = in.exogenous.stl.slice(state.month - 12, 12);
            } else {
                R.ontario.reset();
            }
            step_rec.grade_to_date = grade_window(w, R, in.baselines);
        }
        step_rec.history_len_after = in.indicator_history.lake[0].size();
        rec.steps.push_back(std::move(step_rec));
    }
    return rec;
}

} // namespace lakeflow

#endif // LAKEFLOW_WLPCM_HPP
