#ifndef LAKEFLOW_HYDRONET_HPP
#define LAKEFLOW_HYDRONET_HPP

#include <array>
#include <cmath>
#include <vector>

#include "lakeflow/series.hpp"
#include "lakeflow/topology.hpp"

namespace lakeflow {

// ============================================================================
// Lake -> river linear coefficients
// ============================================================================

// One fitted lake->river relation. Units follow the customary scaling:
// slope in 10³ m²/s per meter of level, intercept in 10⁵ m³/s.
struct PairCoefficients {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// The four fitted pairs, indexed by the draining river a..d. River e has no
// level relation: it is always set by the dam.
struct FlowCoefficients {
    std::array<PairCoefficients, 4> pair{};

    const PairCoefficients& for_river(River r) const {
        if (index(r) >= 4)
            throw DomainError("no level relation for river " + std::string(river_id(r)));
        return pair[static_cast<size_t>(index(r))];
    }

    void validate() const {
        for (const auto& p : pair)
            if (!(p.slope > 0.0))
                throw DomainError("river coefficients need a positive slope");
    }
};

/**
 * Linear lake-level to river-flow relation, clamped below at zero: rivers do
 * not reverse, and the fitted intercepts are negative enough that very low
 * levels would otherwise produce negative flow.
 */
inline double river_flow(double level_m, const PairCoefficients& c) {
    if (!std::isfinite(level_m))
        throw DomainError("river_flow: non-finite level");
    if (!(c.slope > 0.0))
        throw DomainError("river_flow: slope must be positive");
    double raw = c.slope * 1e3 * level_m + c.intercept * 1e5;
    return raw > 0.0 ? raw : 0.0;
}

// ============================================================================
// State and controls
// ============================================================================

// Dam releases for one month on the two controllable edges.
struct MonthControls {
    double a = 0.0; // St. Marys release, m³/s
    double e = 0.0; // St. Lawrence release, m³/s
};

/**
 * Per-month release values for rivers a and e over a horizon. Month t of the
 * plan drives the t-th transition of a simulation that starts at the plan's
 * start month.
 */
struct ControlPlan {
    int start_month = 0;
    std::vector<double> a;
    std::vector<double> e;

    int months() const { return static_cast<int>(a.size()); }

    MonthControls at(int t) const {
        return {a[static_cast<size_t>(t)], e[static_cast<size_t>(t)]};
    }

    MonthControls at_month(int month) const { return at(month - start_month); }

    bool covers(int month, int n) const {
        return month >= start_month && month + n <= start_month + months() &&
               a.size() == e.size();
    }
};

/**
 * Snapshot of the network at a month boundary: levels at month t, plus the
 * river flows of the month that produces the next snapshot (recomputed from
 * these levels for b..d; the latest dam values for a and e).
 */
struct LakeState {
    int month = 0;
    std::array<double, kLakeCount> level_m{};
    std::array<double, kChainRiverCount> flow_m3s{};

    double level(Lake l) const { return level_m[static_cast<size_t>(index(l))]; }
    double flow(River r) const { return flow_m3s[static_cast<size_t>(index(r))]; }

    void validate() const {
        for (double h : level_m)
            if (!std::isfinite(h) || h <= 0.0)
                throw DomainError("lake levels must be finite and positive");
        for (double f : flow_m3s)
            if (!std::isfinite(f) || f < 0.0)
                throw DomainError("previous-month flows must be nonnegative");
    }
};

// Per-lake natural indicator series: the monthly net volume change (m³) from
// everything that is not river flow (precipitation, evaporation, seepage).
struct IndicatorSeries {
    std::array<MonthlySeries, kLakeCount> lake{};

    int start() const { return lake[0].start(); }
    int end() const { return lake[0].end(); }

    bool covers(int month, int n) const {
        for (const auto& s : lake)
            if (!s.covers(month, n))
                return false;
        return true;
    }

    std::array<double, kLakeCount> at_month(int month) const {
        std::array<double, kLakeCount> d{};
        for (int k = 0; k < kLakeCount; ++k)
            d[static_cast<size_t>(k)] = lake[static_cast<size_t>(k)].at_month(month);
        return d;
    }

    void check_aligned() const {
        for (const auto& s : lake)
            if (s.start() != lake[0].start() || s.size() != lake[0].size())
                throw PreconditionError("indicator series must be aligned across lakes");
    }
};

// ============================================================================
// Dynamics
// ============================================================================

namespace detail {

// Flows that prevail during the month being stepped: stored state values for
// the uncontrolled rivers, the plan's values for a and e.
inline std::array<double, kChainRiverCount> effective_flows(const LakeState& state,
                                                            const MonthControls& controls) {
    std::array<double, kChainRiverCount> f = state.flow_m3s;
    f[static_cast<size_t>(index(River::StMarys))] = controls.a;
    f[static_cast<size_t>(index(River::StLawrence))] = controls.e;
    return f;
}

} // namespace detail

/**
 * Advances the network by one month.
 *
 * Volume balance per lake k: area_k * (H_k(t+1) - H_k(t)) =
 * (inflow - outflow) * month_seconds + delta_k, with the month's flows taken
 * from the previous snapshot (one-month delay) and the dam releases from the
 * plan. New flows for the next month are then recomputed from the new levels.
 */
inline LakeState step(const LakeState& state, const MonthControls& controls,
                      const std::array<double, kLakeCount>& indicators_m3,
                      const NetworkTopology& topology, const FlowCoefficients& coefficients) {
    const EdgeSpec& ea = topology.edge(River::StMarys);
    const EdgeSpec& ee = topology.edge(River::StLawrence);
    if (controls.a < ea.min_flow || controls.a > ea.max_flow)
        throw ConstraintError("control a=" + std::to_string(controls.a) + " outside [" +
                              std::to_string(ea.min_flow) + ", " + std::to_string(ea.max_flow) +
                              "] at month " + format_year_month(state.month));
    if (controls.e < ee.min_flow || controls.e > ee.max_flow)
        throw ConstraintError("control e=" + std::to_string(controls.e) + " outside [" +
                              std::to_string(ee.min_flow) + ", " + std::to_string(ee.max_flow) +
                              "] at month " + format_year_month(state.month));
    for (double d : indicators_m3)
        if (!std::isfinite(d))
            throw DomainError("non-finite indicator at month " + format_year_month(state.month));

    const double ms = topology.month_seconds();
    const auto flows = detail::effective_flows(state, controls);

    LakeState next;
    next.month = state.month + 1;
    for (int k = 0; k < kLakeCount; ++k) {
        // Lake k is fed by river k-1 (none for Superior) and drained by river k.
        double inflow = (k == 0) ? 0.0 : flows[static_cast<size_t>(k - 1)];
        double outflow = flows[static_cast<size_t>(k)];
        double area = topology.lakes[static_cast<size_t>(k)].area_m2;
        double volume = (inflow - outflow) * ms + indicators_m3[static_cast<size_t>(k)];
        double level = state.level_m[static_cast<size_t>(k)] + volume / area;
        if (!std::isfinite(level))
            throw NumericalError("non-finite level for lake " +
                                 std::string(lake_id(static_cast<Lake>(k))) + " at month " +
                                 format_year_month(next.month));
        next.level_m[static_cast<size_t>(k)] = level;
    }

    for (River r : {River::StClair, River::Detroit, River::Niagara})
        next.flow_m3s[static_cast<size_t>(index(r))] =
            river_flow(next.level(source_lake(r)), coefficients.for_river(r));
    next.flow_m3s[static_cast<size_t>(index(River::StMarys))] = controls.a;
    next.flow_m3s[static_cast<size_t>(index(River::StLawrence))] = controls.e;
    return next;
}

// A simulated run: the horizon+1 monthly snapshots plus the inputs consumed.
struct Trajectory {
    std::vector<LakeState> states;
    ControlPlan plan;
    IndicatorSeries indicators;

    int months() const { return static_cast<int>(states.size()) - 1; }
    const LakeState& at_month(int month) const {
        int i = month - states.front().month;
        if (i < 0 || i >= static_cast<int>(states.size()))
            throw PreconditionError("trajectory does not cover month " + format_year_month(month));
        return states[static_cast<size_t>(i)];
    }

    // Levels of one lake over [from, from+n) as a series.
    MonthlySeries levels(Lake l, int from, int n) const {
        MonthlySeries out(from, {});
        for (int m = from; m < from + n; ++m)
            out.push_back(at_month(m).level(l));
        return out;
    }

    MonthlySeries flows(River r, int from, int n) const {
        MonthlySeries out(from, {});
        for (int m = from; m < from + n; ++m)
            out.push_back(at_month(m).flow(r));
        return out;
    }
};

/// Folds step over the horizon; month 0 of the result is the initial state.
inline Trajectory simulate(const LakeState& initial, const ControlPlan& plan,
                           const IndicatorSeries& indicators, const NetworkTopology& topology,
                           const FlowCoefficients& coefficients, int horizon) {
    if (horizon < 0)
        throw PreconditionError("simulate: negative horizon");
    if (horizon > 0 && !plan.covers(initial.month, horizon))
        throw PreconditionError("simulate: plan does not cover the horizon");
    if (horizon > 0 && !indicators.covers(initial.month, horizon))
        throw PreconditionError("simulate: indicators do not cover the horizon");

    Trajectory traj;
    traj.plan = plan;
    traj.indicators = indicators;
    traj.states.reserve(static_cast<size_t>(horizon) + 1);
    traj.states.push_back(initial);
    for (int t = 0; t < horizon; ++t) {
        const LakeState& cur = traj.states.back();
        traj.states.push_back(step(cur, plan.at_month(cur.month),
                                   indicators.at_month(cur.month), topology, coefficients));
    }
    return traj;
}

// ============================================================================
// Derived river quantities
// ============================================================================

/// Ratio of monthly flow to the multi-year average for that calendar month.
inline MonthlySeries water_level_index(const MonthlySeries& flow,
                                       const std::array<double, 12>& baseline_mean_by_month) {
    for (double b : baseline_mean_by_month)
        if (!(b > 0.0))
            throw DomainError("water_level_index: baselines must be positive");
    MonthlySeries out(flow.start(), {});
    for (int i = 0; i < flow.size(); ++i)
        out.push_back(flow[i] / baseline_mean_by_month[static_cast<size_t>(flow.calendar_at(i))]);
    return out;
}

/**
 * Retention residual at the Montreal junction: what the St. Lawrence carries
 * beyond the Ottawa, the dam release and the fixed nature/residents draws.
 */
inline double montreal_balance(double st_lawrence, double ottawa, double e_release,
                               double delta_nature, double delta_residents) {
    for (double v : {st_lawrence, ottawa, e_release, delta_nature, delta_residents})
        if (!std::isfinite(v))
            throw DomainError("montreal_balance: non-finite input");
    for (double v : {st_lawrence, ottawa, e_release})
        if (v < 0.0)
            throw DomainError("montreal_balance: flows must be nonnegative");
    return st_lawrence - ottawa - e_release - delta_nature - delta_residents;
}

} // namespace lakeflow

#endif // LAKEFLOW_HYDRONET_HPP
