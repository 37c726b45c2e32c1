#ifndef LAKEFLOW_SCENARIO_HPP
#define LAKEFLOW_SCENARIO_HPP

#include <array>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lakeflow/annealer.hpp"
#include "lakeflow/grading.hpp"
#include "lakeflow/hydronet.hpp"
#include "lakeflow/indicators.hpp"

namespace lakeflow {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fixed Montreal-side draws used by the synthetic world and its bundled
// constraints file, m³/s.
inline constexpr double kSyntheticMontrealNature = 300.0;
inline constexpr double kSyntheticMontrealResidents = 200.0;

// ============================================================================
// Historical data CSV
// ============================================================================
//
// One row per sample: `date (YYYY-MM), series_id, kind (level|flow), value`.
// Lakes (A..E) carry levels; chain rivers (a..e), the Ottawa and the
// St. Lawrence gauge at Montreal ("stl") carry flows. Dates must increase
// within each series.

enum class SampleKind { Level, Flow };

struct Dataset {
    std::array<SampleList, kLakeCount> level{};
    std::array<SampleList, kRiverCount> flow{};
    SampleList stl;

    const SampleList& lake_levels(Lake l) const { return level[static_cast<size_t>(index(l))]; }
    const SampleList& river_flows(River r) const { return flow[static_cast<size_t>(index(r))]; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        out.push_back(trim(field));
    return out;
}

} // namespace detail

inline Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open data file '" + path + "'");

    Dataset ds;
    std::map<std::pair<std::string, std::string>, int> last_month;

    std::string line;
    int row = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++row;
        std::string t = detail::trim(line);
        if (t.empty())
            continue;
        auto fields = detail::split_csv_row(t);
        if (!saw_header) {
            saw_header = true;
            if (fields.size() == 4 && fields[0] == "date" && fields[1] == "series_id" &&
                fields[2] == "kind" && fields[3] == "value")
                continue;
            throw SchemaError(path + ":" + std::to_string(row) +
                              ": expected header 'date,series_id,kind,value'");
        }
        if (fields.size() != 4)
            throw SchemaError(path + ":" + std::to_string(row) + ": expected 4 fields, got " +
                              std::to_string(fields.size()));

        int month;
        try {
            month = parse_year_month(fields[0]);
        } catch (const SchemaError& ex) {
            throw SchemaError(path + ":" + std::to_string(row) + ": " + ex.what());
        }

        const std::string& id = fields[1];
        const std::string& kind = fields[2];
        if (kind != "level" && kind != "flow")
            throw SchemaError(path + ":" + std::to_string(row) + ": unknown kind '" + kind + "'");

        double value;
        try {
            size_t pos = 0;
            value = std::stod(fields[3], &pos);
            if (pos != fields[3].size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw SchemaError(path + ":" + std::to_string(row) + ": bad value '" + fields[3] + "'");
        }
        if (!std::isfinite(value))
            throw SchemaError(path + ":" + std::to_string(row) + ": non-finite value");

        auto key = std::make_pair(id, kind);
        auto it = last_month.find(key);
        if (it != last_month.end() && month <= it->second)
            throw SchemaError(path + ":" + std::to_string(row) + ": non-monotone date for series '" +
                              id + "/" + kind + "'");
        last_month[key] = month;

        bool is_lake = id.size() == 1 && id[0] >= 'A' && id[0] <= 'E';
        bool is_chain_river = id.size() == 1 && id[0] >= 'a' && id[0] <= 'e';
        if (is_lake) {
            if (kind != "level")
                throw SchemaError(path + ":" + std::to_string(row) + ": lake '" + id +
                                  "' carries levels, not '" + kind + "'");
            ds.level[static_cast<size_t>(id[0] - 'A')].push_back({month, value});
        } else if (is_chain_river || id == "ottawa" || id == "stl") {
            if (kind != "flow")
                throw SchemaError(path + ":" + std::to_string(row) + ": river '" + id +
                                  "' carries flows, not '" + kind + "'");
            if (id == "stl")
                ds.stl.push_back({month, value});
            else if (id == "ottawa")
                ds.flow[static_cast<size_t>(index(River::Ottawa))].push_back({month, value});
            else
                ds.flow[static_cast<size_t>(id[0] - 'a')].push_back({month, value});
        } else {
            throw SchemaError(path + ":" + std::to_string(row) + ": unknown series id '" + id + "'");
        }
    }
    if (!saw_header)
        throw SchemaError(path + ": empty file");
    return ds;
}

// Converts a sample window to a contiguous series; gaps are data errors here.
inline MonthlySeries contiguous(const SampleList& samples, int from, int n,
                                const std::string& what) {
    MonthlySeries out(from, {});
    size_t i = 0;
    while (i < samples.size() && samples[i].month < from)
        ++i;
    for (int m = from; m < from + n; ++m, ++i) {
        if (i >= samples.size() || samples[i].month != m)
            throw PreconditionError(what + ": missing sample for " + format_year_month(m));
        out.push_back(samples[i].value);
    }
    return out;
}

inline SampleList window(const SampleList& samples, int from, int end) {
    SampleList out;
    for (const Sample& s : samples)
        if (s.month >= from && s.month < end)
            out.push_back(s);
    return out;
}

// ============================================================================
// Baselines from cleaned history
// ============================================================================

inline Baselines build_baselines(const Dataset& ds, int from, int end,
                                 OutlierRule rule = OutlierRule::ThreeSigma) {
    Baselines b;
    for (int k = 0; k < kLakeCount; ++k) {
        SampleList w = window(ds.level[static_cast<size_t>(k)], from, end);
        CleaningResult cleaned = remove_outliers(w, rule);
        LakeBaselines& lb = b.lake[static_cast<size_t>(k)];
        lb.monthly_mean = monthly_baseline(cleaned.retained);
        std::vector<double> benchmark(lb.monthly_mean.begin(), lb.monthly_mean.end());
        lb.level_mean = mean(benchmark);
        lb.level_sigma = population_stddev(benchmark);
        if (k == index(Lake::Ontario)) {
            std::vector<double> all;
            for (const Sample& s : cleaned.retained)
                all.push_back(s.value);
            double m = mean(all);
            double sd = population_stddev(all);
            b.flood = {m + sd, m + 2.0 * sd};
        }
    }
    for (int r = 0; r < kRiverCount; ++r) {
        SampleList w = window(ds.flow[static_cast<size_t>(r)], from, end);
        if (w.size() < 24)
            continue; // optional series (e.g. no Ottawa in a lakes-only dataset)
        CleaningResult cleaned = remove_outliers(w, rule);
        RiverBaselines& rb = b.river[static_cast<size_t>(r)];
        rb.monthly_mean = monthly_baseline(cleaned.retained);
        std::vector<double> benchmark(rb.monthly_mean.begin(), rb.monthly_mean.end());
        rb.flow_mean = mean(benchmark);
        rb.flow_sigma = population_stddev(benchmark);
    }
    if (ds.stl.size() >= 24) {
        CleaningResult cleaned = remove_outliers(window(ds.stl, from, end), rule);
        b.stl_monthly_mean = monthly_baseline(cleaned.retained);
    }
    return b;
}

// ============================================================================
// Scenario
// ============================================================================

/**
 * Everything one evaluation run needs: the recorded world (history plus the
 * evaluation year), the model fitted to it, and the derived planning inputs.
 * Sensitivity perturbations act on copies of this object.
 */
struct Scenario {
    NetworkTopology topology;
    FlowCoefficients coefficients;

    int history_start = 0;
    int eval_start = 0; // first month of the evaluation window
    int months = 12;    // evaluation window length

    std::array<MonthlySeries, kLakeCount> level_history{};  // recorded, through eval end + 1
    std::array<MonthlySeries, kRiverCount> flow_history{};  // recorded (a..e, ottawa)
    MonthlySeries stl_history;

    Baselines baselines;              // from cleaned pre-eval history
    IndicatorSeries indicator_history; // extracted over [history_start, eval_start)
    IndicatorSeries truth_indicators;  // extracted over the evaluation window

    ControlPlan recorded_controls; // the dams as recorded ("actual year")
    ControlPlan passthrough;       // per-calendar-month historical means
    ControlPlan controls;          // the plan a run executes (defaults to recorded)

    LakeState initial; // at eval_start, from recorded data

    // Per-river, per-calendar-month additive flow shifts (ice clog lives here).
    std::array<std::array<double, 12>, kChainRiverCount> flow_offset{};

    MonthlySeries ottawa_eval() const {
        return flow_history[static_cast<size_t>(index(River::Ottawa))].slice(eval_start, months);
    }
    MonthlySeries stl_eval() const { return stl_history.slice(eval_start, months); }
};

namespace detail {

inline IndicatorSeries extract_indicators(const std::array<MonthlySeries, kLakeCount>& levels,
                                          const std::array<MonthlySeries, kRiverCount>& flows,
                                          const NetworkTopology& topo, int from, int n) {
    IndicatorSeries out;
    for (int k = 0; k < kLakeCount; ++k) {
        MonthlySeries level_win = levels[static_cast<size_t>(k)].slice(from, n + 1);
        MonthlySeries inflow =
            (k == 0) ? MonthlySeries{} : flows[static_cast<size_t>(k - 1)].slice(from, n);
        MonthlySeries outflow = flows[static_cast<size_t>(k)].slice(from, n);
        out.lake[static_cast<size_t>(k)] =
            extract_indicator(level_win, inflow, outflow,
                              topo.lakes[static_cast<size_t>(k)].area_m2, topo.month_seconds());
    }
    return out;
}

} // namespace detail

inline Scenario assemble_scenario(const Dataset& ds, const NetworkTopology& topology,
                                  const FlowCoefficients& coefficients, int eval_start,
                                  int months) {
    Scenario sc;
    sc.topology = topology;
    sc.coefficients = coefficients;
    sc.eval_start = eval_start;
    sc.months = months;

    if (ds.level[0].empty())
        throw PreconditionError("scenario: no level data");
    sc.history_start = ds.level[0].front().month;
    int need_end = eval_start + months + 1; // extraction needs one extra level month
    int full = need_end - sc.history_start;

    for (int k = 0; k < kLakeCount; ++k)
        sc.level_history[static_cast<size_t>(k)] =
            contiguous(ds.level[static_cast<size_t>(k)], sc.history_start, full,
                       "lake " + std::string(lake_id(static_cast<Lake>(k))) + " levels");
    // Flows through eval_start + months: the grading window ends one month
    // after the last transition.
    for (int r = 0; r < kChainRiverCount; ++r)
        sc.flow_history[static_cast<size_t>(r)] =
            contiguous(ds.flow[static_cast<size_t>(r)], sc.history_start, full - 1,
                       "river " + std::string(river_id(static_cast<River>(r))) + " flows");
    if (!ds.flow[static_cast<size_t>(index(River::Ottawa))].empty())
        sc.flow_history[static_cast<size_t>(index(River::Ottawa))] = contiguous(
            ds.flow[static_cast<size_t>(index(River::Ottawa))], sc.history_start, full - 1,
            "ottawa flows");
    if (!ds.stl.empty())
        sc.stl_history = contiguous(ds.stl, sc.history_start, full - 1, "stl flows");

    sc.baselines = build_baselines(ds, sc.history_start, eval_start);

    int hist_n = eval_start - sc.history_start;
    if (hist_n < 25)
        throw PreconditionError("scenario: need at least 25 months of history before the "
                                "evaluation window");
    sc.indicator_history = detail::extract_indicators(sc.level_history, sc.flow_history, topology,
                                                      sc.history_start, hist_n);
    sc.truth_indicators =
        detail::extract_indicators(sc.level_history, sc.flow_history, topology, eval_start, months);

    sc.recorded_controls.start_month = eval_start;
    sc.passthrough.start_month = eval_start;
    for (int t = 0; t < months; ++t) {
        int m = eval_start + t;
        sc.recorded_controls.a.push_back(
            sc.flow_history[static_cast<size_t>(index(River::StMarys))].at_month(m));
        sc.recorded_controls.e.push_back(
            sc.flow_history[static_cast<size_t>(index(River::StLawrence))].at_month(m));
        int cal = calendar_of(m);
        sc.passthrough.a.push_back(
            sc.baselines.for_river(River::StMarys).monthly_mean[static_cast<size_t>(cal)]);
        sc.passthrough.e.push_back(
            sc.baselines.for_river(River::StLawrence).monthly_mean[static_cast<size_t>(cal)]);
    }
    sc.controls = sc.recorded_controls;

    sc.initial.month = eval_start;
    for (int k = 0; k < kLakeCount; ++k)
        sc.initial.level_m[static_cast<size_t>(k)] =
            sc.level_history[static_cast<size_t>(k)].at_month(eval_start);
    for (int r = 0; r < kChainRiverCount; ++r)
        sc.initial.flow_m3s[static_cast<size_t>(r)] =
            sc.flow_history[static_cast<size_t>(r)].at_month(eval_start);
    sc.initial.validate();
    return sc;
}

// ----------------------------------------------------------------------------
// Running a scenario
// ----------------------------------------------------------------------------

namespace detail {

inline double offset_for(const Scenario& sc, River r, int month) {
    return sc.flow_offset[static_cast<size_t>(index(r))][static_cast<size_t>(calendar_of(month))];
}

inline void offset_uncontrolled(const Scenario& sc, LakeState& state) {
    for (River r : {River::StClair, River::Detroit, River::Niagara}) {
        double off = offset_for(sc, r, state.month);
        if (off != 0.0)
            state.flow_m3s[static_cast<size_t>(index(r))] =
                std::max(0.0, state.flow(r) + off);
    }
}

} // namespace detail

/**
 * Simulates the evaluation window under the given plan, the scenario's truth
 * indicators and any configured flow offsets. With zero offsets and an
 * in-bounds plan this is exactly hydronet::simulate.
 */
inline Trajectory run_scenario(const Scenario& sc, const ControlPlan& plan) {
    if (!plan.covers(sc.eval_start, sc.months))
        throw PreconditionError("run_scenario: plan does not cover the evaluation window");

    const EdgeSpec& ea = sc.topology.edge(River::StMarys);
    const EdgeSpec& ee = sc.topology.edge(River::StLawrence);

    LakeState state = sc.initial;
    detail::offset_uncontrolled(sc, state);

    Trajectory traj;
    traj.indicators = sc.truth_indicators;
    traj.plan.start_month = sc.eval_start;
    traj.states.push_back(state);
    for (int t = 0; t < sc.months; ++t) {
        MonthControls mc = plan.at_month(state.month);
        mc.a = std::clamp(mc.a + detail::offset_for(sc, River::StMarys, state.month), ea.min_flow,
                          ea.max_flow);
        mc.e = std::clamp(mc.e + detail::offset_for(sc, River::StLawrence, state.month),
                          ee.min_flow, ee.max_flow);
        traj.plan.a.push_back(mc.a);
        traj.plan.e.push_back(mc.e);
        state = step(state, mc, sc.truth_indicators.at_month(state.month), sc.topology,
                     sc.coefficients);
        detail::offset_uncontrolled(sc, state);
        traj.states.push_back(state);
    }
    return traj;
}

inline Trajectory run_scenario(const Scenario& sc) { return run_scenario(sc, sc.controls); }

// ============================================================================
// Synthetic world generator
// ============================================================================

/**
 * Fabricates a seeded, self-consistent chain-of-lakes world from the fitted
 * coefficient constants plus seasonal sinusoids, so the whole test suite runs
 * with no external data. The recorded history follows a simple operating
 * policy (St. Marys on its natural level relation, St. Lawrence with a gentle
 * level-feedback rule); the evaluation year can carry a wet-spring anomaly.
 */
struct SyntheticSpec {
    int start_month = parse_year_month("2009-01");
    int eval_start = parse_year_month("2017-01");
    int months = 12;        // evaluation window
    double anomaly = 1.0;   // wet-spring strength (0 = none)
    double noise = 1.0;     // noise strength (0 = deterministic seasonal world)
    double seasonal = 1.0;  // seasonal amplitude factor
    std::uint64_t seed = 20170101;
};

struct SyntheticWorld {
    Dataset dataset;
    NetworkTopology topology;
    FlowCoefficients coefficients;
    SyntheticSpec spec;
};

inline FlowCoefficients fitted_reference_coefficients() {
    FlowCoefficients c;
    c.pair[static_cast<size_t>(index(River::StMarys))] = {1.69, -3.0744, 1.0};
    c.pair[static_cast<size_t>(index(River::StClair))] = {1.97, -3.3980, 1.0};
    c.pair[static_cast<size_t>(index(River::Detroit))] = {1.51, -2.6076, 1.0};
    c.pair[static_cast<size_t>(index(River::Niagara))] = {2.09, -3.5799, 1.0};
    return c;
}

inline SyntheticWorld generate_synthetic_scenario(const SyntheticSpec& spec) {
    SyntheticWorld w;
    w.spec = spec;
    w.coefficients = fitted_reference_coefficients();

    NetworkTopology topo = NetworkTopology::defaults();
    // The real St. Clair area makes the monthly recursion violently
    // oscillatory (its flushing time is days, not months); the synthetic
    // world uses an effective area that keeps every lake's per-step level
    // multiplier inside the unit circle.
    topo.lakes[static_cast<size_t>(index(Lake::StClair))].area_m2 = 8.0e9;
    const double ms = topo.month_seconds();

    const std::array<double, kLakeCount> level0 = {183.40, 176.40, 175.00, 174.10, 74.80};
    std::array<double, 4> flow0{};
    for (int r = 0; r < 4; ++r)
        flow0[static_cast<size_t>(r)] =
            river_flow(level0[static_cast<size_t>(r)], w.coefficients.pair[static_cast<size_t>(r)]);
    const double e_mean = 7000.0;

    // Equilibrium balance per lake, so zero-noise worlds sit still.
    std::array<double, kLakeCount> balance{};
    balance[0] = flow0[0] * ms;
    balance[1] = (flow0[1] - flow0[0]) * ms;
    balance[2] = (flow0[2] - flow0[1]) * ms;
    balance[3] = (flow0[3] - flow0[2]) * ms;
    balance[4] = (e_mean - flow0[3]) * ms;

    // Seasonal swing and month-to-month noise of the natural indicator, m³.
    const std::array<double, kLakeCount> amp = {1.1e10, 1.6e10, 1.5e9, 4.0e9, 3.5e9};
    const std::array<double, kLakeCount> sigma = {1.6e9, 2.2e9, 2.5e8, 6.0e8, 5.5e8};
    const std::array<double, kLakeCount> phase = {3.0, 3.5, 3.0, 3.0, 3.5}; // peak near April

    // Wet-spring anomaly volumes for the evaluation year, m³ (March..May).
    const std::array<double, kLakeCount> wet = {5.0e9, 7.0e9, 5.0e8, 1.5e9, 3.0e9};

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const int end_month = spec.eval_start + spec.months + 2;
    const int n = end_month - spec.start_month;

    
    auto seasonal_delta = [&](int k, int month) {
        double s = std::sin(kTwoPi *
                            (static_cast<double>(calendar_of(month)) - phase[static_cast<size_t>(k)]) /
                            12.0);
        return balance[static_cast<size_t>(k)] +
               spec.seasonal * amp[static_cast<size_t>(k)] * s;
    };
    auto in_wet_spring = [&](int month) {
        int cal = calendar_of(month);
        return month >= spec.eval_start && month < spec.eval_start + spec.months &&
               (cal == 2 || cal == 3 || cal == 4);
    };

    // Nature first: the indicator path is independent of the dams.
    std::vector<std::array<double, kLakeCount>> delta(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        int m = spec.start_month + t;
        for (int k = 0; k < kLakeCount; ++k) {
            double d = seasonal_delta(k, m) +
                       spec.noise * sigma[static_cast<size_t>(k)] * gauss(rng);
            if (in_wet_spring(m))
                d += spec.anomaly * wet[static_cast<size_t>(k)];
            delta[static_cast<size_t>(t)][static_cast<size_t>(k)] = d;
        }
    }

    // Exogenous Montreal-side series.
    std::vector<double> ottawa(static_cast<size_t>(n)), stl_noise(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        int m = spec.start_month + t;
        double s = std::sin(kTwoPi * (static_cast<double>(calendar_of(m)) - 3.0) / 12.0);
        double v = 2000.0 + spec.seasonal * 700.0 * s + spec.noise * 120.0 * gauss(rng);
        if (in_wet_spring(m))
            v += spec.anomaly * 1500.0;
        ottawa[static_cast<size_t>(t)] = std::max(200.0, v);
        stl_noise[static_cast<size_t>(t)] = spec.noise * 80.0 * gauss(rng);
    }

    // Operating policy for the recorded history: a on its natural relation,
    // e seasonal with gentle level feedback around the Ontario target.
    const double montreal_nature = kSyntheticMontrealNature;
    const double montreal_residents = kSyntheticMontrealResidents;
    std::array<double, kLakeCount> level = level0;
    std::array<double, kChainRiverCount> flows{};
    for (int r = 0; r < 4; ++r)
        flows[static_cast<size_t>(r)] = flow0[static_cast<size_t>(r)];
    flows[static_cast<size_t>(index(River::StLawrence))] = e_mean;

    auto push = [&](Dataset& ds, int month) {
        for (int k = 0; k < kLakeCount; ++k)
            ds.level[static_cast<size_t>(k)].push_back({month, level[static_cast<size_t>(k)]});
    };

    for (int t = 0; t < n; ++t) {
        int m = spec.start_month + t;
        push(w.dataset, m);
        if (t == n - 1)
            break; // final month carries levels only

        double s_e = std::sin(kTwoPi * (static_cast<double>(calendar_of(m)) - 4.0) / 12.0);
        double e = e_mean + spec.seasonal * 400.0 * s_e +
                   2000.0 * (level[static_cast<size_t>(index(Lake::Ontario))] -
                             level0[static_cast<size_t>(index(Lake::Ontario))]);
        e = std::clamp(e, 3500.0, 10500.0);
        flows[static_cast<size_t>(index(River::StMarys))] = river_flow(
            level[static_cast<size_t>(index(Lake::Superior))],
            w.coefficients.pair[static_cast<size_t>(index(River::StMarys))]);
        flows[static_cast<size_t>(index(River::StLawrence))] = e;

        for (int r = 0; r < kChainRiverCount; ++r)
            w.dataset.flow[static_cast<size_t>(r)].push_back(
                {m, flows[static_cast<size_t>(r)]});
        w.dataset.flow[static_cast<size_t>(index(River::Ottawa))].push_back(
            {m, ottawa[static_cast<size_t>(t)]});
        w.dataset.stl.push_back({m, e + ottawa[static_cast<size_t>(t)] + montreal_nature +
                                        montreal_residents + stl_noise[static_cast<size_t>(t)]});

        // Advance the world one month (same balance the simulator uses).
        std::array<double, kLakeCount> next{};
        for (int k = 0; k < kLakeCount; ++k) {
            double inflow = (k == 0) ? 0.0 : flows[static_cast<size_t>(k - 1)];
            double outflow = flows[static_cast<size_t>(k)];
            next[static_cast<size_t>(k)] =
                level[static_cast<size_t>(k)] +
                ((inflow - outflow) * ms + delta[static_cast<size_t>(t)][static_cast<size_t>(k)]) /
                    topo.lakes[static_cast<size_t>(k)].area_m2;
        }
        level = next;
        for (River r : {River::StClair, River::Detroit, River::Niagara})
            flows[static_cast<size_t>(index(r))] =
                river_flow(level[static_cast<size_t>(index(source_lake(r)))],
                           w.coefficients.for_river(r));
    }

    // Dam bounds: half to one-and-a-half times the historical mean.
    for (River r : {River::StMarys, River::StLawrence}) {
        const auto& hist = w.dataset.flow[static_cast<size_t>(index(r))];
        double m = 0.0;
        int count = 0;
        for (const Sample& s : hist)
            if (s.month < spec.eval_start) {
                m += s.value;
                ++count;
            }
        m /= std::max(count, 1);
        topo.edge(r).min_flow = 0.5 * m;
        topo.edge(r).max_flow = 1.5 * m;
    }
    for (int k = 0; k < kLakeCount; ++k)
        topo.lakes[static_cast<size_t>(k)].initial_level_m = level0[static_cast<size_t>(k)];
    topo.validate();
    w.topology = topo;
    return w;
}

/**
 * Seeded (lagged level, noisy flow) pairs for exercising the coefficient
 * fit: flow(t) = slope*level(t-1) + intercept + N(0, noise_sigma).
 */
inline Dataset generate_fit_dataset(int start_month, int months, double noise_sigma,
                                    std::uint64_t seed) {
    Dataset ds;
    FlowCoefficients coef = fitted_reference_coefficients();
    const std::array<double, 4> base_level = {183.40, 176.40, 175.00, 174.10};

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int p = 0; p < 4; ++p) {
        double ar = 0.0;
        std::vector<double> levels;
        for (int t = 0; t <= months; ++t) {
            int m = start_month + t;
            ar = 0.6 * ar + 0.25 * gauss(rng);
            double lv = base_level[static_cast<size_t>(p)] +
                        0.6 * std::sin(kTwoPi * (static_cast<double>(calendar_of(m)) - 3.0) / 12.0) +
                        ar;
            levels.push_back(lv);
            ds.level[static_cast<size_t>(p)].push_back({m, lv});
        }
        for (int t = 1; t <= months; ++t) {
            int m = start_month + t;
            double f = coef.pair[static_cast<size_t>(p)].slope * 1e3 *
                           levels[static_cast<size_t>(t - 1)] +
                       coef.pair[static_cast<size_t>(p)].intercept * 1e5 +
                       noise_sigma * gauss(rng);
            ds.flow[static_cast<size_t>(p)].push_back({m, f});
        }
    }
    return ds;
}

inline Bounds control_bounds(const NetworkTopology& topo, int months) {
    Bounds b;
    const EdgeSpec& ea = topo.edge(River::StMarys);
    const EdgeSpec& ee = topo.edge(River::StLawrence);
    for (int t = 0; t < months; ++t) {
        b.lo.push_back(ea.min_flow);
        b.hi.push_back(ea.max_flow);
    }
    for (int t = 0; t < months; ++t) {
        b.lo.push_back(ee.min_flow);
        b.hi.push_back(ee.max_flow);
    }
    return b;
}

inline std::vector<double> flatten(const ControlPlan& plan) {
    std::vector<double> x = plan.a;
    x.insert(x.end(), plan.e.begin(), plan.e.end());
    return x;
}

inline ControlPlan unflatten(const std::vector<double>& x, int start_month) {
    ControlPlan p;
    p.start_month = start_month;
    size_t half = x.size() / 2;
    p.a.assign(x.begin(), x.begin() + static_cast<long>(half));
    p.e.assign(x.begin() + static_cast<long>(half), x.end());
    return p;
}

} // namespace lakeflow

#endif // LAKEFLOW_SCENARIO_HPP
