#ifndef LAKEFLOW_SENSITIVITY_HPP
#define LAKEFLOW_SENSITIVITY_HPP

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "lakeflow/grading.hpp"
#include "lakeflow/scenario.hpp"

namespace lakeflow {

// ============================================================================
// Perturbations
// ============================================================================

enum class PerturbationKind {
    DamFlow,       // shift one dam's releases by delta every month (m³/s)
    Precipitation, // scale every natural indicator by (1 +/- delta)
    IceClog,       // shift river flows by -delta in January, +2*delta in March (m³/s)
    SnowPack,      // raise Superior's March level by delta meters (melt pulse)
};

struct Perturbation {
    PerturbationKind kind = PerturbationKind::Precipitation;
    double delta = 0.0;
    River edge = River::StMarys; // DamFlow only

    void validate() const {
        if (delta < 0.0 || !std::isfinite(delta))
            throw PreconditionError("perturbation: delta must be nonnegative and finite");
        if (kind == PerturbationKind::DamFlow && edge != River::StMarys &&
            edge != River::StLawrence)
            throw PreconditionError("perturbation: dam_flow edge must be a or e");
    }
};

enum class Sign { Plus, Minus };

namespace detail {

inline bool window_has_calendar(const Scenario& sc, int calendar) {
    for (int m = sc.eval_start; m < sc.eval_start + sc.months; ++m)
        if (calendar_of(m) == calendar)
            return true;
    return false;
}

} // namespace detail

/**
 * Returns a copy of the scenario with one structured change applied. The
 * minus variant mirrors the plus one (for ice clog that swaps the January
 * decrement and March surge).
 */
inline Scenario apply_perturbation(const Scenario& sc, const Perturbation& p, Sign sign) {
    p.validate();
    Scenario out = sc;
    double s = (sign == Sign::Plus) ? 1.0 : -1.0;

    switch (p.kind) {
    case PerturbationKind::Precipitation: {
        double factor = 1.0 + s * p.delta;
        for (int k = 0; k < kLakeCount; ++k)
            for (int i = 0; i < out.truth_indicators.lake[static_cast<size_t>(k)].size(); ++i)
                out.truth_indicators.lake[static_cast<size_t>(k)][i] *= factor;
        break;
    }
    case PerturbationKind::IceClog: {
        if (!detail::window_has_calendar(sc, 0) || !detail::window_has_calendar(sc, 2))
            throw PreconditionError("ice clog: evaluation window has no January or no March");
        for (int r = 0; r < kChainRiverCount; ++r) {
            out.flow_offset[static_cast<size_t>(r)][0] += -s * p.delta;      // January
            out.flow_offset[static_cast<size_t>(r)][2] += 2.0 * s * p.delta; // March
        }
        break;
    }
    case PerturbationKind::SnowPack: {
        if (!detail::window_has_calendar(sc, 2))
            throw PreconditionError("snow pack: evaluation window has no March");
        // Injected as an indicator pulse (volume = delta * area) rather than a
        // hard level overwrite, preserving volume conservation.
        double volume =
            s * p.delta * sc.topology.lakes[static_cast<size_t>(index(Lake::Superior))].area_m2;
        auto& superior = out.truth_indicators.lake[static_cast<size_t>(index(Lake::Superior))];
        for (int i = 0; i < superior.size(); ++i)
            if (superior.calendar_at(i) == 2)
                superior[i] += volume;
        break;
    }
    case PerturbationKind::DamFlow: {
        const EdgeSpec& edge = sc.topology.edge(p.edge);
        auto& series = (p.edge == River::StMarys) ? out.controls.a : out.controls.e;
        for (double& v : series)
            v = std::clamp(v + s * p.delta, edge.min_flow, edge.max_flow);
        break;
    }
    }
    return out;
}

// ============================================================================
// Sensitivity indices
// ============================================================================

enum class SensitivityEstimator {
    Rmse,   // root mean square of the grade differences
    StdDev, // population standard deviation of the differences
};

// Per-lake level and fluctuation grades, plus the Ontario terms when graded:
// the component vector whose perturbed differences the index aggregates.
inline std::vector<double> grade_vector(const Scenario& sc, const StakeholderConstraints& R) {
    Trajectory traj = run_scenario(sc);
    GradeReport rep = grade_network(traj, R, sc.baselines,
                                    R.ontario ? sc.flow_history[static_cast<size_t>(index(
                                                    River::Ottawa))]
                                              : MonthlySeries{},
                                    R.ontario ? sc.stl_history : MonthlySeries{});
    std::vector<double> g;
    for (const LakeGrade& lg : rep.lakes) {
        g.push_back(lg.g_level);
        g.push_back(lg.g_fluctuation);
    }
    if (rep.has_ontario) {
        g.push_back(rep.g_flood);
        g.push_back(rep.g_river_flow);
        g.push_back(rep.g_river_fluctuation);
        g.push_back(rep.g_montreal);
    }
    return g;
}

namespace detail {

inline double aggregate(const std::vector<double>& diffs, SensitivityEstimator estimator) {
    if (estimator == SensitivityEstimator::StdDev)
        return population_stddev(diffs);
    double ss = 0.0;
    for (double d : diffs)
        ss += d * d;
    return std::sqrt(ss / static_cast<double>(diffs.size()));
}

} // namespace detail

/**
 * Central sensitivity index: simulate the +delta and -delta scenarios and
 * aggregate the per-component grade differences, divided by 2*delta so a
 * linear pre-clamp response of slope c reports |c|.
 */
inline double sensitivity_index(const Scenario& sc, const StakeholderConstraints& R,
                                const Perturbation& p,
                                SensitivityEstimator estimator = SensitivityEstimator::Rmse,
                                std::vector<double>* differences = nullptr) {
    if (!(p.delta > 0.0))
        throw PreconditionError("sensitivity_index: delta must be positive");
    std::vector<double> g_plus = grade_vector(apply_perturbation(sc, p, Sign::Plus), R);
    std::vector<double> g_minus = grade_vector(apply_perturbation(sc, p, Sign::Minus), R);
    std::vector<double> diffs(g_plus.size());
    for (size_t i = 0; i < diffs.size(); ++i)
        diffs[i] = g_plus[i] - g_minus[i];
    if (differences)
        *differences = diffs;
    return detail::aggregate(diffs, estimator) / (2.0 * p.delta);
}

/**
 * One-sided dam variant: the baseline scenario against the -delta one,
 * divided by delta.
 */
inline double dam_sensitivity(const Scenario& sc, const StakeholderConstraints& R, River edge,
                              double delta,
                              SensitivityEstimator estimator = SensitivityEstimator::Rmse) {
    if (!(delta > 0.0))
        throw PreconditionError("dam_sensitivity: delta must be positive");
    Perturbation p{PerturbationKind::DamFlow, delta, edge};
    std::vector<double> g_base = grade_vector(sc, R);
    std::vector<double> g_minus = grade_vector(apply_perturbation(sc, p, Sign::Minus), R);
    std::vector<double> diffs(g_base.size());
    for (size_t i = 0; i < diffs.size(); ++i)
        diffs[i] = g_base[i] - g_minus[i];
    return detail::aggregate(diffs, estimator) / delta;
}

// ============================================================================
// Report assembly
// ============================================================================

struct DamSensitivitySpec {
    River edge = River::StMarys;
    double delta = 0.0;
};

struct SensitivityConfig {
    std::vector<Perturbation> perturbations;
    std::vector<DamSensitivitySpec> dams;
    SensitivityEstimator estimator = SensitivityEstimator::Rmse;
};

struct SensitivityReport {
    std::optional<double> s_rain, s_ice, s_snow;
    std::optional<double> delta_rain, delta_ice, delta_snow;
    double total = 0.0; // sum of the environmental indices present
    std::map<std::string, double> dam;       // edge id -> index
    std::map<std::string, double> dam_delta; // edge id -> delta used
};

inline SensitivityReport run_sensitivity(const Scenario& sc, const StakeholderConstraints& R,
                                         const SensitivityConfig& config) {
    SensitivityReport rep;
    for (const Perturbation& p : config.perturbations) {
        double s = sensitivity_index(sc, R, p, config.estimator);
        switch (p.kind) {
        case PerturbationKind::Precipitation:
            rep.s_rain = s;
            rep.delta_rain = p.delta;
            break;
        case PerturbationKind::IceClog:
            rep.s_ice = s;
            rep.delta_ice = p.delta;
            break;
        case PerturbationKind::SnowPack:
            rep.s_snow = s;
            rep.delta_snow = p.delta;
            break;
        case PerturbationKind::DamFlow:
            rep.dam[std::string(river_id(p.edge))] = s;
            rep.dam_delta[std::string(river_id(p.edge))] = p.delta;
            break;
        }
    }
    for (const DamSensitivitySpec& d : config.dams) {
        rep.dam[std::string(river_id(d.edge))] = dam_sensitivity(sc, R, d.edge, d.delta,
                                                                 config.estimator);
        rep.dam_delta[std::string(river_id(d.edge))] = d.delta;
    }
    rep.total = rep.s_rain.value_or(0.0) + rep.s_ice.value_or(0.0) + rep.s_snow.value_or(0.0);
    return rep;
}

} // namespace lakeflow

#endif // LAKEFLOW_SENSITIVITY_HPP
