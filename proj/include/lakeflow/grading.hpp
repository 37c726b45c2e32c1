#ifndef LAKEFLOW_GRADING_HPP
#define LAKEFLOW_GRADING_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "lakeflow/hydronet.hpp"
#include "lakeflow/series.hpp"

namespace lakeflow {

// ============================================================================
// Stakeholder demands
// ============================================================================

enum class Demand {
    High,   // shipping: the more the better
    Medium, // no preference: stay at the baseline
    Low,    // shoreline: the less the better
};

struct LakeDemand {
    Demand level = Demand::Medium;
    Demand fluctuation = Demand::Medium;
};

// Flood warning (mean + 1 sigma of cleaned history) and emergency
// (mean + 2 sigma) levels for Lake Ontario; f_sigma is their gap.
struct FloodParams {
    double h_warn = 0.0;    // m
    double h_highest = 0.0; // m

    double f_sigma() const { return h_highest - h_warn; }
    void validate() const {
        if (!(h_warn < h_highest))
            throw PreconditionError("flood params need h_warn < h_highest");
    }
};

struct MontrealParams {
    double delta_nature = 0.0;    // m³/s
    double delta_residents = 0.0; // m³/s
    double scale = 500.0;         // m³/s of residual that costs one grade point squared
};

// Lake Ontario extension: St. Lawrence flow demands, flood grading and the
// Montreal retention term.
struct OntarioExtension {
    Demand river_flow = Demand::Medium;
    Demand river_fluctuation = Demand::Medium;
    std::optional<FloodParams> flood; // absent: derive from cleaned history
    MontrealParams montreal;
};

// One level demand and one fluctuation demand per lake; at most one
// constraint of each kind per lake surface.
struct StakeholderConstraints {
    std::array<LakeDemand, kLakeCount> lakes{};
    std::optional<OntarioExtension> ontario;

    const LakeDemand& lake(Lake l) const { return lakes[static_cast<size_t>(index(l))]; }
};

// ============================================================================
// Baselines (the "original" statistics grades compare against)
// ============================================================================

struct LakeBaselines {
    double level_mean = 0.0;               // mean of the benchmark year, m
    double level_sigma = 0.0;              // sigma-hat: its 12-month population stddev, m
    std::array<double, 12> monthly_mean{}; // per-calendar-month benchmark, m
};

struct RiverBaselines {
    double flow_mean = 0.0;                // F*, m³/s
    double flow_sigma = 0.0;               // sigma-hat, m³/s
    std::array<double, 12> monthly_mean{}; // m³/s
};

struct Baselines {
    std::array<LakeBaselines, kLakeCount> lake{};
    std::array<RiverBaselines, kRiverCount> river{}; // a..e and Ottawa
    std::array<double, 12> stl_monthly_mean{};       // St. Lawrence at Montreal, m³/s
    FloodParams flood{};                             // derived from cleaned Ontario levels

    const LakeBaselines& for_lake(Lake l) const { return lake[static_cast<size_t>(index(l))]; }
    const RiverBaselines& for_river(River r) const { return river[static_cast<size_t>(index(r))]; }
};

// ============================================================================
// Component grades
// ============================================================================

namespace detail {

inline double clamp04(double g) { return std::clamp(g, 0.0, 4.0); }

inline double three_way(Demand d, double deviation, double gain) {
    switch (d) {
    case Demand::High:
        return 2.0 + gain * deviation;
    case Demand::Low:
        return 2.0 - gain * deviation;
    case Demand::Medium:
    default:
        return 4.0 - 2.0 * gain * std::abs(deviation);
    }
}

inline void need_12(const MonthlySeries& s, const char* op) {
    if (s.size() != 12)
        throw PreconditionError(std::string(op) + ": exactly 12 monthly samples required");
}

} // namespace detail

/// Water-level grade: 12-month mean against the baseline mean, clamped to [0,4].
inline double grade_level(const MonthlySeries& levels, double baseline_mean, Demand demand) {
    detail::need_12(levels, "grade_level");
    double h = mean(levels.values());
    return detail::clamp04(detail::three_way(demand, h - baseline_mean, 9.0));
}

/// Fluctuation grade: 12-month population stddev against sigma-hat, clamped.
inline double grade_fluctuation(const MonthlySeries& levels, double baseline_sigma,
                                Demand demand) {
    detail::need_12(levels, "grade_fluctuation");
    if (baseline_sigma < 0.0)
        throw PreconditionError("grade_fluctuation: negative baseline sigma");
    double sigma = population_stddev(levels.values());
    return detail::clamp04(detail::three_way(demand, sigma - baseline_sigma, 12.0));
}

/**
 * Flood grade for Lake Ontario, in [-4, 0]. Flooding is an extreme-value
 * phenomenon, so the 12-month maximum is graded: zero below the warning
 * level, -4*sqrt(excess/f_sigma) up to the emergency level, -4 above.
 */
inline double grade_flood(const MonthlySeries& levels, const FloodParams& flood) {
    detail::need_12(levels, "grade_flood");
    flood.validate();
    double h = *std::max_element(levels.values().begin(), levels.values().end());
    if (h < flood.h_warn)
        return 0.0;
    if (h > flood.h_highest)
        return -4.0;
    return -4.0 * std::sqrt((h - flood.h_warn) / flood.f_sigma());
}

/// St. Lawrence flow grade; F and F* compared in 10³ m³/s.
inline double grade_river_flow(const MonthlySeries& flows, double baseline_mean, Demand demand) {
    detail::need_12(flows, "grade_river_flow");
    double f = mean(flows.values()) / 1e3;
    return detail::clamp04(detail::three_way(demand, f - baseline_mean / 1e3, 200.0));
}

/// St. Lawrence fluctuation grade; sigma in m³/s, gain 1/80 per m³/s.
inline double grade_river_fluctuation(const MonthlySeries& flows, double baseline_sigma,
                                      Demand demand) {
    detail::need_12(flows, "grade_river_fluctuation");
    if (baseline_sigma < 0.0)
        throw PreconditionError("grade_river_fluctuation: negative baseline sigma");
    double sigma = population_stddev(flows.values());
    return detail::clamp04(detail::three_way(demand, sigma - baseline_sigma, 1.0 / 80.0));
}

/**
 * Montreal retention grade, in [-4, 0]: the squared residual in units of
 * `scale`. Raw squared m³/s residuals would dwarf every other term of a
 * summed fitness, hence the configurable scale.
 */
inline double grade_montreal(double residual, double scale) {
    if (!(scale > 0.0))
        throw PreconditionError("grade_montreal: scale must be positive");
    double g = -(residual / scale) * (residual / scale);
    return std::max(g, -4.0);
}

// ============================================================================
// Network grade
// ============================================================================

struct LakeGrade {
    double g_level = 0.0;
    double g_fluctuation = 0.0;
    double mean_level = 0.0;     // graded window mean, m
    double sigma = 0.0;          // its population stddev, m
    double baseline_mean = 0.0;  // what the window was compared against, m
    double baseline_sigma = 0.0; // m

    double sum() const { return g_level + g_fluctuation; }
};

struct GradeReport {
    std::array<LakeGrade, kLakeCount> lakes{};
    double base_total = 0.0; // sum of clamped per-lake components, in [0, 40]

    bool has_ontario = false;
    double g_flood = 0.0;              // in [-4, 0]
    double g_river_flow = 0.0;         // in [0, 4]
    double g_river_fluctuation = 0.0;  // in [0, 4]
    double g_montreal = 0.0;           // <= 0
    double river_mean_flow = 0.0;      // m³/s
    double river_sigma = 0.0;          // m³/s
    double river_baseline_mean = 0.0;  // m³/s
    double river_baseline_sigma = 0.0; // m³/s
    double montreal_residual = 0.0;    // mean monthly retention residual, m³/s

    double total = 0.0; // base_total plus the Ontario terms when present

    const LakeGrade& lake(Lake l) const { return lakes[static_cast<size_t>(index(l))]; }
};

// One 12-month window of everything the grades read: level snapshots at the
// window's months, and the flows of the twelve transitions that produced them
// (one month behind the snapshots). The Ontario series may stay empty when no
// extension is configured.
struct GradeWindow {
    std::array<MonthlySeries, kLakeCount> levels{};
    MonthlySeries e_flows;      // St. Lawrence dam releases
    MonthlySeries ottawa_flows; // exogenous
    MonthlySeries stl_flows;    // St. Lawrence at Montreal, exogenous
};

inline GradeReport grade_window(const GradeWindow& w, const StakeholderConstraints& R,
                                const Baselines& baselines) {
    GradeReport rep;
    for (int k = 0; k < kLakeCount; ++k) {
        Lake l = static_cast<Lake>(k);
        const auto& series = w.levels[static_cast<size_t>(k)];
        LakeGrade& g = rep.lakes[static_cast<size_t>(k)];
        g.g_level = grade_level(series, baselines.for_lake(l).level_mean, R.lake(l).level);
        g.g_fluctuation =
            grade_fluctuation(series, baselines.for_lake(l).level_sigma, R.lake(l).fluctuation);
        g.mean_level = mean(series.values());
        g.sigma = population_stddev(series.values());
        g.baseline_mean = baselines.for_lake(l).level_mean;
        g.baseline_sigma = baselines.for_lake(l).level_sigma;
        rep.base_total += g.sum();
    }
    rep.total = rep.base_total;

    if (R.ontario) {
        const OntarioExtension& ext = *R.ontario;
        rep.has_ontario = true;
        FloodParams flood = ext.flood ? *ext.flood : baselines.flood;
        rep.g_flood = grade_flood(w.levels[static_cast<size_t>(index(Lake::Ontario))], flood);

        const RiverBaselines& rb = baselines.for_river(River::StLawrence);
        rep.g_river_flow = grade_river_flow(w.e_flows, rb.flow_mean, ext.river_flow);
        rep.g_river_fluctuation =
            grade_river_fluctuation(w.e_flows, rb.flow_sigma, ext.river_fluctuation);
        rep.river_mean_flow = mean(w.e_flows.values());
        rep.river_sigma = population_stddev(w.e_flows.values());
        rep.river_baseline_mean = rb.flow_mean;
        rep.river_baseline_sigma = rb.flow_sigma;

        detail::need_12(w.ottawa_flows, "grade_window (ottawa)");
        detail::need_12(w.stl_flows, "grade_window (stl)");
        double residual = 0.0;
        for (int i = 0; i < 12; ++i)
            residual += montreal_balance(w.stl_flows[i], w.ottawa_flows[i], w.e_flows[i],
                                         ext.montreal.delta_nature, ext.montreal.delta_residents);
        rep.montreal_residual = residual / 12.0;
        rep.g_montreal = grade_montreal(rep.montreal_residual, ext.montreal.scale);

        rep.total += rep.g_flood + rep.g_river_flow + rep.g_river_fluctuation + rep.g_montreal;
    }
    return rep;
}

/**
 * Grades the outcome of a full-year run: the twelve snapshots produced by the
 * plan (states 1..12 of the trajectory) against the baselines.
 */
inline GradeReport grade_network(const Trajectory& traj, const StakeholderConstraints& R,
                                 const Baselines& baselines, const MonthlySeries& ottawa = {},
                                 const MonthlySeries& stl = {}) {
    if (traj.months() < 12)
        throw PreconditionError("grade_network: trajectory must span 12 months");
    int start = traj.states.front().month;
    GradeWindow w;
    for (int k = 0; k < kLakeCount; ++k)
        w.levels[static_cast<size_t>(k)] = traj.levels(static_cast<Lake>(k), start + 1, 12);
    w.e_flows = MonthlySeries(start, {});
    for (int m = start; m < start + 12; ++m)
        w.e_flows.push_back(traj.plan.at_month(m).e);
    if (R.ontario) {
        w.ottawa_flows = ottawa.slice(start, 12);
        w.stl_flows = stl.slice(start, 12);
    }
    return grade_window(w, R, baselines);
}

// ----------------------------------------------------------------------------
// Per-month grades (the yearly score tables report their mean/min/median)
// ----------------------------------------------------------------------------

/// Single-month level grade against that calendar month's benchmark.
inline double monthly_level_grade(double level, double monthly_baseline, Demand demand) {
    return detail::clamp04(detail::three_way(demand, level - monthly_baseline, 9.0));
}

/**
 * Monthly grade series for one lake: each month's level against its calendar
 * benchmark, and the trailing 12-month window's stddev against sigma-hat.
 */
struct MonthlyGrades {
    MonthlySeries g_level;
    MonthlySeries g_fluctuation;
};

inline MonthlyGrades monthly_grades(const MonthlySeries& levels_with_history, int from, int n,
                                    const LakeBaselines& base, const LakeDemand& demand) {
    MonthlyGrades out{MonthlySeries(from, {}), MonthlySeries(from, {})};
    for (int m = from; m < from + n; ++m) {
        double level = levels_with_history.at_month(m);
        out.g_level.push_back(
            monthly_level_grade(level, base.monthly_mean[static_cast<size_t>(calendar_of(m))],
                                demand.level));
        MonthlySeries window = levels_with_history.slice(m - 11, 12);
        double sigma = population_stddev(window.values());
        out.g_fluctuation.push_back(
            detail::clamp04(detail::three_way(demand.fluctuation, sigma - base.level_sigma, 12.0)));
    }
    return out;
}

} // namespace lakeflow

#endif // LAKEFLOW_GRADING_HPP
