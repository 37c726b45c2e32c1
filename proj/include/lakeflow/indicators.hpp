#ifndef LAKEFLOW_INDICATORS_HPP
#define LAKEFLOW_INDICATORS_HPP

#include <array>
#include <limits>
#include <vector>

#include "lakeflow/hydronet.hpp"
#include "lakeflow/series.hpp"

namespace lakeflow {

// ============================================================================
// Outlier removal and baselines
// ============================================================================

enum class OutlierRule {
    ThreeSigma, // beyond mean +/- 3 sigma of the calendar-month group
    Iqr,        // beyond [Q1 - 1.5 IQR, Q3 + 1.5 IQR] of the group
};

struct CleaningReport {
    OutlierRule rule = OutlierRule::ThreeSigma;
    std::vector<int> removed_months;
    std::array<double, 12> retained_monthly_mean{};
};

struct CleaningResult {
    SampleList retained;
    CleaningReport report;
};

/**
 * Single-pass removal of per-calendar-month outliers. Statistics are computed
 * once on the input; there is no re-iteration after removal, so reports stay
 * stable and reproducible.
 */
inline CleaningResult remove_outliers(const SampleList& samples, OutlierRule rule) {
    if (samples.size() < 24)
        throw PreconditionError("remove_outliers: need at least 24 months for per-calendar-month "
                                "statistics");
    std::array<std::vector<double>, 12> groups;
    for (const Sample& s : samples)
        groups[static_cast<size_t>(calendar_of(s.month))].push_back(s.value);

    // Per-calendar-month keep intervals.
    std::array<double, 12> lo{}, hi{};
    for (int c = 0; c < 12; ++c) {
        const auto& g = groups[static_cast<size_t>(c)];
        if (g.empty()) {
            lo[static_cast<size_t>(c)] = -std::numeric_limits<double>::infinity();
            hi[static_cast<size_t>(c)] = std::numeric_limits<double>::infinity();
            continue;
        }
        if (rule == OutlierRule::ThreeSigma) {
            double m = mean(g);
            double s = sample_stddev(g);
            lo[static_cast<size_t>(c)] = m - 3.0 * s;
            hi[static_cast<size_t>(c)] = m + 3.0 * s;
        } else {
            double q1 = quantile(g, 0.25);
            double q3 = quantile(g, 0.75);
            double iqr = q3 - q1;
            lo[static_cast<size_t>(c)] = q1 - 1.5 * iqr;
            hi[static_cast<size_t>(c)] = q3 + 1.5 * iqr;
        }
    }

    CleaningResult out;
    out.report.rule = rule;
    std::array<double, 12> sum{};
    std::array<int, 12> count{};
    for (const Sample& s : samples) {
        int c = calendar_of(s.month);
        if (s.value < lo[static_cast<size_t>(c)] || s.value > hi[static_cast<size_t>(c)]) {
            out.report.removed_months.push_back(s.month);
        } else {
            out.retained.push_back(s);
            sum[static_cast<size_t>(c)] += s.value;
            count[static_cast<size_t>(c)] += 1;
        }
    }
    for (int c = 0; c < 12; ++c)
        out.report.retained_monthly_mean[static_cast<size_t>(c)] =
            count[static_cast<size_t>(c)] > 0
                ? sum[static_cast<size_t>(c)] / count[static_cast<size_t>(c)]
                : 0.0;
    return out;
}

inline CleaningResult remove_outliers(const MonthlySeries& series, OutlierRule rule) {
    return remove_outliers(to_samples(series), rule);
}

/// Multi-year per-calendar-month arithmetic means of a cleaned series.
inline std::array<double, 12> monthly_baseline(const SampleList& samples) {
    std::array<double, 12> sum{};
    std::array<int, 12> count{};
    for (const Sample& s : samples) {
        int c = calendar_of(s.month);
        sum[static_cast<size_t>(c)] += s.value;
        count[static_cast<size_t>(c)] += 1;
    }
    std::array<double, 12> out{};
    for (int c = 0; c < 12; ++c) {
        if (count[static_cast<size_t>(c)] == 0)
            throw DataError("monthly_baseline: no samples for calendar month " +
                            std::to_string(c + 1));
        out[static_cast<size_t>(c)] = sum[static_cast<size_t>(c)] / count[static_cast<size_t>(c)];
    }
    return out;
}

inline std::array<double, 12> monthly_baseline(const MonthlySeries& series) {
    return monthly_baseline(to_samples(series));
}

// ============================================================================
// Coefficient fitting
// ============================================================================

/**
 * Ordinary least squares of river flow against the previous month's lake
 * level (flow(t) ~ level(t-1), the pairing the dynamics use). Slope comes
 * back in 10³ m²/s, intercept in 10⁵ m³/s.
 */
inline PairCoefficients fit_coefficients(const MonthlySeries& levels,
                                         const MonthlySeries& flows) {
    std::vector<double> x, y;
    for (int i = 0; i < flows.size(); ++i) {
        int m = flows.month_at(i);
        if (levels.covers(m - 1)) {
            x.push_back(levels.at_month(m - 1));
            y.push_back(flows[i]);
        }
    }
    if (x.size() < 12)
        throw PreconditionError("fit_coefficients: need at least 12 lagged (level, flow) pairs");
    LineFit f;
    try {
        f = linear_fit(x, y);
    } catch (const DataError&) {
        throw DataError("fit_coefficients: degenerate fit, level series has zero variance");
    }
    PairCoefficients c;
    c.slope = f.slope / 1e3;
    c.intercept = f.intercept / 1e5;
    c.r_squared = f.r_squared;
    return c;
}

// ============================================================================
// Natural indicators
// ============================================================================

/**
 * Residual of the water balance: delta(t) = area * (H(t+1) - H(t)) -
 * (inflow(t) - outflow(t)) * month_seconds, in m³. The result covers one
 * month less than the level series.
 */
inline MonthlySeries extract_indicator(const MonthlySeries& levels, const MonthlySeries& inflow,
                                       const MonthlySeries& outflow, double area_m2,
                                       double month_secs = month_seconds(kDefaultMonthDays)) {
    if (levels.size() < 2)
        throw PreconditionError("extract_indicator: need at least two months of levels");
    const int n = levels.size() - 1;
    auto check = [&](const MonthlySeries& s, const char* what) {
        if (!s.empty() && !s.covers(levels.start(), n))
            throw PreconditionError(std::string("extract_indicator: ") + what +
                                    " series misaligned with levels");
    };
    check(inflow, "inflow");
    check(outflow, "outflow");

    MonthlySeries out(levels.start(), {});
    for (int t = 0; t < n; ++t) {
        int m = levels.month_at(t);
        double fin = inflow.empty() ? 0.0 : inflow.at_month(m);
        double fout = outflow.empty() ? 0.0 : outflow.at_month(m);
        out.push_back(area_m2 * (levels[t + 1] - levels[t]) - (fin - fout) * month_secs);
    }
    return out;
}

/**
 * Extrapolates each calendar month's indicator along its own across-years
 * trend line (the indicator is strongly seasonal; a single regression over
 * all months would smear the seasons). Calendar months with fewer than three
 * years of history fall back to their mean.
 */
inline MonthlySeries forecast_indicator(const MonthlySeries& history, int horizon) {
    if (history.size() < 24)
        throw PreconditionError("forecast_indicator: need at least 24 months of history");
    if (horizon < 0)
        throw PreconditionError("forecast_indicator: negative horizon");

    std::array<std::vector<double>, 12> groups;
    for (int i = 0; i < history.size(); ++i)
        groups[static_cast<size_t>(history.calendar_at(i))].push_back(history[i]);

    MonthlySeries out(history.end(), {});
    std::array<int, 12> future_count{};
    for (int j = 0; j < horizon; ++j) {
        int month = history.end() + j;
        int c = calendar_of(month);
        const auto& g = groups[static_cast<size_t>(c)];
        int occurrence = static_cast<int>(g.size()) + future_count[static_cast<size_t>(c)];
        double value;
        if (g.size() < 3) {
            value = g.empty() ? 0.0 : mean(g);
        } else {
            std::vector<double> years(g.size());
            for (size_t i = 0; i < g.size(); ++i)
                years[i] = static_cast<double>(i);
            LineFit f = linear_fit(years, g);
            value = f.intercept + f.slope * static_cast<double>(occurrence);
        }
        out.push_back(value);
        future_count[static_cast<size_t>(c)] += 1;
    }
    return out;
}

/// Per-lake forecast; lakes are independent, so processing order is irrelevant.
inline IndicatorSeries forecast_indicator(const IndicatorSeries& history, int horizon) {
    history.check_aligned();
    IndicatorSeries out;
    for (int k = 0; k < kLakeCount; ++k)
        out.lake[static_cast<size_t>(k)] =
            forecast_indicator(history.lake[static_cast<size_t>(k)], horizon);
    return out;
}

} // namespace lakeflow

#endif // LAKEFLOW_INDICATORS_HPP
