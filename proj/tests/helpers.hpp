#ifndef LAKEFLOW_TEST_HELPERS_HPP
#define LAKEFLOW_TEST_HELPERS_HPP

#include <array>
#include <random>

#include "lakeflow/hydronet.hpp"
#include "lakeflow/scenario.hpp"

namespace lakeflow::test {

inline constexpr double kMonthSeconds = 30.44 * 86400.0; // 2,630,016 s

// Stable test network: real areas except St. Clair, whose effective area is
// enlarged so the monthly recursion stays contractive.
inline NetworkTopology stable_topology() {
    NetworkTopology t = NetworkTopology::defaults();
    t.lakes[static_cast<size_t>(index(Lake::StClair))].area_m2 = 8.0e9;
    t.edge(River::StMarys).min_flow = 1000.0;
    t.edge(River::StMarys).max_flow = 4000.0;
    t.edge(River::StLawrence).min_flow = 3500.0;
    t.edge(River::StLawrence).max_flow = 10500.0;
    return t;
}

inline FlowCoefficients table_coefficients() { return fitted_reference_coefficients(); }

inline constexpr std::array<double, kLakeCount> kEquilibriumLevels = {183.40, 176.40, 175.00,
                                                                      174.10, 74.80};
inline constexpr double kEquilibriumE = 7000.0;

// Flows implied by the equilibrium levels.
inline std::array<double, kChainRiverCount> equilibrium_flows() {
    FlowCoefficients c = table_coefficients();
    std::array<double, kChainRiverCount> f{};
    for (int r = 0; r < 4; ++r)
        f[static_cast<size_t>(r)] =
            river_flow(kEquilibriumLevels[static_cast<size_t>(r)], c.pair[static_cast<size_t>(r)]);
    f[static_cast<size_t>(index(River::StLawrence))] = kEquilibriumE;
    return f;
}

// Indicators that exactly balance the equilibrium fluxes (level-holding).
inline std::array<double, kLakeCount> equilibrium_indicators(const NetworkTopology& topo) {
    auto f = equilibrium_flows();
    std::array<double, kLakeCount> d{};
    const double ms = topo.month_seconds();
    for (int k = 0; k < kLakeCount; ++k) {
        double inflow = (k == 0) ? 0.0 : f[static_cast<size_t>(k - 1)];
        d[static_cast<size_t>(k)] = (f[static_cast<size_t>(k)] - inflow) * ms;
    }
    return d;
}

inline LakeState equilibrium_state(int month = 0) {
    LakeState s;
    s.month = month;
    s.level_m = kEquilibriumLevels;
    s.flow_m3s = equilibrium_flows();
    return s;
}

inline IndicatorSeries constant_indicators(int start, int n,
                                           const std::array<double, kLakeCount>& d) {
    IndicatorSeries out;
    for (int k = 0; k < kLakeCount; ++k)
        out.lake[static_cast<size_t>(k)] =
            MonthlySeries::constant(start, n, d[static_cast<size_t>(k)]);
    return out;
}

inline ControlPlan constant_plan(int start, int n, double a, double e) {
    ControlPlan p;
    p.start_month = start;
    p.a.assign(static_cast<size_t>(n), a);
    p.e.assign(static_cast<size_t>(n), e);
    return p;
}

// Deterministic zero-noise equilibrium world (constant levels and flows).
inline SyntheticSpec equilibrium_spec() {
    SyntheticSpec spec;
    spec.noise = 0.0;
    spec.seasonal = 0.0;
    spec.anomaly = 0.0;
    return spec;
}

} // namespace lakeflow::test

#endif // LAKEFLOW_TEST_HELPERS_HPP
