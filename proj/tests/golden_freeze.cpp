// Regenerates the frozen golden files under tests/golden/ from the bundled
// scenario. Run manually after an intentional behavior change, then review
// the diff:
//
//   cmake --build build --target golden_freeze
//   ./build/tests/golden_freeze
//
// Goldens pin this platform's floating-point stream (gcc/libstdc++); they are
// regression anchors, not analytically derived values.

#include <fstream>
#include <iostream>

#include "lakeflow/cli.hpp"
#include "lakeflow/config.hpp"
#include "lakeflow/sensitivity.hpp"
#include "lakeflow/wlpcm.hpp"

using namespace lakeflow;

int main() {
    std::string dir = std::string(LAKEFLOW_SOURCE_DIR) + "/data/scenario2017";
    std::string out = std::string(LAKEFLOW_SOURCE_DIR) + "/tests/golden";

    Dataset ds = load_dataset(dir + "/data.csv");
    NetworkTopology topo = load_topology(dir + "/topology.json");
    FlowCoefficients coef = load_coefficients(dir + "/coefficients.json");
    Scenario sc = assemble_scenario(ds, topo, coef, parse_year_month("2017-01"), 12);
    StakeholderConstraints R = load_constraints(dir + "/constraints.json");

    // Recorded-controls trajectory of the evaluation year.
    Trajectory traj = run_scenario(sc, sc.recorded_controls);
    write_text_file(out + "/trajectory_2017.csv", trajectory_csv(traj));

    // Its grade under the bundled constraints (Ontario terms included).
    GradeReport rep = grade_network(
        traj, R, sc.baselines, sc.flow_history[static_cast<size_t>(index(River::Ottawa))],
        sc.stl_history);
    write_json_file(out + "/grade_2017.json", to_json(rep));

    // First receding-horizon plan under the bundled run config's seed.
    MpcInputs inputs = make_mpc_inputs(sc, R);
    MpcConfig mpc;
    mpc.anneal.seed = 20170101;
    mpc.anneal.trace_stride = 0;
    double score = 0.0;
    IndicatorSeries forecast = forecast_indicator(inputs.indicator_history, mpc.horizon);
    ControlPlan plan = plan_horizon(sc.initial, forecast, inputs, mpc, &score);
    nlohmann::json jplan = to_json(plan);
    jplan["objective"] = score;
    write_json_file(out + "/plan_first_step.json", jplan);

    // Environmental sensitivity ranking at the bundled deltas.
    SensitivityConfig scfg;
    scfg.perturbations = {{PerturbationKind::Precipitation, 0.03, River::StMarys},
                          {PerturbationKind::IceClog, 210.0, River::StMarys},
                          {PerturbationKind::SnowPack, 0.05, River::StMarys}};
    StakeholderConstraints basic = R;
    basic.ontario.reset();
    SensitivityReport srep = run_sensitivity(sc, basic, scfg);
    nlohmann::json js;
    js["rain"] = *srep.s_rain;
    js["ice"] = *srep.s_ice;
    js["snow"] = *srep.s_snow;
    js["total"] = srep.total;
    write_json_file(out + "/sensitivity_3pct.json", js);

    std::cout << "golden files frozen under " << out << "\n";
    return 0;
}
