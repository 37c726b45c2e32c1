#ifndef LAKEFLOW_CONFIG_HPP
#define LAKEFLOW_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lakeflow/grading.hpp"
#include "lakeflow/scenario.hpp"
#include "lakeflow/sensitivity.hpp"
#include "lakeflow/wlpcm.hpp"

namespace lakeflow {

// ============================================================================
// Demands / constraints file
// ============================================================================

inline Demand demand_from_string(const std::string& s) {
    if (s == "high")
        return Demand::High;
    if (s == "medium")
        return Demand::Medium;
    if (s == "low")
        return Demand::Low;
    throw SchemaError("unknown demand '" + s + "' (expected high|medium|low)");
}

inline std::string to_string(Demand d) {
    switch (d) {
    case Demand::High:
        return "high";
    case Demand::Low:
        return "low";
    case Demand::Medium:
    default:
        return "medium";
    }
}

inline StakeholderConstraints constraints_from_json(const nlohmann::json& j) {
    StakeholderConstraints R;
    try {
        if (j.contains("lakes")) {
            for (const auto& [id, jd] : j.at("lakes").items()) {
                Lake l = lake_from_id(id);
                LakeDemand& d = R.lakes[static_cast<size_t>(index(l))];
                if (jd.contains("level"))
                    d.level = demand_from_string(jd.at("level").get<std::string>());
                if (jd.contains("fluctuation"))
                    d.fluctuation = demand_from_string(jd.at("fluctuation").get<std::string>());
            }
        }
        if (j.contains("ontario")) {
            const auto& jo = j.at("ontario");
            OntarioExtension ext;
            if (jo.contains("river_flow"))
                ext.river_flow = demand_from_string(jo.at("river_flow").get<std::string>());
            if (jo.contains("river_fluctuation"))
                ext.river_fluctuation =
                    demand_from_string(jo.at("river_fluctuation").get<std::string>());
            if (jo.contains("flood") && !jo.at("flood").is_null()) {
                FloodParams f;
                f.h_warn = jo.at("flood").at("h_warn").get<double>();
                f.h_highest = jo.at("flood").at("h_highest").get<double>();
                f.validate();
                ext.flood = f;
            }
            if (jo.contains("montreal")) {
                const auto& jm = jo.at("montreal");
                ext.montreal.delta_nature = jm.value("delta_nature", 0.0);
                ext.montreal.delta_residents = jm.value("delta_residents", 0.0);
                ext.montreal.scale = jm.value("scale", 500.0);
            }
            R.ontario = ext;
        }
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("constraints file: ") + ex.what());
    }
    return R;
}

inline nlohmann::json to_json(const StakeholderConstraints& R) {
    nlohmann::json j;
    for (Lake l : kLakes)
        j["lakes"][std::string(lake_id(l))] = {
            {"level", to_string(R.lake(l).level)},
            {"fluctuation", to_string(R.lake(l).fluctuation)}};
    if (R.ontario) {
        nlohmann::json jo;
        jo["river_flow"] = to_string(R.ontario->river_flow);
        jo["river_fluctuation"] = to_string(R.ontario->river_fluctuation);
        if (R.ontario->flood)
            jo["flood"] = {{"h_warn", R.ontario->flood->h_warn},
                           {"h_highest", R.ontario->flood->h_highest}};
        else
            jo["flood"] = nullptr;
        jo["montreal"] = {{"delta_nature", R.ontario->montreal.delta_nature},
                          {"delta_residents", R.ontario->montreal.delta_residents},
                          {"scale", R.ontario->montreal.scale}};
        j["ontario"] = jo;
    }
    return j;
}

inline StakeholderConstraints load_constraints(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open constraints file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError("constraints file '" + path + "': " + ex.what());
    }
    return constraints_from_json(j);
}

// ============================================================================
// Coefficients file
// ============================================================================

inline nlohmann::json to_json(const FlowCoefficients& c) {
    nlohmann::json j;
    static const std::array<std::string, 4> pair_name = {
        "Superior-StMarys", "MichiganHuron-StClair", "StClair-Detroit", "Erie-Niagara"};
    for (int r = 0; r < 4; ++r)
        j["pairs"].push_back({{"river", std::string(river_id(static_cast<River>(r)))},
                              {"pair", pair_name[static_cast<size_t>(r)]},
                              {"slope_1e3_m2_per_s", c.pair[static_cast<size_t>(r)].slope},
                              {"intercept_1e5_m3_per_s", c.pair[static_cast<size_t>(r)].intercept},
                              {"r_squared", c.pair[static_cast<size_t>(r)].r_squared}});
    return j;
}

inline FlowCoefficients coefficients_from_json(const nlohmann::json& j) {
    FlowCoefficients c;
    try {
        for (const auto& jp : j.at("pairs")) {
            River r = river_from_id(jp.at("river").get<std::string>());
            if (index(r) >= 4)
                throw SchemaError("coefficients: river '" + std::string(river_id(r)) +
                                  "' has no level relation");
            c.pair[static_cast<size_t>(index(r))] = {
                jp.at("slope_1e3_m2_per_s").get<double>(),
                jp.at("intercept_1e5_m3_per_s").get<double>(), jp.value("r_squared", 0.0)};
        }
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("coefficients file: ") + ex.what());
    }
    c.validate();
    return c;
}

inline FlowCoefficients load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open coefficients file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError("coefficients file '" + path + "': " + ex.what());
    }
    return coefficients_from_json(j);
}

// ============================================================================
// Run config
// ============================================================================

struct ScenarioPaths {
    std::string data;
    std::string topology;
    std::string coefficients;
    int eval_start = parse_year_month("2017-01");
    int months = 12;
};

struct RunConfig {
    ScenarioPaths scenario;
    std::string constraints;
    bool ontario = false; // objective mode for optimize/mpc/sensitivity
    AnnealConfig anneal;
    MpcConfig mpc;
    SensitivityConfig sensitivity;
    SyntheticSpec synthetic;
    std::string synthetic_kind = "scenario"; // or "fitdata"
    std::uint64_t seed = 0;
};

inline PerturbationKind perturbation_kind_from_string(const std::string& s) {
    if (s == "precipitation")
        return PerturbationKind::Precipitation;
    if (s == "ice_clog")
        return PerturbationKind::IceClog;
    if (s == "snow_pack")
        return PerturbationKind::SnowPack;
    if (s == "dam_flow")
        return PerturbationKind::DamFlow;
    throw SchemaError("unknown perturbation kind '" + s + "'");
}

inline std::string to_string(PerturbationKind k) {
    switch (k) {
    case PerturbationKind::Precipitation:
        return "precipitation";
    case PerturbationKind::IceClog:
        return "ice_clog";
    case PerturbationKind::SnowPack:
        return "snow_pack";
    case PerturbationKind::DamFlow:
    default:
        return "dam_flow";
    }
}

inline RunConfig run_config_from_json(const nlohmann::json& j, const std::string& base_dir) {
    RunConfig rc;
    auto resolve = [&](const std::string& p) {
        if (p.empty())
            return p;
        std::filesystem::path fp(p);
        if (fp.is_absolute())
            return p;
        return (std::filesystem::path(base_dir) / fp).string();
    };
    try {
        if (j.contains("scenario")) {
            const auto& js = j.at("scenario");
            rc.scenario.data = resolve(js.value("data", ""));
            rc.scenario.topology = resolve(js.value("topology", ""));
            rc.scenario.coefficients = resolve(js.value("coefficients", ""));
            if (js.contains("eval_start"))
                rc.scenario.eval_start = parse_year_month(js.at("eval_start").get<std::string>());
            rc.scenario.months = js.value("months", 12);
        }
        rc.constraints = resolve(j.value("constraints", ""));
        rc.ontario = j.value("mode", std::string("basic")) == "ontario";
        rc.seed = j.value("seed", std::uint64_t{0});

        if (j.contains("anneal")) {
            const auto& ja = j.at("anneal");
            rc.anneal.t0 = ja.value("t0", rc.anneal.t0);
            rc.anneal.t_min = ja.value("t_min", rc.anneal.t_min);
            rc.anneal.alpha = ja.value("alpha", rc.anneal.alpha);
            rc.anneal.iters_per_temp = ja.value("iters_per_temp", rc.anneal.iters_per_temp);
            rc.anneal.step_fraction = ja.value("step_fraction", rc.anneal.step_fraction);
            rc.anneal.restarts = ja.value("restarts", rc.anneal.restarts);
            rc.anneal.trace_stride = ja.value("trace_stride", rc.anneal.trace_stride);
        }
        rc.mpc.anneal = rc.anneal;
        if (j.contains("mpc")) {
            const auto& jm = j.at("mpc");
            rc.mpc.horizon = jm.value("horizon", rc.mpc.horizon);
            rc.mpc.apply_window = jm.value("apply_window", rc.mpc.apply_window);
            if (jm.contains("emergency_bands")) {
                for (const auto& [id, jb] : jm.at("emergency_bands").items()) {
                    Lake l = lake_from_id(id);
                    rc.mpc.emergency[static_cast<size_t>(index(l))] =
                        LevelBand{jb.at(0).get<double>(), jb.at(1).get<double>()};
                }
            }
        }
        rc.mpc.ontario = rc.ontario;

        if (j.contains("sensitivity")) {
            const auto& js = j.at("sensitivity");
            if (js.contains("estimator"))
                rc.sensitivity.estimator = js.at("estimator").get<std::string>() == "stddev"
                                               ? SensitivityEstimator::StdDev
                                               : SensitivityEstimator::Rmse;
            for (const auto& jp : js.value("perturbations", nlohmann::json::array())) {
                Perturbation p;
                p.kind = perturbation_kind_from_string(jp.at("kind").get<std::string>());
                p.delta = jp.at("delta").get<double>();
                if (p.kind == PerturbationKind::DamFlow)
                    p.edge = river_from_id(jp.at("edge").get<std::string>());
                rc.sensitivity.perturbations.push_back(p);
            }
            for (const auto& jd : js.value("dams", nlohmann::json::array()))
                rc.sensitivity.dams.push_back({river_from_id(jd.at("edge").get<std::string>()),
                                               jd.at("delta").get<double>()});
        }

        if (j.contains("synthetic")) {
            const auto& js = j.at("synthetic");
            rc.synthetic_kind = js.value("kind", rc.synthetic_kind);
            if (js.contains("start"))
                rc.synthetic.start_month = parse_year_month(js.at("start").get<std::string>());
            if (js.contains("eval_start"))
                rc.synthetic.eval_start = parse_year_month(js.at("eval_start").get<std::string>());
            rc.synthetic.months = js.value("months", rc.synthetic.months);
            rc.synthetic.anomaly = js.value("anomaly", rc.synthetic.anomaly);
            rc.synthetic.noise = js.value("noise", rc.synthetic.noise);
            rc.synthetic.seasonal = js.value("seasonal", rc.synthetic.seasonal);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("run config: ") + ex.what());
    }
    return rc;
}

inline RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open run config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError("run config '" + path + "': " + ex.what());
    }
    return run_config_from_json(j, std::filesystem::path(path).parent_path().string());
}

inline Scenario load_scenario(const RunConfig& rc) {
    if (rc.scenario.data.empty())
        throw SchemaError("run config: scenario.data is required");
    Dataset ds = load_dataset(rc.scenario.data);
    NetworkTopology topo = rc.scenario.topology.empty() ? NetworkTopology::defaults()
                                                        : load_topology(rc.scenario.topology);
    if (rc.scenario.coefficients.empty())
        throw SchemaError("run config: scenario.coefficients is required");
    FlowCoefficients coef = load_coefficients(rc.scenario.coefficients);
    return assemble_scenario(ds, topo, coef, rc.scenario.eval_start, rc.scenario.months);
}

} // namespace lakeflow

#endif // LAKEFLOW_CONFIG_HPP
