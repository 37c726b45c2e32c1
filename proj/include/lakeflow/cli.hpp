#ifndef LAKEFLOW_CLI_HPP
#define LAKEFLOW_CLI_HPP

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lakeflow/config.hpp"
#include "lakeflow/report.hpp"
#include "lakeflow/sensitivity.hpp"
#include "lakeflow/wlpcm.hpp"

namespace lakeflow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitModelError = 3;

struct CliOptions {
    std::string config;
    std::string data; // overrides the config's scenario.data when set
    std::string out = ".";
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::string out_path(const CliOptions& opt, const std::string& name) {
    return (std::filesystem::path(opt.out) / name).string();
}

inline RunConfig load_config_with_overrides(const CliOptions& opt) {
    RunConfig rc = opt.config.empty() ? RunConfig{} : load_run_config(opt.config);
    if (!opt.data.empty())
        rc.scenario.data = opt.data;
    if (opt.seed)
        rc.seed = *opt.seed;
    rc.anneal.seed = rc.seed;
    rc.mpc.anneal.seed = rc.seed;
    rc.synthetic.seed = rc.seed != 0 ? rc.seed : rc.synthetic.seed;
    return rc;
}

inline RunManifest make_manifest(const std::string& command, const RunConfig& rc,
                                 const CliOptions& opt) {
    RunManifest m;
    m.command = command;
    m.seed = rc.seed;
    m.config_path = opt.config;
    m.out_dir = opt.out;
    if (!opt.config.empty())
        m.add_input(opt.config);
    m.add_input(rc.scenario.data);
    m.add_input(rc.scenario.topology);
    m.add_input(rc.scenario.coefficients);
    m.add_input(rc.constraints);
    return m;
}

} // namespace detail

// ----------------------------------------------------------------------------
// JSON views of the domain results
// ----------------------------------------------------------------------------

inline nlohmann::json to_json(const GradeReport& rep) {
    nlohmann::json j;
    for (Lake l : kLakes) {
        const LakeGrade& g = rep.lake(l);
        j["lakes"][std::string(lake_id(l))] = {{"g_level", g.g_level},
                                               {"g_fluctuation", g.g_fluctuation},
                                               {"mean_level", g.mean_level},
                                               {"sigma", g.sigma},
                                               {"baseline_mean", g.baseline_mean},
                                               {"baseline_sigma", g.baseline_sigma}};
    }
    j["base_total"] = rep.base_total;
    j["total"] = rep.total;
    if (rep.has_ontario)
        j["ontario"] = {{"g_flood", rep.g_flood},
                        {"g_river_flow", rep.g_river_flow},
                        {"g_river_fluctuation", rep.g_river_fluctuation},
                        {"g_montreal", rep.g_montreal},
                        {"river_mean_flow", rep.river_mean_flow},
                        {"river_sigma", rep.river_sigma},
                        {"river_baseline_mean", rep.river_baseline_mean},
                        {"river_baseline_sigma", rep.river_baseline_sigma},
                        {"montreal_residual", rep.montreal_residual}};
    return j;
}

inline nlohmann::json to_json(const ControlPlan& plan) {
    return {{"start", format_year_month(plan.start_month)},
            {"a", plan.a},
            {"e", plan.e}};
}

inline std::string plan_csv(const ControlPlan& plan) {
    std::string csv = "month,a,e\n";
    for (int t = 0; t < plan.months(); ++t) {
        csv += format_year_month(plan.start_month + t);
        csv += ',' + format_number(plan.a[static_cast<size_t>(t)]);
        csv += ',' + format_number(plan.e[static_cast<size_t>(t)]);
        csv += '\n';
    }
    return csv;
}

inline std::string trajectory_csv(const Trajectory& traj) {
    std::string csv = "month,lake,level_m\n";
    for (const LakeState& s : traj.states)
        for (Lake l : kLakes) {
            csv += format_year_month(s.month);
            csv += ',' + std::string(lake_id(l));
            csv += ',' + format_number(s.level(l));
            csv += '\n';
        }
    return csv;
}

// ----------------------------------------------------------------------------
// fit
// ----------------------------------------------------------------------------

inline int cmd_fit(const CliOptions& opt) {
    RunConfig rc = detail::load_config_with_overrides(opt);
    if (rc.scenario.data.empty())
        throw SchemaError("fit: no data file (pass --data or set scenario.data)");
    Dataset ds = load_dataset(rc.scenario.data);

    static const std::array<std::string, 4> pair_name = {
        "Superior-StMarys (A->a)", "MichiganHuron-StClair (B->b)", "StClair-Detroit (C->c)",
        "Erie-Niagara (D->d)"};

    FlowCoefficients fitted;
    for (int r = 0; r < 4; ++r) {
        const SampleList& lv = ds.level[static_cast<size_t>(r)];
        const SampleList& fl = ds.flow[static_cast<size_t>(r)];
        if (lv.empty() || fl.empty())
            throw DataError("fit: pair " + pair_name[static_cast<size_t>(r)] +
                            ": missing level or flow series");
        MonthlySeries levels = contiguous(lv, lv.front().month,
                                          lv.back().month - lv.front().month + 1, "levels");
        MonthlySeries flows =
            contiguous(fl, fl.front().month, fl.back().month - fl.front().month + 1, "flows");
        try {
            fitted.pair[static_cast<size_t>(r)] = fit_coefficients(levels, flows);
        } catch (const DataError& ex) {
            throw DataError("fit: pair " + pair_name[static_cast<size_t>(r)] + ": " + ex.what());
        } catch (const PreconditionError& ex) {
            throw PreconditionError("fit: pair " + pair_name[static_cast<size_t>(r)] + ": " +
                                    ex.what());
        }
    }

    RunManifest manifest = detail::make_manifest("fit", rc, opt);
    nlohmann::json j = to_json(fitted);
    j["manifest"] = to_json(manifest);
    std::string path = detail::out_path(opt, "coefficients.json");
    write_json_file(path, j);
    return validate_report(path, "fit") ? kExitOk : kExitModelError;
}

// ----------------------------------------------------------------------------
// optimize
// ----------------------------------------------------------------------------

inline int cmd_optimize(const CliOptions& opt) {
    RunConfig rc = detail::load_config_with_overrides(opt);
    Scenario sc = load_scenario(rc);
    if (rc.constraints.empty())
        throw SchemaError("optimize: constraints file is required");
    StakeholderConstraints R = load_constraints(rc.constraints);
    if (rc.ontario && !R.ontario)
        throw PreconditionError("optimize: mode is ontario but the constraints file has no "
                                "ontario block");
    if (!rc.ontario)
        R.ontario.reset();
    if (sc.months < 12)
        throw PreconditionError("optimize: the full-year objective needs a 12-month window");

    const MonthlySeries& ottawa = sc.flow_history[static_cast<size_t>(index(River::Ottawa))];
    auto grade_plan = [&](const ControlPlan& plan) {
        Trajectory traj = run_scenario(sc, plan);
        return grade_network(traj, R, sc.baselines, ottawa, sc.stl_history);
    };

    Bounds bounds = control_bounds(sc.topology, sc.months);
    Objective objective = [&](const std::vector<double>& x) {
        return grade_plan(unflatten(x, sc.eval_start)).total;
    };

    AnnealConfig ac = rc.anneal;
    AnnealResult best =
        anneal_restarts(objective, bounds.clip(flatten(sc.passthrough)), bounds, ac);
    ControlPlan plan = unflatten(best.best, sc.eval_start);

    GradeReport optimized = grade_plan(plan);
    GradeReport passthrough = grade_plan(sc.passthrough);
    GradeReport recorded = grade_plan(sc.recorded_controls);

    RunManifest manifest = detail::make_manifest("optimize", rc, opt);
    nlohmann::json j;
    j["best_score"] = best.best_score;
    j["optimized"] = to_json(optimized);
    j["passthrough"] = to_json(passthrough);
    j["recorded"] = to_json(recorded);
    j["plan"] = to_json(plan);
    j["manifest"] = to_json(manifest);
    write_json_file(detail::out_path(opt, "grade.json"), j);
    write_text_file(detail::out_path(opt, "plan.csv"), plan_csv(plan));

    if (!best.trace.points.empty()) {
        std::string csv = "iteration,temperature,current,best\n";
        for (const TracePoint& p : best.trace.points) {
            csv += std::to_string(p.iteration);
            csv += ',' + format_number(p.temperature);
            csv += ',' + format_number(p.current);
            csv += ',' + format_number(p.best);
            csv += '\n';
        }
        write_text_file(detail::out_path(opt, "anneal_trace.csv"), csv);
    }
    return validate_report(detail::out_path(opt, "grade.json"), "optimize") ? kExitOk
                                                                            : kExitModelError;
}

// ----------------------------------------------------------------------------
// mpc
// ----------------------------------------------------------------------------

namespace detail {

struct YearlyStats {
    double mean = 0.0;
    double min = 0.0;
    double median = 0.0;
};

inline YearlyStats stats_of(std::vector<double> v) {
    YearlyStats s;
    s.mean = mean(v);
    s.min = *std::min_element(v.begin(), v.end());
    s.median = quantile(v, 0.5);
    return s;
}

inline nlohmann::json to_json(const YearlyStats& s) {
    return {{"mean", s.mean}, {"min", s.min}, {"median", s.median}};
}

// Monthly network grades (mean over lakes per month) for a realized level
// path appended to recorded history.
struct MonthlyNetworkGrades {
    std::vector<double> g_level;       // one per graded month
    std::vector<double> g_fluctuation;
};

inline MonthlyNetworkGrades
monthly_network_grades(const Scenario& sc, const std::array<MonthlySeries, kLakeCount>& levels,
                       const StakeholderConstraints& R, int from, int n) {
    MonthlyNetworkGrades out;
    out.g_level.assign(static_cast<size_t>(n), 0.0);
    out.g_fluctuation.assign(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < kLakeCount; ++k) {
        Lake l = static_cast<Lake>(k);
        MonthlyGrades g = monthly_grades(levels[static_cast<size_t>(k)], from, n,
                                         sc.baselines.for_lake(l), R.lake(l));
        for (int i = 0; i < n; ++i) {
            out.g_level[static_cast<size_t>(i)] += g.g_level[i] / kLakeCount;
            out.g_fluctuation[static_cast<size_t>(i)] += g.g_fluctuation[i] / kLakeCount;
        }
    }
    return out;
}

// Recorded history with a realized trajectory appended, per lake.
inline std::array<MonthlySeries, kLakeCount> history_plus_trajectory(const Scenario& sc,
                                                                     const Trajectory& traj) {
    std::array<MonthlySeries, kLakeCount> out;
    int hist_n = sc.eval_start - sc.history_start;
    for (int k = 0; k < kLakeCount; ++k) {
        MonthlySeries s = sc.level_history[static_cast<size_t>(k)].slice(sc.history_start, hist_n);
        for (const LakeState& st : traj.states)
            s.push_back(st.level_m[static_cast<size_t>(k)]);
        out[static_cast<size_t>(k)] = std::move(s);
    }
    return out;
}

} // namespace detail

inline int cmd_mpc(const CliOptions& opt) {
    RunConfig rc = detail::load_config_with_overrides(opt);
    Scenario sc = load_scenario(rc);
    if (rc.constraints.empty())
        throw SchemaError("mpc: constraints file is required");
    StakeholderConstraints R = load_constraints(rc.constraints);
    if (rc.ontario && !R.ontario)
        throw PreconditionError("mpc: mode is ontario but the constraints file has no ontario "
                                "block");
    if (!rc.ontario)
        R.ontario.reset();

    MpcInputs inputs = make_mpc_inputs(sc, R);
    MpcRunRecord rec = mpc_run(sc.initial, make_truth(sc), inputs, rc.mpc, sc.months);

    Trajectory passthrough = run_scenario(sc, sc.passthrough);

    // Per-month grades for the run summary (Tables-style mean/min/median).
    int from = sc.eval_start + 1;
    int n = static_cast<int>(rec.realized.states.size()) - 1;
    auto wlpcm_levels = detail::history_plus_trajectory(sc, rec.realized);
    auto pass_levels = detail::history_plus_trajectory(sc, passthrough);
    detail::MonthlyNetworkGrades g_wlpcm =
        detail::monthly_network_grades(sc, wlpcm_levels, R, from, n);
    detail::MonthlyNetworkGrades g_pass =
        detail::monthly_network_grades(sc, pass_levels, R, from, sc.months);
    detail::MonthlyNetworkGrades g_actual =
        detail::monthly_network_grades(sc, sc.level_history, R, from, sc.months);

    RunManifest manifest = detail::make_manifest("mpc", rc, opt);

    nlohmann::json jrec;
    jrec["emergency_stopped"] = rec.emergency_stopped;
    jrec["stop_reason"] = rec.stop_reason;
    jrec["steps"] = nlohmann::json::array();
    for (const MpcStepRecord& s : rec.steps) {
        nlohmann::json js;
        js["month"] = format_year_month(s.month);
        js["planned_objective"] = s.planned_objective;
        js["plan"] = to_json(s.plan);
        js["history_len_after"] = s.history_len_after;
        js["grade_to_date"] = to_json(s.grade_to_date);
        for (size_t w = 0; w < s.applied.size(); ++w) {
            nlohmann::json ja;
            ja["a"] = s.applied[w].a;
            ja["e"] = s.applied[w].e;
            ja["month"] = format_year_month(s.month + static_cast<int>(w));
            nlohmann::json jl;
            for (Lake l : kLakes)
                jl[std::string(lake_id(l))] = s.realized[w].level(l);
            ja["realized_levels"] = jl;
            nlohmann::json ji;
            for (Lake l : kLakes)
                ji[std::string(lake_id(l))] =
                    s.realized_indicators[w][static_cast<size_t>(index(l))];
            ja["realized_indicator_m3"] = ji;
            js["applied"].push_back(ja);
        }
        nlohmann::json jf;
        for (Lake l : kLakes)
            jf[std::string(lake_id(l))] =
                s.forecast.lake[static_cast<size_t>(index(l))].values();
        js["forecast_m3"] = jf;
        jrec["steps"].push_back(js);
    }
    jrec["manifest"] = to_json(manifest);
    write_json_file(detail::out_path(opt, "mpc_record.json"), jrec);

    // Flat CSV: realized month rows per lake with the controls and grades.
    {
        std::string csv = "month,lake,level_m,a,e,g_level,g_fluctuation\n";
        for (int i = 0; i < n; ++i) {
            int m = from + i;
            MonthControls mc = rec.realized.plan.at_month(m - 1);
            for (int k = 0; k < kLakeCount; ++k) {
                Lake l = static_cast<Lake>(k);
                MonthlyGrades g =
                    monthly_grades(wlpcm_levels[static_cast<size_t>(k)], m, 1,
                                   sc.baselines.for_lake(l), R.lake(l));
                csv += format_year_month(m);
                csv += ',' + std::string(lake_id(l));
                csv += ',' + format_number(rec.realized.at_month(m).level(l));
                csv += ',' + format_number(mc.a);
                csv += ',' + format_number(mc.e);
                csv += ',' + format_number(g.g_level[0]);
                csv += ',' + format_number(g.g_fluctuation[0]);
                csv += '\n';
            }
        }
        write_text_file(detail::out_path(opt, "mpc_record.csv"), csv);
    }

    // River water-level indices of the realized run, where baselines exist.
    {
        std::string csv = "month,river,flow_m3s,index\n";
        for (int r = 0; r < kChainRiverCount; ++r) {
            River river = static_cast<River>(r);
            const auto& base = sc.baselines.for_river(river).monthly_mean;
            bool has_base = true;
            for (double b : base)
                has_base = has_base && b > 0.0;
            if (!has_base)
                continue;
            MonthlySeries flows(sc.eval_start, {});
            for (int t = 0; t < n; ++t) {
                int m = sc.eval_start + t;
                if (river == River::StMarys || river == River::StLawrence) {
                    MonthControls mc = rec.realized.plan.at_month(m);
                    flows.push_back(river == River::StMarys ? mc.a : mc.e);
                } else {
                    flows.push_back(rec.realized.at_month(m).flow(river));
                }
            }
            MonthlySeries idx = water_level_index(flows, base);
            for (int t = 0; t < idx.size(); ++t) {
                csv += format_year_month(idx.month_at(t));
                csv += ',' + std::string(river_id(river));
                csv += ',' + format_number(flows[t]);
                csv += ',' + format_number(idx[t]);
                csv += '\n';
            }
        }
        write_text_file(detail::out_path(opt, "rivers.csv"), csv);
    }

    nlohmann::json jsum;
    jsum["g_level"] = {{"wlpcm", detail::to_json(detail::stats_of(g_wlpcm.g_level))},
                       {"passthrough", detail::to_json(detail::stats_of(g_pass.g_level))},
                       {"recorded", detail::to_json(detail::stats_of(g_actual.g_level))}};
    jsum["g_fluctuation"] = {
        {"wlpcm", detail::to_json(detail::stats_of(g_wlpcm.g_fluctuation))},
        {"passthrough", detail::to_json(detail::stats_of(g_pass.g_fluctuation))},
        {"recorded", detail::to_json(detail::stats_of(g_actual.g_fluctuation))}};
    jsum["emergency_stopped"] = rec.emergency_stopped;
    jsum["manifest"] = to_json(manifest);
    write_json_file(detail::out_path(opt, "summary.json"), jsum);

    return validate_report(detail::out_path(opt, "mpc_record.json"), "mpc") ? kExitOk
                                                                            : kExitModelError;
}

// ----------------------------------------------------------------------------
// sensitivity
// ----------------------------------------------------------------------------

inline int cmd_sensitivity(const CliOptions& opt) {
    RunConfig rc = detail::load_config_with_overrides(opt);
    Scenario sc = load_scenario(rc);
    if (rc.constraints.empty())
        throw SchemaError("sensitivity: constraints file is required");
    StakeholderConstraints R = load_constraints(rc.constraints);
    if (!rc.ontario)
        R.ontario.reset();

    SensitivityReport rep = run_sensitivity(sc, R, rc.sensitivity);

    RunManifest manifest = detail::make_manifest("sensitivity", rc, opt);
    nlohmann::json j;
    j["estimator"] =
        rc.sensitivity.estimator == SensitivityEstimator::StdDev ? "stddev" : "rmse";
    nlohmann::json ji = nlohmann::json::object();
    if (rep.s_rain)
        ji["rain"] = {{"s", *rep.s_rain}, {"delta", *rep.delta_rain}};
    if (rep.s_ice)
        ji["ice"] = {{"s", *rep.s_ice}, {"delta", *rep.delta_ice}};
    if (rep.s_snow)
        ji["snow"] = {{"s", *rep.s_snow}, {"delta", *rep.delta_snow}};
    j["indices"] = ji;
    j["total"] = rep.total;
    nlohmann::json jd = nlohmann::json::object();
    for (const auto& [edge, s] : rep.dam)
        jd[edge] = {{"s", s}, {"delta", rep.dam_delta.at(edge)}};
    j["dam"] = jd;
    j["manifest"] = to_json(manifest);
    std::string path = detail::out_path(opt, "sensitivity.json");
    write_json_file(path, j);
    return validate_report(path, "sensitivity") ? kExitOk : kExitModelError;
}

// ----------------------------------------------------------------------------
// generate-synthetic
// ----------------------------------------------------------------------------

namespace detail {

inline std::string dataset_csv(const Dataset& ds) {
    std::string csv = "date,series_id,kind,value\n";
    auto emit = [&](const SampleList& samples, const std::string& id, const char* kind) {
        for (const Sample& s : samples) {
            csv += format_year_month(s.month);
            csv += ',' + id;
            csv += ',';
            csv += kind;
            csv += ',' + format_number(s.value);
            csv += '\n';
        }
    };
    for (Lake l : kLakes)
        emit(ds.level[static_cast<size_t>(index(l))], std::string(lake_id(l)), "level");
    for (int r = 0; r < kRiverCount; ++r)
        emit(ds.flow[static_cast<size_t>(r)], std::string(river_id(static_cast<River>(r))),
             "flow");
    emit(ds.stl, "stl", "flow");
    return csv;
}

inline StakeholderConstraints bundled_constraints() {
    StakeholderConstraints R;
    // Mixed fluctuation demands; Medium level demands keep the regulation
    // target at the baselines.
    R.lakes[static_cast<size_t>(index(Lake::StClair))].fluctuation = Demand::Low;
    R.lakes[static_cast<size_t>(index(Lake::Erie))].fluctuation = Demand::High;
    OntarioExtension ext;
    ext.montreal = {kSyntheticMontrealNature, kSyntheticMontrealResidents, 500.0};
    R.ontario = ext;
    return R;
}

} // namespace detail

inline int cmd_generate_synthetic(const CliOptions& opt) {
    RunConfig rc = detail::load_config_with_overrides(opt);
    RunManifest manifest = detail::make_manifest("generate-synthetic", rc, opt);

    nlohmann::json jreport;
    jreport["kind"] = rc.synthetic_kind;

    if (rc.synthetic_kind == "fitdata") {
        Dataset ds = generate_fit_dataset(rc.synthetic.start_month, 132, 50.0, rc.synthetic.seed);
        write_text_file(detail::out_path(opt, "fitdata.csv"), detail::dataset_csv(ds));
        jreport["files"] = {"fitdata.csv"};
        jreport["generator"] = {{"months", 132},
                                {"flow_noise_sigma_m3s", 50.0},
                                {"coefficients", to_json(fitted_reference_coefficients())}};
    } else if (rc.synthetic_kind == "scenario") {
        SyntheticWorld w = generate_synthetic_scenario(rc.synthetic);
        write_text_file(detail::out_path(opt, "data.csv"), detail::dataset_csv(w.dataset));
        write_json_file(detail::out_path(opt, "topology.json"), to_json(w.topology));
        write_json_file(detail::out_path(opt, "coefficients.json"), to_json(w.coefficients));
        write_json_file(detail::out_path(opt, "constraints.json"),
                        to_json(detail::bundled_constraints()));

        nlohmann::json jrun;
        jrun["scenario"] = {{"data", "data.csv"},
                            {"topology", "topology.json"},
                            {"coefficients", "coefficients.json"},
                            {"eval_start", format_year_month(rc.synthetic.eval_start)},
                            {"months", rc.synthetic.months}};
        jrun["constraints"] = "constraints.json";
        jrun["mode"] = "basic";
        jrun["seed"] = rc.seed;
        jrun["mpc"] = {{"horizon", 6}, {"apply_window", 1}};
        jrun["sensitivity"] = {
            {"estimator", "rmse"},
            {"perturbations",
             nlohmann::json::array({{{"kind", "precipitation"}, {"delta", 0.03}},
                                    {{"kind", "ice_clog"}, {"delta", 210.0}},
                                    {{"kind", "snow_pack"}, {"delta", 0.05}}})},
            {"dams", nlohmann::json::array(
                         {{{"edge", "a"}, {"delta", 100.0}}, {{"edge", "e"}, {"delta", 100.0}}})}};
        write_json_file(detail::out_path(opt, "run.json"), jrun);
        jreport["files"] = {"data.csv", "topology.json", "coefficients.json", "constraints.json",
                            "run.json"};
        jreport["generator"] = {{"eval_start", format_year_month(rc.synthetic.eval_start)},
                                {"anomaly", rc.synthetic.anomaly},
                                {"noise", rc.synthetic.noise},
                                {"seasonal", rc.synthetic.seasonal}};
    } else {
        throw SchemaError("generate-synthetic: unknown kind '" + rc.synthetic_kind + "'");
    }

    for (const auto& f : jreport["files"])
        manifest.inputs.emplace_back(f.get<std::string>(),
                                     hash_file(detail::out_path(opt, f.get<std::string>())));
    jreport["manifest"] = to_json(manifest);
    std::string path = detail::out_path(opt, "generation.json");
    write_json_file(path, jreport);
    return validate_report(path, "generate-synthetic") ? kExitOk : kExitModelError;
}

// ----------------------------------------------------------------------------
// Dispatch
// ----------------------------------------------------------------------------

inline int run_command(const std::string& name, const CliOptions& opt) {
    try {
        if (name == "fit")
            return cmd_fit(opt);
        if (name == "optimize")
            return cmd_optimize(opt);
        if (name == "mpc")
            return cmd_mpc(opt);
        if (name == "sensitivity")
            return cmd_sensitivity(opt);
        if (name == "generate-synthetic")
            return cmd_generate_synthetic(opt);
        std::cerr << "unknown command '" << name << "'\n";
        return kExitInputError;
    } catch (const SchemaError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const DataError& ex) {
        std::cerr << "data error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const PreconditionError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const OptimizationError& ex) {
        std::cerr << "optimization error: " << ex.what() << "\n";
        return kExitModelError;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitModelError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitModelError;
    }
}

} // namespace lakeflow

#endif // LAKEFLOW_CLI_HPP
