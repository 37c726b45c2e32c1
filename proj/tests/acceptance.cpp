// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each check carries its tolerance inline; expected values come from the
// independent oracles coded here, never from the implementation under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lakeflow/cli.hpp"
#include "lakeflow/config.hpp"
#include "lakeflow/sensitivity.hpp"
#include "lakeflow/wlpcm.hpp"

using namespace lakeflow;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok)
        ++g_failures;
}

std::string source_dir() { return LAKEFLOW_SOURCE_DIR; }

std::string fresh_dir(const std::string& name) {
    std::string dir = "/tmp/lakeflow_acceptance_" + name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

Scenario bundled_scenario() {
    std::string dir = source_dir() + "/data/scenario2017";
    Dataset ds = load_dataset(dir + "/data.csv");
    NetworkTopology topo = load_topology(dir + "/topology.json");
    FlowCoefficients coef = load_coefficients(dir + "/coefficients.json");
    return assemble_scenario(ds, topo, coef, parse_year_month("2017-01"), 12);
}

NetworkTopology stable_topology() {
    NetworkTopology t = NetworkTopology::defaults();
    t.lakes[static_cast<size_t>(index(Lake::StClair))].area_m2 = 8.0e9;
    t.edge(River::StMarys).min_flow = 1000.0;
    t.edge(River::StMarys).max_flow = 4000.0;
    return t;
}

// ---------------------------------------------------------------------------

bool coefficient_recovery(std::string& out) {
    std::string dir = fresh_dir("fit");
    Dataset ds = generate_fit_dataset(parse_year_month("2009-01"), 132, 50.0, 20240202);
    write_file(dir + "/fitdata.csv", detail::dataset_csv(ds));

    CliOptions opt;
    opt.data = dir + "/fitdata.csv";
    opt.out = dir;
    opt.seed = 20240202;

    auto t0 = std::chrono::steady_clock::now();
    int rc = run_command("fit", opt);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rc != kExitOk) {
        out = "fit exited " + std::to_string(rc);
        return false;
    }

    FlowCoefficients fitted = load_coefficients(dir + "/coefficients.json");
    FlowCoefficients truth = fitted_reference_coefficients();
    double worst = 0.0;
    for (int p = 0; p < 4; ++p) {
        double ds_rel = std::abs(fitted.pair[static_cast<size_t>(p)].slope -
                                 truth.pair[static_cast<size_t>(p)].slope) /
                        truth.pair[static_cast<size_t>(p)].slope;
        double di_rel = std::abs(fitted.pair[static_cast<size_t>(p)].intercept -
                                 truth.pair[static_cast<size_t>(p)].intercept) /
                        std::abs(truth.pair[static_cast<size_t>(p)].intercept);
        worst = std::max({worst, ds_rel, di_rel});
    }
    std::ostringstream os;
    os << "worst relative error " << worst << ", " << seconds << " s";
    out = os.str();
    return worst < 0.02 && seconds < 1.0;
}

bool conservation_suite(std::string& out) {
    std::mt19937_64 rng(555001);
    std::uniform_real_distribution<double> area_d(1e10, 2e11), level_d(100.0, 200.0);
    std::uniform_real_distribution<double> flow_d(0.0, 10000.0), delta_d(-1e10, 1e10);
    FlowCoefficients coef = fitted_reference_coefficients();

    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        NetworkTopology topo = stable_topology();
        for (int k = 0; k < kLakeCount; ++k)
            topo.lakes[static_cast<size_t>(k)].area_m2 = area_d(rng);
        topo.edge(River::StMarys).min_flow = 0.0;
        topo.edge(River::StMarys).max_flow = 10000.0;
        topo.edge(River::StLawrence).min_flow = 0.0;
        topo.edge(River::StLawrence).max_flow = 10000.0;

        LakeState s;
        for (int k = 0; k < kLakeCount; ++k)
            s.level_m[static_cast<size_t>(k)] = level_d(rng);
        for (int r = 0; r < kChainRiverCount; ++r)
            s.flow_m3s[static_cast<size_t>(r)] = flow_d(rng);
        std::array<double, kLakeCount> delta{};
        for (int k = 0; k < kLakeCount; ++k)
            delta[static_cast<size_t>(k)] = delta_d(rng);
        MonthControls mc{flow_d(rng), flow_d(rng)};

        LakeState next = step(s, mc, delta, topo, coef);
        auto flows = s.flow_m3s;
        flows[static_cast<size_t>(index(River::StMarys))] = mc.a;
        flows[static_cast<size_t>(index(River::StLawrence))] = mc.e;
        const double ms = topo.month_seconds();
        for (int k = 0; k < kLakeCount; ++k) {
            double inflow = (k == 0) ? 0.0 : flows[static_cast<size_t>(k - 1)];
            double outflow = flows[static_cast<size_t>(k)];
            double rhs = (inflow - outflow) * ms + delta[static_cast<size_t>(k)];
            double lhs =
                topo.lakes[static_cast<size_t>(k)].area_m2 *
                (next.level_m[static_cast<size_t>(k)] - s.level_m[static_cast<size_t>(k)]);
            double scale =
                std::max(1.0, (inflow + outflow) * ms + std::abs(delta[static_cast<size_t>(k)]));
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    std::ostringstream os;
    os << "worst relative imbalance " << worst << " over 1000 transitions";
    out = os.str();
    return worst <= 1e-9;
}

bool delay_causality(std::string& out) {
    NetworkTopology topo = stable_topology();
    FlowCoefficients coef = fitted_reference_coefficients();

    LakeState init;
    init.level_m = {183.40, 176.40, 175.00, 174.10, 74.80};
    for (int r = 0; r < 4; ++r)
        init.flow_m3s[static_cast<size_t>(r)] =
            river_flow(init.level_m[static_cast<size_t>(r)], coef.pair[static_cast<size_t>(r)]);
    init.flow_m3s[4] = 7000.0;

    const int horizon = 10, t_impulse = 3;
    ControlPlan plan;
    plan.start_month = 0;
    plan.a.assign(horizon, init.flow_m3s[0]);
    plan.e.assign(horizon, 7000.0);
    IndicatorSeries ind;
    const double ms = topo.month_seconds();
    for (int k = 0; k < kLakeCount; ++k) {
        double inflow = (k == 0) ? 0.0 : init.flow_m3s[static_cast<size_t>(k - 1)];
        ind.lake[static_cast<size_t>(k)] = MonthlySeries::constant(
            0, horizon, (init.flow_m3s[static_cast<size_t>(k)] - inflow) * ms);
    }

    Trajectory base = simulate(init, plan, ind, topo, coef, horizon);
    ControlPlan perturbed = plan;
    perturbed.a[t_impulse] += 1000.0;
    Trajectory pert = simulate(init, perturbed, ind, topo, coef, horizon);

    auto first_divergence = [&](Lake l) {
        for (int m = 0; m <= horizon; ++m)
            if (pert.at_month(m).level(l) != base.at_month(m).level(l))
                return m;
        return -1;
    };

    bool prefix_identical = true;
    for (int m = 0; m <= t_impulse; ++m)
        for (int k = 0; k < kLakeCount; ++k)
            prefix_identical = prefix_identical &&
                               pert.at_month(m).level_m[static_cast<size_t>(k)] ==
                                   base.at_month(m).level_m[static_cast<size_t>(k)];

    int db = first_divergence(Lake::MichiganHuron);
    int dc = first_divergence(Lake::StClair);
    int dd = first_divergence(Lake::Erie);
    int de = first_divergence(Lake::Ontario);
    std::ostringstream os;
    os << "divergence months B/C/D/E = " << db << "/" << dc << "/" << dd << "/" << de
       << " after impulse at " << t_impulse;
    out = os.str();
    return prefix_identical && db == t_impulse + 1 && dc >= t_impulse + 2 && dd >= t_impulse + 3 &&
           de >= t_impulse + 4 && dc != -1 && dd != -1 && de != -1;
}

bool grading_suite(std::string& out) {
    std::mt19937_64 rng(909090);
    std::uniform_real_distribution<double> base_d(70.0, 80.0), dev_d(-1.0, 1.0),
        sigma_d(0.0, 2.0);
    std::uniform_int_distribution<int> demand_d(0, 2);

    auto window = [&](double mean_value, double sigma) {
        std::vector<double> v(12, mean_value);
        for (int i = 0; i < 12; ++i)
            v[static_cast<size_t>(i)] += (i % 2 == 0 ? sigma : -sigma);
        return MonthlySeries(0, v);
    };

    for (int i = 0; i < 10000; ++i) {
        double base = base_d(rng), dev = dev_d(rng), sig = sigma_d(rng);
        Demand d = static_cast<Demand>(demand_d(rng));

        double gl = grade_level(window(base + dev, sig), base, d);
        double gf = grade_fluctuation(window(base, sig), sigma_d(rng), d);
        if (gl < 0.0 || gl > 4.0 || gf < 0.0 || gf > 4.0) {
            out = "clamp violated";
            return false;
        }

        double up = grade_level(window(base + std::abs(dev), 0.0), base, Demand::Medium);
        double down = grade_level(window(base - std::abs(dev), 0.0), base, Demand::Medium);
        if (std::abs(up - down) > 1e-9) {
            out = "medium symmetry violated";
            return false;
        }

        double d2 = dev_d(rng);
        double lo_dev = std::min(dev, d2), hi_dev = std::max(dev, d2);
        if (grade_level(window(base + lo_dev, 0.0), base, Demand::High) >
                grade_level(window(base + hi_dev, 0.0), base, Demand::High) + 1e-12 ||
            grade_level(window(base + lo_dev, 0.0), base, Demand::Low) + 1e-12 <
                grade_level(window(base + hi_dev, 0.0), base, Demand::Low)) {
            out = "monotonicity violated";
            return false;
        }

        double warn = base, highest = base + 0.01 + sigma_d(rng);
        FloodParams flood{warn, highest};
        // One-sided limits meet the breakpoint values exactly: the ramp's own
        // formula evaluates to 0 at the warning level and to -4 at the highest.
        double at_warn = grade_flood(window(warn, 0.0), flood);
        double at_highest = grade_flood(window(highest, 0.0), flood);
        double ramp_at_warn = -4.0 * std::sqrt((warn - flood.h_warn) / flood.f_sigma());
        double ramp_at_highest = -4.0 * std::sqrt((highest - flood.h_warn) / flood.f_sigma());
        if (at_warn != ramp_at_warn || std::abs(at_highest - ramp_at_highest) > 1e-12 ||
            at_warn != 0.0 || std::abs(at_highest + 4.0) > 1e-12) {
            out = "flood breakpoint discontinuity";
            return false;
        }
        // Approach from inside the ramp: the gap shrinks like sqrt(eps).
        double eps = 1e-9;
        double above_warn = grade_flood(window(warn + eps, 0.0), flood);
        double below_highest = grade_flood(window(highest - eps, 0.0), flood);
        double ramp_bound = 6.0 * std::sqrt(eps / flood.f_sigma()) + 1e-12;
        if (std::abs(above_warn - at_warn) > ramp_bound ||
            std::abs(below_highest - at_highest) > ramp_bound) {
            out = "flood breakpoint discontinuity";
            return false;
        }
    }
    out = "10000 cases";
    return true;
}

bool annealer_vs_oracle(std::string& out) {
    // Deterministic bumpy 25x25 grid; exhaustive search is the oracle.
    constexpr int kN = 25;
    std::array<double, kN * kN> value{};
    std::mt19937_64 grid_rng(987654321);
    std::uniform_real_distribution<double> noise(0.0, 40.0);
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) {
            double x = (i + 0.5) / kN, y = (j + 0.5) / kN;
            value[static_cast<size_t>(i * kN + j)] =
                60.0 * std::exp(-((x - 0.7) * (x - 0.7) + (y - 0.3) * (y - 0.3)) / 0.05) +
                noise(grid_rng) + 0.5;
        }
    double oracle = *std::max_element(value.begin(), value.end());
    auto objective = [&](const std::vector<double>& v) {
        int i = std::min(kN - 1, std::max(0, static_cast<int>(v[0] * kN)));
        int j = std::min(kN - 1, std::max(0, static_cast<int>(v[1] * kN)));
        return value[static_cast<size_t>(i * kN + j)];
    };

    Bounds box;
    box.lo = {0.0, 0.0};
    box.hi = {1.0, 1.0};
    double worst_ratio = 1.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        AnnealConfig cfg;
        cfg.t0 = 40.0;
        cfg.t_min = 0.05;
        cfg.seed = seed;
        AnnealResult r = anneal(objective, {0.5, 0.5}, box, cfg);
        worst_ratio = std::min(worst_ratio, r.best_score / oracle);
        for (size_t p = 1; p < r.trace.points.size(); ++p)
            if (r.trace.points[p].best < r.trace.points[p - 1].best) {
                out = "best-score trace not monotone";
                return false;
            }
    }
    std::ostringstream os;
    os << "worst best/oracle ratio " << worst_ratio << " over 20 seeds";
    out = os.str();
    return worst_ratio >= 0.95;
}

bool round_trip(std::string& out) {
    double worst = 0.0;
    for (std::uint64_t seed : {20170101ull, 777ull, 31415ull}) {
        SyntheticSpec spec;
        spec.seed = seed;
        SyntheticWorld w = generate_synthetic_scenario(spec);
        Scenario sc =
            assemble_scenario(w.dataset, w.topology, w.coefficients, spec.eval_start, 12);
        Trajectory traj = run_scenario(sc, sc.recorded_controls);
        for (int m = sc.eval_start; m <= sc.eval_start + 12; ++m)
            for (int k = 0; k < kLakeCount; ++k) {
                double expected = sc.level_history[static_cast<size_t>(k)].at_month(m);
                double got = traj.at_month(m).level_m[static_cast<size_t>(k)];
                worst = std::max(worst, std::abs(got - expected) / std::abs(expected));
            }
    }
    std::ostringstream os;
    os << "worst relative level error " << worst;
    out = os.str();
    return worst <= 1e-9;
}

bool mpc_improvement(std::string& out) {
    auto t0 = std::chrono::steady_clock::now();

    Scenario sc = bundled_scenario();
    StakeholderConstraints R =
        load_constraints(source_dir() + "/data/scenario2017/constraints.json");
    R.ontario.reset(); // the comparison grades the five-lake network

    MpcConfig cfg; // defaults: horizon 6, apply 1, stock annealer
    cfg.anneal.seed = 20170101;
    cfg.anneal.trace_stride = 0;
    MpcInputs inputs = make_mpc_inputs(sc, R);
    MpcRunRecord rec = mpc_run(sc.initial, make_truth(sc), inputs, cfg, sc.months);

    Trajectory passthrough = run_scenario(sc, sc.passthrough);

    // Monthly network level grades, mean over lakes, over the realized year.
    auto network_gl = [&](const Trajectory& traj) {
        std::vector<double> gl;
        int hist_n = sc.eval_start - sc.history_start;
        std::array<MonthlySeries, kLakeCount> levels;
        for (int k = 0; k < kLakeCount; ++k) {
            levels[static_cast<size_t>(k)] =
                sc.level_history[static_cast<size_t>(k)].slice(sc.history_start, hist_n);
            for (const LakeState& st : traj.states)
                levels[static_cast<size_t>(k)].push_back(st.level_m[static_cast<size_t>(k)]);
        }
        for (int m = sc.eval_start + 1; m <= sc.eval_start + 12; ++m) {
            double g = 0.0;
            for (int k = 0; k < kLakeCount; ++k) {
                Lake l = static_cast<Lake>(k);
                g += monthly_level_grade(
                         levels[static_cast<size_t>(k)].at_month(m),
                         sc.baselines.for_lake(l)
                             .monthly_mean[static_cast<size_t>(calendar_of(m))],
                         R.lake(l).level) /
                     kLakeCount;
            }
            gl.push_back(g);
        }
        return gl;
    };

    std::vector<double> g_wlpcm = network_gl(rec.realized);
    std::vector<double> g_pass = network_gl(passthrough);
    double mean_w = mean(g_wlpcm), mean_p = mean(g_pass);
    double min_w = *std::min_element(g_wlpcm.begin(), g_wlpcm.end());
    double min_p = *std::min_element(g_pass.begin(), g_pass.end());
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream os;
    os << "mean level grade wlpcm " << mean_w << " vs passthrough " << mean_p << " (ratio "
       << mean_w / mean_p << "), min " << min_w << " vs " << min_p << ", " << seconds << " s";
    out = os.str();
    return mean_w >= 1.2 * mean_p && min_w > min_p && seconds < 60.0;
}

bool perfect_forecast(std::string& out) {
    SyntheticSpec spec;
    spec.noise = 0.0;
    spec.seasonal = 0.0;
    spec.anomaly = 0.0;
    SyntheticWorld w = generate_synthetic_scenario(spec);
    Scenario sc = assemble_scenario(w.dataset, w.topology, w.coefficients, spec.eval_start, 12);
    StakeholderConstraints R;

    MpcConfig cfg;
    cfg.horizon = 4;
    cfg.anneal.alpha = 0.98;
    cfg.anneal.iters_per_temp = 5;
    cfg.anneal.restarts = 2;
    cfg.anneal.trace_stride = 0;
    cfg.anneal.seed = 9;

    MpcRunRecord rec = mpc_run(sc.initial, make_truth(sc), make_mpc_inputs(sc, R), cfg, 6);
    double worst = 0.0;
    for (const MpcStepRecord& s : rec.steps) {
        LakeState before = rec.realized.at_month(s.month);
        Trajectory planned =
            simulate(before, s.plan, s.forecast, sc.topology, sc.coefficients, cfg.horizon);
        for (size_t wi = 0; wi < s.applied.size(); ++wi) {
            const LakeState& realized = s.realized[wi];
            const LakeState& predicted = planned.at_month(realized.month);
            for (int k = 0; k < kLakeCount; ++k)
                worst = std::max(worst,
                                 std::abs(predicted.level_m[static_cast<size_t>(k)] -
                                          realized.level_m[static_cast<size_t>(k)]) /
                                     std::abs(realized.level_m[static_cast<size_t>(k)]));
        }
    }
    std::ostringstream os;
    os << "worst planned/realized relative gap " << worst;
    out = os.str();
    return worst <= 1e-12;
}

bool sensitivity_oracle(std::string& out) {
    // Linear toy: deterministic seasonal world, all-High demands.
    SyntheticSpec spec;
    spec.noise = 0.0;
    spec.anomaly = 0.0;
    spec.seasonal = 0.3;
    SyntheticWorld w = generate_synthetic_scenario(spec);
    Scenario sc = assemble_scenario(w.dataset, w.topology, w.coefficients, spec.eval_start, 12);
    StakeholderConstraints R;
    for (auto& d : R.lakes) {
        d.level = Demand::High;
        d.fluctuation = Demand::High;
    }

    // Analytic slopes from the affine level response.
    const double probe = 0.05;
    Scenario plus = apply_perturbation(sc, {PerturbationKind::Precipitation, probe}, Sign::Plus);
    Trajectory base = run_scenario(sc);
    Trajectory up = run_scenario(plus, plus.controls);
    std::vector<double> slopes;
    for (int k = 0; k < kLakeCount; ++k) {
        Lake l = static_cast<Lake>(k);
        std::vector<double> u, v;
        for (int m = sc.eval_start + 1; m <= sc.eval_start + 12; ++m) {
            u.push_back(base.at_month(m).level(l));
            v.push_back((up.at_month(m).level(l) - u.back()) / probe);
        }
        double ubar = mean(u), vbar = mean(v);
        slopes.push_back(9.0 * vbar);
        double sigma0 = population_stddev(u), cov = 0.0;
        for (size_t i = 0; i < u.size(); ++i)
            cov += (u[i] - ubar) * (v[i] - vbar);
        cov /= static_cast<double>(u.size());
        slopes.push_back(12.0 * cov / sigma0);
    }
    double ss = 0.0;
    for (double s : slopes)
        ss += s * s;
    double expected = std::sqrt(ss / static_cast<double>(slopes.size()));

    double got = sensitivity_index(sc, R, {PerturbationKind::Precipitation, 1e-3});
    double gap = std::abs(got - expected);

    // Zero-effect perturbation scores exactly zero.
    Scenario zero = sc;
    for (int k = 0; k < kLakeCount; ++k)
        for (int i = 0; i < zero.truth_indicators.lake[static_cast<size_t>(k)].size(); ++i)
            zero.truth_indicators.lake[static_cast<size_t>(k)][i] = 0.0;
    StakeholderConstraints medium;
    double s_zero = sensitivity_index(zero, medium, {PerturbationKind::Precipitation, 0.03});

    // Report total equals the component sum.
    SensitivityConfig cfg;
    cfg.perturbations = {{PerturbationKind::Precipitation, 0.03, River::StMarys},
                         {PerturbationKind::IceClog, 210.0, River::StMarys},
                         {PerturbationKind::SnowPack, 0.05, River::StMarys}};
    SensitivityReport rep = run_sensitivity(sc, R, cfg);
    bool additive = rep.total == *rep.s_rain + *rep.s_ice + *rep.s_snow;

    std::ostringstream os;
    os << "slope gap " << gap << " (analytic " << expected << "), zero-effect " << s_zero
       << ", additive " << (additive ? "yes" : "no");
    out = os.str();
    return gap <= 1e-3 && s_zero == 0.0 && additive;
}

bool determinism(std::string& out) {
    std::string scen = source_dir() + "/data/scenario2017";
    std::string dir = fresh_dir("determinism");
    std::string config = dir + "/run.json";
    write_file(config, std::string(R"({
      "scenario": {"data": ")") + scen + R"(/data.csv",
                   "topology": ")" + scen + R"(/topology.json",
                   "coefficients": ")" + scen + R"(/coefficients.json",
                   "eval_start": "2017-01", "months": 12},
      "constraints": ")" + scen + R"(/constraints.json",
      "mode": "basic",
      "anneal": {"alpha": 0.98, "iters_per_temp": 5, "restarts": 3, "trace_stride": 0},
      "mpc": {"horizon": 4, "apply_window": 1},
      "sensitivity": {"perturbations": [{"kind": "precipitation", "delta": 0.03},
                                        {"kind": "snow_pack", "delta": 0.05}],
                      "dams": [{"edge": "e", "delta": 100.0}]}
    })");

    // Each command runs twice into the same out path (identical manifest);
    // every produced file must be byte-identical.
    Dataset fit_ds = generate_fit_dataset(parse_year_month("2009-01"), 132, 50.0, 1);
    write_file(dir + "/fitdata.csv", detail::dataset_csv(fit_ds));

    struct Cmd {
        std::string name;
        std::string data;
        std::vector<std::string> files;
    };
    std::vector<Cmd> commands = {
        {"fit", dir + "/fitdata.csv", {"coefficients.json"}},
        {"optimize", "", {"grade.json", "plan.csv"}},
        {"mpc", "", {"mpc_record.json", "mpc_record.csv", "summary.json", "rivers.csv"}},
        {"sensitivity", "", {"sensitivity.json"}},
    };

    for (const Cmd& cmd : commands) {
        std::string cmd_out = dir + "/out_" + cmd.name;
        CliOptions opt;
        opt.config = config;
        opt.data = cmd.data;
        opt.out = cmd_out;
        opt.seed = 424242;

        std::filesystem::remove_all(cmd_out);
        if (run_command(cmd.name, opt) != kExitOk) {
            out = cmd.name + " first run failed";
            return false;
        }
        std::map<std::string, std::string> first;
        for (const std::string& f : cmd.files)
            first[f] = read_file(cmd_out + "/" + f);

        std::filesystem::remove_all(cmd_out);
        if (run_command(cmd.name, opt) != kExitOk) {
            out = cmd.name + " second run failed";
            return false;
        }
        for (const std::string& f : cmd.files)
            if (read_file(cmd_out + "/" + f) != first[f]) {
                out = cmd.name + ": " + f + " differs between identical runs";
                return false;
            }
    }
    out = "fit, optimize, mpc, sensitivity reports byte-identical across reruns";
    return true;
}

} // namespace

int main() {
    criterion("coefficient recovery: slopes and intercepts within 2% in under 1 s",
              coefficient_recovery);
    criterion("conservation: 1000 random transitions balance to 1e-9", conservation_suite);
    criterion("delay causality: bit-identical prefix, one-month cascade per edge",
              delay_causality);
    criterion("grading: clamps, symmetry, flood continuity, monotonicity over 10000 cases",
              grading_suite);
    criterion("annealer: at least 95% of the exhaustive grid optimum across 20 seeds",
              annealer_vs_oracle);
    criterion("round trip: extracted indicators reproduce recorded levels to 1e-9", round_trip);
    criterion("mpc improvement: mean monthly level grade at least 20% over passthrough, higher "
              "minimum, "
              "under 60 s",
              mpc_improvement);
    criterion("perfect forecast: planned and realized trajectories match to 1e-12",
              perfect_forecast);
    criterion("sensitivity: analytic slope within 1e-3, exact zero for untouched inputs, "
              "additive total",
              sensitivity_oracle);
    criterion("determinism: identical manifests produce byte-identical reports", determinism);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
