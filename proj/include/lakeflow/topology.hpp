#ifndef LAKEFLOW_TOPOLOGY_HPP
#define LAKEFLOW_TOPOLOGY_HPP

#include <array>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "lakeflow/core.hpp"

namespace lakeflow {

struct LakeGeometry {
    double area_m2 = 0.0;        // surface area converting volume change to level change
    double initial_level_m = 0.0;
};

struct EdgeSpec {
    River id = River::StMarys;
    Lake from = Lake::Superior;
    // Destination lake for a..d; e drains to the Montreal junction.
    std::optional<Lake> to;
    int delay_months = 1;
    bool controllable = false;
    double min_flow = 0.0; // m³/s
    double max_flow = 0.0; // m³/s, meaningful for controllable edges
};

/**
 * The five-lake / five-river chain. The wiring is fixed by construction
 * (a: A->B, b: B->C, c: C->D, d: D->E, e: E->Montreal; a and e controllable);
 * areas, initial levels, bounds and the month length vary per scenario.
 */
struct NetworkTopology {
    std::array<LakeGeometry, kLakeCount> lakes{};
    std::array<EdgeSpec, kChainRiverCount> edges{};
    double month_days = kDefaultMonthDays;

    double month_seconds() const { return lakeflow::month_seconds(month_days); }

    const LakeGeometry& lake(Lake l) const { return lakes[static_cast<size_t>(index(l))]; }
    const EdgeSpec& edge(River r) const { return edges[static_cast<size_t>(index(r))]; }
    EdgeSpec& edge(River r) { return edges[static_cast<size_t>(index(r))]; }

    void validate() const {
        for (Lake l : kLakes) {
            if (!(lake(l).area_m2 > 0.0))
                throw DomainError("lake " + std::string(lake_id(l)) + ": area must be positive");
            if (!std::isfinite(lake(l).initial_level_m))
                throw DomainError("lake " + std::string(lake_id(l)) + ": non-finite initial level");
        }
        for (int i = 0; i < kChainRiverCount; ++i) {
            const EdgeSpec& e = edges[static_cast<size_t>(i)];
            if (index(e.id) != i)
                throw DomainError("edge list out of order");
            if (e.delay_months != 1)
                throw DomainError("edge delays must be exactly one month");
            if (index(e.from) != i)
                throw DomainError("edge " + std::string(river_id(e.id)) + ": wrong source lake");
            bool terminal = (e.id == River::StLawrence);
            if (terminal != !e.to.has_value())
                throw DomainError("only edge e drains to the Montreal junction");
            if (!terminal && index(*e.to) != i + 1)
                throw DomainError("edge " + std::string(river_id(e.id)) + ": wrong destination lake");
            bool should_control = (e.id == River::StMarys || e.id == River::StLawrence);
            if (e.controllable != should_control)
                throw DomainError("controllable edges must be exactly {a, e}");
            if (e.min_flow < 0.0)
                throw DomainError("edge " + std::string(river_id(e.id)) + ": negative flow bound");
            if (e.controllable && !(e.min_flow < e.max_flow))
                throw DomainError("edge " + std::string(river_id(e.id)) + ": bounds need min < max");
        }
        if (!(month_days > 0.0))
            throw DomainError("month length must be positive");
    }

    // Real-geography constants; bounds on a and e are placeholders that
    // scenarios normally replace with 0.5x..1.5x of their historical means.
    static NetworkTopology defaults() {
        NetworkTopology t;
        t.lakes = {{
            {8.21e10, 183.40},  // Superior
            {1.174e11, 176.40}, // Michigan-Huron
            {1.114e9, 175.00},  // St. Clair
            {2.57e10, 174.10},  // Erie
            {1.896e10, 74.80},  // Ontario
        }};
        t.edges = {{
            {River::StMarys, Lake::Superior, Lake::MichiganHuron, 1, true, 1200.0, 3800.0},
            {River::StClair, Lake::MichiganHuron, Lake::StClair, 1, false, 0.0, 0.0},
            {River::Detroit, Lake::StClair, Lake::Erie, 1, false, 0.0, 0.0},
            {River::Niagara, Lake::Erie, Lake::Ontario, 1, false, 0.0, 0.0},
            {River::StLawrence, Lake::Ontario, std::nullopt, 1, true, 3500.0, 10500.0},
        }};
        return t;
    }
};

// ----------------------------------------------------------------------------
// JSON config I/O
// ----------------------------------------------------------------------------

inline Lake lake_from_id(const std::string& id) {
    for (Lake l : kLakes)
        if (lake_id(l) == id)
            return l;
    throw SchemaError("unknown lake id '" + id + "'");
}

inline River river_from_id(const std::string& id) {
    for (int i = 0; i < kRiverCount; ++i)
        if (river_id(static_cast<River>(i)) == id)
            return static_cast<River>(i);
    throw SchemaError("unknown river id '" + id + "'");
}

inline nlohmann::json to_json(const NetworkTopology& t) {
    nlohmann::json j;
    j["month_days"] = t.month_days;
    for (Lake l : kLakes) {
        j["lakes"].push_back({{"id", std::string(lake_id(l))},
                              {"name", std::string(lake_name(l))},
                              {"area_m2", t.lake(l).area_m2},
                              {"initial_level_m", t.lake(l).initial_level_m}});
    }
    for (const EdgeSpec& e : t.edges) {
        nlohmann::json je = {{"id", std::string(river_id(e.id))},
                             {"from", std::string(lake_id(e.from))},
                             {"to", e.to ? std::string(lake_id(*e.to)) : std::string("montreal")},
                             {"delay_months", e.delay_months},
                             {"controllable", e.controllable},
                             {"min_flow", e.min_flow},
                             {"max_flow", e.max_flow}};
        j["edges"].push_back(je);
    }
    return j;
}

inline NetworkTopology topology_from_json(const nlohmann::json& j) {
    NetworkTopology t = NetworkTopology::defaults();
    try {
        if (j.contains("month_days"))
            t.month_days = j.at("month_days").get<double>();
        for (const auto& jl : j.at("lakes")) {
            Lake l = lake_from_id(jl.at("id").get<std::string>());
            t.lakes[static_cast<size_t>(index(l))].area_m2 = jl.at("area_m2").get<double>();
            t.lakes[static_cast<size_t>(index(l))].initial_level_m =
                jl.at("initial_level_m").get<double>();
        }
        for (const auto& je : j.at("edges")) {
            River r = river_from_id(je.at("id").get<std::string>());
            if (r == River::Ottawa)
                throw SchemaError("the Ottawa is not a chain edge");
            EdgeSpec& e = t.edge(r);
            if (je.contains("delay_months"))
                e.delay_months = je.at("delay_months").get<int>();
            if (je.contains("controllable"))
                e.controllable = je.at("controllable").get<bool>();
            e.min_flow = je.value("min_flow", 0.0);
            e.max_flow = je.value("max_flow", 0.0);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("topology config: ") + ex.what());
    }
    t.validate();
    return t;
}

inline NetworkTopology load_topology(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open topology config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError("topology config '" + path + "': " + ex.what());
    }
    return topology_from_json(j);
}

} // namespace lakeflow

#endif // LAKEFLOW_TOPOLOGY_HPP
