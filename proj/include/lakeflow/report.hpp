#ifndef LAKEFLOW_REPORT_HPP
#define LAKEFLOW_REPORT_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lakeflow/core.hpp"

namespace lakeflow {

inline constexpr const char* kToolVersion = "0.1.0";

// ============================================================================
// Content hashing (FNV-1a 64)
// ============================================================================

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot open input '" + path + "' for hashing");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

// ============================================================================
// Run manifest
// ============================================================================

// Every report embeds one of these so a run can be reproduced byte for byte.
struct RunManifest {
    std::string command;
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    std::string config_path;
    std::string out_dir;
    std::vector<std::pair<std::string, std::string>> inputs; // (path, content hash)

    void add_input(const std::string& path) {
        if (!path.empty())
            inputs.emplace_back(path, hash_file(path));
    }
};

inline nlohmann::json to_json(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["version"] = m.version;
    j["seed"] = m.seed;
    j["config"] = m.config_path;
    j["out_dir"] = m.out_dir;
    j["inputs"] = nlohmann::json::array();
    for (const auto& [path, hash] : m.inputs)
        j["inputs"].push_back({{"path", path}, {"hash", hash}});
    return j;
}

// ============================================================================
// Deterministic file output
// ============================================================================

// Shortest round-trip decimal form; stable across runs on one platform.
inline std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw Error("short write to '" + path + "'");
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// Re-reads a written report and checks its own minimal schema; commands exit
// zero only when this passes.
inline bool validate_report(const std::string& path, const std::string& expected_command) {
    std::ifstream in(path);
    if (!in)
        return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (!j.contains("manifest"))
        return false;
    const auto& m = j.at("manifest");
    return m.value("command", "") == expected_command && m.contains("seed") &&
           m.contains("inputs") && m.contains("version");
}

} // namespace lakeflow

#endif // LAKEFLOW_REPORT_HPP
