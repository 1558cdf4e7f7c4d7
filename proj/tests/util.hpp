#pragma once

#include "zetalab/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string config_path(const std::string& name)
{
    return std::string(ZETALAB_SOURCE_DIR) + "/configs/" + name + ".cfg";
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline zetalab::CurveModel load_curve(const std::string& name)
{
    return zetalab::parse_curve(read_file(config_path(name)));
}

// memoized analyses of the five reference curves; depth covers every test
inline const zetalab::CurveAnalysis& analysis(const std::string& name)
{
    static std::map<std::string, zetalab::CurveAnalysis> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    int depth = 8;
    if (name == "p1_f2") depth = 12;
    if (name == "e_f2") depth = 10;
    auto a = zetalab::analyze_curve(load_curve(name), depth, "");
    return cache.emplace(name, std::move(a)).first->second;
}

inline const std::vector<std::string>& curve_names()
{
    static std::vector<std::string> names = {"p1_f2", "p1_f3", "e_f2", "e_f3", "h_f5"};
    return names;
}

struct CommandResult {
    int exit_code = -1;
    std::string out, err;
};

inline CommandResult run_cli(const std::string& args)
{
    static int counter = 0;
    std::string base = "cli_capture_" + std::to_string(counter++);
    std::string out_file = base + ".out", err_file = base + ".err";
    std::string cmd =
        std::string(ZETALAB_CLI_PATH) + " " + args + " > " + out_file + " 2> " + err_file;
    int rc = std::system(cmd.c_str());
    CommandResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    {
        std::ifstream in(out_file);
        std::ostringstream os;
        os << in.rdbuf();
        r.out = os.str();
    }
    {
        std::ifstream in(err_file);
        std::ostringstream os;
        os << in.rdbuf();
        r.err = os.str();
    }
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

// Minimal structural validator for the subset of JSON Schema the report
// schema uses: type, required, properties, items, enum.
inline bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                            std::string* why = nullptr)
{
    auto complain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return complain("expected object");
        if (t == "array" && !value.is_array()) return complain("expected array");
        if (t == "string" && !value.is_string()) return complain("expected string");
        if (t == "integer" && !value.is_number_integer()) return complain("expected integer");
        if (t == "number" && !value.is_number()) return complain("expected number");
        if (t == "boolean" && !value.is_boolean()) return complain("expected boolean");
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& v : schema["enum"])
            if (v == value) hit = true;
        if (!hit) return complain("value not in enum");
    }
    if (schema.contains("required") && value.is_object())
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                return complain("missing required key " + key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key))
                if (!validate_schema(value.at(key), sub, why)) {
                    if (why) *why = key + ": " + *why;
                    return false;
                }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate_schema(item, schema["items"], why)) return false;
    return true;
}

} // namespace testutil
