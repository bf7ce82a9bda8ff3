#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace ordlift {

/// Structured pass/fail output shared by all verification routines.
struct Check {
    std::string id;
    bool pass = false;
    nlohmann::json details;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string id, bool ok, nlohmann::json details = nullptr, double ms = 0.0) {
        checks.push_back({std::move(id), ok, std::move(details), ms});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.id : prefix + "." + c.id, c.pass, c.details, c.elapsed_ms});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["pass"] = pass();
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj;
            cj["id"] = c.id;
            cj["pass"] = c.pass;
            cj["details"] = c.details;
            if (c.elapsed_ms > 0) cj["elapsed_ms"] = c.elapsed_ms;
            j["checks"].push_back(cj);
        }
        return j;
    }
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

} // namespace ordlift
