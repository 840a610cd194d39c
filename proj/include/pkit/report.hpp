#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pkit {

// Outcome of checking one identity over a finite set of instances.
struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string rel) : relation(std::move(rel)) {}

    std::string relation;
    long long checked = 0;
    long long failed = 0;
    std::vector<nlohmann::json> failures;  // first few counterexamples

    bool ok() const { return failed == 0; }
    void pass() { ++checked; }
    void fail(nlohmann::json counterexample);
    void expect(bool cond, const nlohmann::json& counterexample)
    {
        if (cond)
            pass();
        else
            fail(counterexample);
    }
    nlohmann::json to_json() const;
};

inline constexpr size_t kMaxStoredFailures = 10;

bool all_ok(const std::vector<CheckReport>& reports);

}  // namespace pkit
