#include "pkit/report.hpp"

namespace pkit {

void CheckReport::fail(nlohmann::json counterexample)
{
    ++checked;
    ++failed;
    if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(counterexample));
}

nlohmann::json CheckReport::to_json() const
{
    return {{"relation", relation}, {"checked", checked}, {"failed", failed}, {"failures", failures}};
}

bool all_ok(const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

}  // namespace pkit
