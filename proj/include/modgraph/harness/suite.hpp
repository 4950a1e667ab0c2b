#pragma once

#include "../error.hpp"
#include "checks.hpp"
#include "family.hpp"
#include "instance.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace modgraph {

struct SuiteOptions {
    SizeGuard guard{};
    /// Count report-mode counterexamples as failures too.
    bool findings_fail = false;
};

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t findings = 0;
    std::size_t not_applicable = 0;
};

struct CheckReport {
    std::string suite;
    std::string family;
    std::vector<CheckResult> results;
    SuiteSummary summary;

    bool passed() const { return summary.fail == 0; }

    std::vector<const CheckResult*> counterexamples() const
    {
        std::vector<const CheckResult*> out;
        for (const auto& r : results)
            if (r.verdict == Verdict::fail)
                out.push_back(&r);
        return out;
    }
};

/// "strict", "report", "all", or a comma-separated list of ids ("C6,D6").
inline std::vector<std::string> select_checks(std::string_view selection)
{
    std::vector<std::string> ids;
    if (selection == "strict" || selection == "report" || selection == "all") {
        for (const auto& c : list_checks())
            if (selection == "all" || to_string(c.mode) == selection)
                ids.push_back(c.id);
        return ids;
    }
    for (auto part : detail::split(selection, ','))
        ids.push_back(find_check(part).id);
    return ids;
}

/// Runs every (instance, check) pair, instances in family order and checks
/// in the given order. Instances are built one at a time.
inline CheckReport run_suite(std::string_view family, const std::vector<std::string>& ids,
                             const SuiteOptions& options = {}, std::string suite_name = "custom")
{
    std::vector<const Check*> selected;
    for (const auto& id : ids)
        selected.push_back(&find_check(id));

    CheckReport report;
    report.suite = std::move(suite_name);
    report.family = std::string(family);
    for (const auto& module : parse_family(family)) {
        const Instance instance(module, options.guard);
        for (const Check* check : selected) {
            CheckResult r = run_check(*check, instance);
            switch (r.verdict) {
            case Verdict::pass: ++report.summary.pass; break;
            case Verdict::not_applicable: ++report.summary.not_applicable; break;
            case Verdict::fail:
                if (r.mode == CheckMode::report) {
                    ++report.summary.findings;
                    if (options.findings_fail)
                        ++report.summary.fail;
                } else {
                    ++report.summary.fail;
                }
                break;
            }
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

inline nlohmann::ordered_json result_json(const CheckResult& r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["mode"] = std::string(to_string(r.mode));
    j["instance"] = r.instance;
    j["verdict"] = std::string(to_string(r.verdict));
    nlohmann::ordered_json witness;
    witness["submodules"] = nlohmann::ordered_json::array();
    for (const auto& w : r.submodules) {
        nlohmann::ordered_json item;
        item["label"] = w.label;
        item["order"] = w.order;
        item["generators"] = w.generators;
        witness["submodules"].push_back(std::move(item));
    }
    witness["ideals"] = r.ideals;
    witness["detail"] = r.detail;
    j["witness"] = std::move(witness);
    j["millis"] = include_timing ? nlohmann::ordered_json(r.millis) : nlohmann::ordered_json(nullptr);
    return j;
}

/// Report document. Timings are written as null unless requested so that
/// identical runs give identical bytes.
inline nlohmann::ordered_json report_json(const CheckReport& report, bool include_timing = false)
{
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["family"] = report.family;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results)
        doc["results"].push_back(result_json(r, include_timing));
    doc["summary"] = {{"pass", report.summary.pass},
                      {"fail", report.summary.fail},
                      {"findings", report.summary.findings},
                      {"not_applicable", report.summary.not_applicable}};
    return doc;
}

} // namespace modgraph
