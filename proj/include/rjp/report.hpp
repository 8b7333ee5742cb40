#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace rjp {

/// Outcome of one named check. "discrepancy" marks a registered identity
/// whose printed form differs from the computed one; the corrected value is
/// carried in `detail` and the run only fails on it under --strict.
enum class Status { Pass, Fail, Discrepancy };

struct Check {
    std::string id;     // stable identifier, e.g. "comm.vny"
    std::string ref;    // registry label, e.g. "(2.5) v^n y"
    std::string params; // instantiated parameters, e.g. "p=3 n=4"
    Status status = Status::Pass;
    std::string detail;
};

struct Report {
    std::string suite;
    unsigned p = 0;
    std::string params;
    std::vector<Check> checks;

    size_t count(Status s) const {
        size_t n = 0;
        for (auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool ok(bool strict) const {
        if (count(Status::Fail)) return false;
        return !strict || count(Status::Discrepancy) == 0;
    }
    void add(std::string id, std::string ref, std::string params_, Status st, std::string detail = "") {
        checks.push_back({std::move(id), std::move(ref), std::move(params_), st, std::move(detail)});
    }
    void merge(const Report& o) {
        for (auto& c : o.checks) checks.push_back(c);
    }

    nlohmann::json json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["p"] = p;
        j["params"] = params;
        j["checks"] = nlohmann::json::array();
        for (auto& c : checks) {
            nlohmann::json e;
            e["id"] = c.id;
            e["ref"] = c.ref;
            e["params"] = c.params;
            e["status"] = c.status == Status::Pass ? "pass" : c.status == Status::Fail ? "fail" : "paper-discrepancy";
            e["detail"] = c.detail;
            j["checks"].push_back(e);
        }
        j["summary"] = {{"pass", count(Status::Pass)},
                        {"fail", count(Status::Fail)},
                        {"paper-discrepancy", count(Status::Discrepancy)}};
        return j;
    }

    std::string text() const {
        std::string out;
        out += "suite: " + suite + " (p=" + std::to_string(p);
        if (!params.empty()) out += ", " + params;
        out += ")\n";
        size_t idw = 4, refw = 5;
        for (auto& c : checks) {
            idw = std::max(idw, c.id.size());
            refw = std::max(refw, c.ref.size());
        }
        for (auto& c : checks) {
            std::string st = c.status == Status::Pass ? "pass" : c.status == Status::Fail ? "FAIL" : "paper-discrepancy";
            out += "  " + c.id + std::string(idw - c.id.size() + 2, ' ') + c.ref +
                   std::string(refw - c.ref.size() + 2, ' ') + (c.params.empty() ? "-" : c.params) + "  " + st;
            if (!c.detail.empty() && c.status != Status::Pass) out += "\n      " + c.detail;
            out += "\n";
        }
        out += "  summary: " + std::to_string(count(Status::Pass)) + " pass, " + std::to_string(count(Status::Fail)) +
               " fail, " + std::to_string(count(Status::Discrepancy)) + " paper-discrepancy\n";
        return out;
    }
};

} // namespace rjp
