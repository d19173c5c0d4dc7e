#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace voaforge {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_str(Verdict v);

struct ReportEntry {
    std::string item;
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

/** Outcome of one verification, with one entry per checked item. */
struct Report {
    std::string name;
    std::vector<ReportEntry> entries;
    json data = json::object();

    void add(std::string item, bool ok, std::string detail = {});
    void add_inconclusive(std::string item, std::string detail);
    void merge(const Report& o, const std::string& prefix = {});
    Verdict verdict() const;
    bool passed() const { return verdict() == Verdict::Pass; }
    /** First failing (or inconclusive) entry, for short summaries. */
    std::string first_problem() const;
    json to_json() const;
};

} // namespace voaforge
