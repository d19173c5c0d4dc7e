#include "voaforge/report.hpp"

namespace voaforge {

std::string verdict_str(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

void Report::add(std::string item, bool ok, std::string detail) {
    entries.push_back({std::move(item), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
}

void Report::add_inconclusive(std::string item, std::string detail) {
    entries.push_back({std::move(item), Verdict::Inconclusive, std::move(detail)});
}

void Report::merge(const Report& o, const std::string& prefix) {
    for (const auto& e : o.entries) entries.push_back({prefix + e.item, e.verdict, e.detail});
}

Verdict Report::verdict() const {
    bool inconclusive = false;
    for (const auto& e : entries) {
        if (e.verdict == Verdict::Fail) return Verdict::Fail;
        if (e.verdict == Verdict::Inconclusive) inconclusive = true;
    }
    return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

std::string Report::first_problem() const {
    for (const auto& e : entries)
        if (e.verdict == Verdict::Fail) return e.item + (e.detail.empty() ? "" : ": " + e.detail);
    for (const auto& e : entries)
        if (e.verdict == Verdict::Inconclusive) return e.item + (e.detail.empty() ? "" : ": " + e.detail);
    return {};
}

json Report::to_json() const {
    json j;
    j["name"] = name;
    j["verdict"] = verdict_str(verdict());
    json list = json::array();
    for (const auto& e : entries) {
        json je;
        je["item"] = e.item;
        je["verdict"] = verdict_str(e.verdict);
        if (!e.detail.empty()) je["detail"] = e.detail;
        list.push_back(je);
    }
    j["entries"] = list;
    if (!data.empty()) j["data"] = data;
    return j;
}

} // namespace voaforge
