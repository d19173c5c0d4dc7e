#pragma once

#include "voaforge/report.hpp"

#include <string>
#include <vector>

namespace voaforge {

/** quick: p <= 2 and q-order <= 3; full: every parameter of the criterion list. */
enum class Profile { Quick, Full };

Profile profile_from_string(const std::string& s);
std::string profile_name(Profile p);

struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    double seconds = 0;
    double budget = 0;

    Verdict verdict() const { return report.verdict(); }
};

struct SuiteOptions {
    Profile profile = Profile::Full;
    /** Flip the lattice cocycle sign for the whole run. */
    bool inject_cocycle_fault = false;
    /** Restrict to these criterion ids; empty means all ten. */
    std::vector<int> only;
};

struct SuiteResult {
    Profile profile = Profile::Full;
    std::vector<CriterionResult> criteria;
    double seconds = 0;

    Verdict verdict() const;
    json to_json() const;
};

int criterion_count();
std::string criterion_title(int id);
/** Runtime budget in seconds. */
double criterion_budget(int id);

/** Runs one criterion; the runtime budget is recorded as an entry of the report. */
CriterionResult run_criterion(int id, Profile profile);
SuiteResult run_suite(const SuiteOptions& opts);

/** 0 pass, 1 fail, 3 inconclusive. */
int exit_code(Verdict v);

} // namespace voaforge
