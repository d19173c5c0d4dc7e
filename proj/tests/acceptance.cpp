#include "voaforge/acceptance.hpp"

#include <cstdio>
#include <cstring>

using namespace voaforge;

int main(int argc, char** argv) {
    SuiteOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opts.profile = Profile::Quick;
    SuiteResult res = run_suite(opts);
    for (const auto& c : res.criteria) {
        std::printf("[%s] %2d. %-28s %8.3f s (budget %3.0f s)", verdict_str(c.verdict()).c_str(), c.id, c.title.c_str(),
                    c.seconds, c.budget);
        if (c.verdict() != Verdict::Pass) std::printf("  %s", c.report.first_problem().c_str());
        std::printf("\n");
    }
    std::printf("acceptance (%s): %s in %.3f s\n", profile_name(res.profile).c_str(), verdict_str(res.verdict()).c_str(),
                res.seconds);
    return exit_code(res.verdict());
}
