#include "voaforge/acceptance.hpp"
#include "voaforge/lattice.hpp"
#include "voaforge/parser.hpp"
#include "voaforge/realizations.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <random>
#include <sys/wait.h>

using namespace voaforge;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(VOA_FORGE_BIN) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    int raw = pclose(pipe.release());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

FockState random_state(std::mt19937& g, const SpacePtr& sp) {
    std::uniform_int_distribution<int> gen(0, static_cast<int>(sp->dim()) - 1), depth(1, 3), count(0, 3), mom(-2, 2),
        num(-9, 9), den(1, 4);
    FockState out(sp);
    for (int t = 0; t < 3; ++t) {
        RatVec m = sp->zero();
        for (auto& x : m) x = Rat(mom(g), den(g));
        FockState s = FockState::exp(sp, m);
        for (int k = count(g); k > 0; --k) s = s.create(gen(g), depth(g));
        out += Rat(num(g), den(g)) * s;
    }
    return out;
}

} // namespace

TEST_CASE("parsing the documented examples") {
    auto pi0 = spaces::pi0_lattice(2);
    CHECK(parse_expr("e^{u+v}", pi0, true) == fms_beta(2));
    auto h = spaces::heisenberg_alpha();
    CHECK(parse_expr("alpha[-1] alpha[-1] e^{0}", h) == FockState::vacuum(h).create(0, 1).create(0, 1));
    CHECK_THROWS_WITH_AS(parse_expr("e^{u+w}", pi0), doctest::Contains("unknown generator w"), ParseError);
    CHECK(parse_expr("sqrtp*alpha[-1]", pi0) == FockState::vacuum(pi0).create(2, 1));
    CHECK(parse_vector("(u+v)/2 - 1/2*A", pi0) == RatVec{Rat(1, 2), Rat(1, 2), Rat(-1, 2)});
    CHECK(parse_vector("0", pi0) == pi0->zero());
    CHECK(parse_expr("T(e^{u+v})", pi0) == translate(fms_beta(2)));
    CHECK(parse_expr("(e^{u+v}) (e^{-u-v})", pi0) ==
          nth_product(fms_beta(2), -1, FockState::exp(pi0, {Rat(-1), Rat(-1), Rat(0)})));
}

TEST_CASE("parse errors carry positions") {
    auto pi0 = spaces::pi0_lattice(2);
    try {
        parse_expr("u[-1] +\n  v[-1", pi0);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 7);
    }
    try {
        parse_expr("u[-1] $", pi0);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.token == "$");
        CHECK(e.column == 7);
    }
    CHECK_THROWS_WITH_AS(parse_expr("e^{u/2}", pi0, true), doctest::Contains("non-lattice momentum"), MathError);
    CHECK_NOTHROW(parse_expr("e^{u/2}", pi0, false));
}

TEST_CASE("print and parse are inverse") {
    std::mt19937 g(21);
    for (auto sp : {spaces::pi0_lattice(2), spaces::super_xaa(), spaces::heisenberg_alpha()}) {
        for (int i = 0; i < 100; ++i) {
            FockState s = random_state(g, sp);
            CHECK(parse_expr(print_state(s), sp) == s);
        }
    }
    for (const auto& name : realization_names()) {
        const long p = name == "m2" || name == "p1" ? 1 : 2;
        for (const auto& [gen, s] : build(name, p).images) CHECK(parse_expr(print_state(s), s.space()) == s);
    }
}

TEST_CASE("state JSON") {
    json j = state_json(fms_beta(2));
    CHECK(j["text"] == "e^{u+v}");
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["coeff"] == "1/1");
    CHECK(j["terms"][0]["momentum"] == json::array({"1/1", "1/1", "0/1"}));
}

TEST_CASE("command line exit codes") {
    CHECK(run("realization --name wakimoto --p 2 --verify").status == 0);
    Run j = run("--out json c2 --p 1 --check casimir");
    CHECK(j.status == 0);
    CHECK(json::parse(j.out)["verdict"] == "PASS");
    CHECK(run("check --identity p1-decomposition --order 4 --window -8:8 --perturb").status == 1);
    CHECK(run("qgroup --variant a --p 3 --check fg-inverse --max-steps 3").status == 3);
    CHECK(run("qgroup --variant a --p 1").status == 2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("kernel --p 2 --window 4").status == 2);
    Run bad = run("ope e^{u+w} u[-1]");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("unknown generator w") != std::string::npos);
    Run ope = run("ope --realization wakimoto e f --p 2");
    CHECK(ope.status == 0);
    CHECK(ope.out.find("(z-w)^-2: -3/2") != std::string::npos);
}

TEST_CASE("acceptance runner") {
    SuiteOptions quick;
    quick.profile = Profile::Quick;
    quick.only = {1, 4, 10};
    SuiteResult r = run_suite(quick);
    CHECK(r.criteria.size() == 3);
    CHECK(r.verdict() == Verdict::Pass);
    CHECK(r.to_json()["criteria"][1]["id"] == 4);

    Run fault = run("suite --inject-cocycle-fault --only 1");
    CHECK(fault.status == 1);
    CHECK(fault.out.find("wakimoto") != std::string::npos);
    CHECK_FALSE(cocycle_fault());
}
