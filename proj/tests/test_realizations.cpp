#include "voaforge/lattice.hpp"
#include "voaforge/realizations.hpp"

#include <doctest.h>

#include <random>

using namespace voaforge;

TEST_CASE("named images") {
    auto pi0 = spaces::pi0_lattice(2);
    Realization w = build("wakimoto", 2);
    CHECK(w.at("e") == FockState::exp(pi0, {Rat(1), Rat(1), Rat(0)}));
    CHECK(fms_beta(2) == w.at("e"));
    CHECK_THROWS_AS(w.at("nothing"), MathError);
    CHECK_THROWS_AS(build("nothing", 2), MathError);

    auto su = spaces::singlet_u();
    FockState vac = FockState::vacuum(su);
    FockState W = Rat(1, 3) * vac.create(0, 1).create(0, 1).create(0, 1) + Rat(1, 2) * vac.create(0, 2).create(0, 1) +
                  Rat(1, 6) * vac.create(0, 3);
    CHECK(build("m2", 1).at("W") == W);

    for (long p = 1; p <= 3; ++p) {
        FockState x00 = strong_generator(0, 0, p);
        CHECK(x00 == FockState::exp(spaces::pi0_lattice(p), {Rat(0), Rat(0), Rat(-1)}));
        CHECK(conf_weight(x00, build("wakimoto", p).at("L")) == Rat(2 * p));
    }
}

TEST_CASE("embeddings verify") {
    for (long p = 1; p <= 3; ++p) {
        Report r = verify_embedding(build("wakimoto", p));
        CHECK_MESSAGE(r.passed(), r.first_problem());
        CHECK(r.data["level"] == level(p).json());
        CHECK(verify_embedding(build("fms", p)).passed());
        CHECK(verify_embedding(build("phi", p)).passed());
        Report om = verify_embedding(build("omega", p));
        CHECK(om.passed());
        CHECK(om.data["central_charge"] == (Rat(1) - Rat(6 * (p - 1) * (p - 1), p)).json());
    }
    CHECK(verify_embedding(build("omega", 3)).data["central_charge"] == Rat(-7).json());
    CHECK(verify_embedding(build("m2", 1)).passed());
    CHECK(verify_embedding(build("p1", 1)).passed());
    CHECK(verify_embedding(build("strong", 1)).passed());
    CHECK(verify_embedding(build("strong", 2)).passed());
    CHECK(verify_diagram(2).passed());
    CHECK(verify_diagram(3).passed());
}

TEST_CASE("central charges") {
    for (long p = 1; p <= 4; ++p) {
        Rat k = level(p);
        auto c = virasoro_central_charge(build("wakimoto", p).at("L"));
        REQUIRE(c.has_value());
        CHECK(*c == Rat(3) * k / (k + Rat(2)));
        CHECK(*c == Rat(3 - 6 * p));
    }
    std::string why;
    CHECK_FALSE(virasoro_central_charge(build("wakimoto", 2).at("h"), &why).has_value());
    CHECK_FALSE(why.empty());
}

TEST_CASE("screening charge on the Wakimoto images") {
    for (long p = 1; p <= 3; ++p) {
        for (const auto& [g, s] : build("wakimoto", p).images) CHECK(apply_q_plus(s, p).is_zero());
        FockState x = strong_generator_n00(1, p);
        FockState q1 = apply_q_plus(x, p);
        FockState q2 = apply_q_plus(q1, p);
        CHECK_FALSE(q1.is_zero());
        CHECK_FALSE(q2.is_zero());
        CHECK(apply_q_plus(q2, p).is_zero());
        CHECK(q1 == strong_generator(0, 1, p));
    }
}

TEST_CASE("the automorphism g") {
    for (long p = 1; p <= 3; ++p) {
        auto sp = spaces::pi0_lattice(p);
        CHECK(g_vector({Rat(0), Rat(0), Rat(1)}, p) == RatVec{Rat(-1), Rat(-1), Rat(1)});
        CHECK(g_vector({Rat(1), Rat(1), Rat(0)}, p) == RatVec{Rat(1), Rat(1), Rat(0)});
        std::mt19937 gen(static_cast<unsigned>(p));
        std::uniform_int_distribution<long> d(-3, 3);
        for (int i = 0; i < 30; ++i) {
            RatVec x{Rat(d(gen)), Rat(d(gen)), Rat(d(gen), p)};
            CHECK(g_vector(g_vector(x, p), p, true) == x);
            CHECK(sp->pair(g_vector(x, p), g_vector(x, p)) == sp->pair(x, x));
        }
        for (const auto& [n, s] : build("wakimoto", p).images) {
            CHECK(apply_g(apply_g(s, p), p, true) == s);
            CHECK(apply_g(apply_g(s, p, true), p) == s);
        }
    }
}

TEST_CASE("cocycle fault breaks the Wakimoto OPE") {
    set_cocycle_fault(true);
    Report r = verify_embedding(build("wakimoto", 2));
    set_cocycle_fault(false);
    CHECK_FALSE(r.passed());
    CHECK(verify_embedding(build("wakimoto", 2)).passed());
}
