#include "voaforge/lattice.hpp"
#include "voaforge/weight_window.hpp"

#include <doctest.h>

using namespace voaforge;

TEST_CASE("generator action on the window") {
    OmegaWindow w{2, 1, 1, Rat(0)};
    CHECK(w.level() == Rat(-3, 2));
    ActResult h = act('h', 0, w);
    CHECK(h.coeff == Rat(3, 2));
    CHECK(h.coeff == -w.level());
    CHECK(act('f', 0, w).coeff == Rat(0));
    for (long off = -2; off <= 2; ++off) {
        ActResult e = act('e', off, w);
        CHECK(e.coeff == Rat(1));
        CHECK(e.target == off + 1);
        CHECK(e.in_window);
    }
    CHECK_FALSE(act('e', 3, w).in_window);
    CHECK_FALSE(act('f', -3, w).in_window);
    CHECK_THROWS_AS(act('x', 0, w), MathError);
}

TEST_CASE("sl2 brackets hold inside the window") {
    CHECK(bracket_check(OmegaWindow{2, 1, 1, Rat(0)}).passed());
    CHECK(bracket_check(OmegaWindow{3, 2, 1, Rat(1, 7)}).passed());
    CHECK(bracket_check(OmegaWindow{2, 2, 1, -a_rs(2, 2, 1)}).passed());
    CHECK(bracket_check(OmegaWindow{3, 3, 2, -a_rs(3, 3, 2), -5, 5}).passed());
}

TEST_CASE("split points and case labels") {
    SplitInfo s0 = split_points(OmegaWindow{2, 1, 1, Rat(0)});
    CHECK(s0.case_label == "(1)(ii)");
    REQUIRE(s0.split_points.size() >= 1);
    CHECK(std::find(s0.split_points.begin(), s0.split_points.end(), Rat(0)) != s0.split_points.end());

    SplitInfo s1 = split_points(OmegaWindow{2, 1, 1, Rat(1, 7)});
    CHECK(s1.case_label == "(1)(i)");
    CHECK(s1.split_points.empty());
    CHECK(s1.structure == "simple");

    SplitInfo s2 = split_points(OmegaWindow{2, 2, 1, -a_rs(2, 2, 1)});
    CHECK(s2.case_label == "(2)(ii)");
    CHECK(s2.split_points.size() == 1);
    CHECK(s2.structure == "L^-(1) --> L^+(-1)");
}

TEST_CASE("every split point is a root of the f coefficient") {
    for (long p = 1; p <= 3; ++p)
        for (long r = 1; r <= p; ++r)
            for (long s = 1; s <= 3; ++s)
                for (const Rat& b : {Rat(0), Rat(1, 7), -a_rs(p, r, s), -a_rs(p, -r, -s)}) {
                    OmegaWindow w{p, r, s, b};
                    SplitInfo si = split_points(w);
                    for (const Rat& x : si.split_points) {
                        const long off = (x - b).to_long();
                        CHECK(act('f', off, w).coeff.is_zero());
                    }
                    for (long off = w.lo; off <= w.hi; ++off) {
                        if (act('f', off, w).coeff.is_zero() && act('f', off, w).in_window)
                            CHECK(std::find(si.split_points.begin(), si.split_points.end(), w.bprime(off)) !=
                                  si.split_points.end());
                    }
                }
}

TEST_CASE("exhaustive sweep") {
    Report r = weight_window_sweep(3);
    CHECK_MESSAGE(r.passed(), r.first_problem());
    CHECK(r.entries.size() > 50);
}
