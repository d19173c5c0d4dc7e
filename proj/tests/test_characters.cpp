#include "voaforge/characters.hpp"
#include "voaforge/lattice.hpp"

#include <doctest.h>

using namespace voaforge;

TEST_CASE("vacuum simple module equals the free affine character") {
    const Window win{Rat(5), Rat(-6), Rat(6)};
    BiSeries ch = character(CharSpec{CharKind::SimpleAffine, 2, 1, 1}, win);
    BiSeries free = pochhammer_inverse({{Rat(2), Rat(1)}, {Rat(-2), Rat(1)}, {Rat(0), Rat(1)}}, Rat(5), Rat(-6));
    free.clip(Rat(-6), Rat(6));
    CHECK(ch.equal_within(free));
    CHECK(ch.coeff(Rat(0), Rat(0)) == Rat(1));
    CHECK(ch.coeff(Rat(1), Rat(0)) == Rat(1));
    CHECK(ch.coeff(Rat(1), Rat(2)) == Rat(1));
    CHECK(ch.coeff(Rat(2), Rat(0)) == Rat(3));
}

TEST_CASE("leading conformal weights") {
    const Window win{Rat(4), Rat(-6), Rat(6)};
    BiSeries l12 = character(CharSpec{CharKind::SimpleAffine, 2, 1, 2}, win);
    REQUIRE(l12.min_q().has_value());
    CHECK(*l12.min_q() == delta_rs(2, 1, 2));
    CHECK(*l12.min_q() == Rat(3, 2));
    CHECK(l12.coeff(Rat(3, 2), Rat(1)) == Rat(1));
    CHECK(l12.coeff(Rat(3, 2), Rat(-1)) == Rat(1));

    BiSeries fock = character(CharSpec{CharKind::Fock, 1, 1, 1, 0, Rat(0), Rat(0)}, win);
    CHECK(*fock.min_q() == Rat(0));
    CHECK(sl2_character(2).terms().size() == 3);
    CHECK(sl2_character(0).equal_within(BiSeries::one()));
}

TEST_CASE("Weyl modules are simple") {
    for (long p = 1; p <= 3; ++p)
        for (long n = 0; n <= 2; ++n) {
            Report r = weyl_simple_check(p, n, Window{Rat(5), Rat(-6), Rat(6)});
            CHECK_MESSAGE(r.passed(), r.first_problem());
        }
}

TEST_CASE("branching against the free field side") {
    for (auto [r, s] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}})
        CHECK(decomposition_check(2, r, s, Window{Rat(4), Rat(-6), Rat(6)}).passed());
    CHECK(decomposition_check(1, 1, 2, Window{Rat(4), Rat(-6), Rat(6)}).passed());
    CHECK(ct_pipeline_check(2, 1, 0, 1, Window{Rat(4), Rat(-6), Rat(6)}).passed());
}

TEST_CASE("character identities hold at every truncation order") {
    for (int o = 0; o <= 6; ++o) {
        const Window win{Rat(o), Rat(-8), Rat(8)};
        CHECK_MESSAGE(p1_decomposition_check(win).passed(), "order " << o);
        for (long p = 1; p <= 3; ++p)
            for (long r = 1; r <= p; ++r)
                for (long s = 1; s <= 4; ++s)
                    CHECK_MESSAGE(decomposition_check(p, r, s, Window{Rat(o), Rat(-6), Rat(6)}).passed(),
                                  "p=" << p << " r=" << r << " s=" << s << " order " << o);
    }
}

TEST_CASE("p = 1 decomposition") {
    CHECK(p1_decomposition_check(Window{Rat(4), Rat(-8), Rat(8)}).passed());
    CHECK(p1_decomposition_check(Window{Rat(0), Rat(-8), Rat(8)}).passed());
    Report bad = p1_decomposition_check(Window{Rat(4), Rat(-8), Rat(8)}, true);
    CHECK_FALSE(bad.passed());
    CHECK(bad.first_problem().find("q^2") != std::string::npos);
    CHECK(pi_h_weight(0) == Rat(0));
    CHECK(pi_h_weight(2) == pi_h_weight(-2));
}

TEST_CASE("FT character is a positive sum of Weyl characters") {
    const Window win{Rat(4), Rat(-6), Rat(6)};
    for (long p : {1L, 2L}) {
        BiSeries ft = character(CharSpec{CharKind::FtAlgebra, p}, win);
        BiSeries sum;
        for (long n = 0; n <= 4; n += 2) sum += character(CharSpec{CharKind::Weyl, p, 1, 1, n}, win) * Rat(n + 1);
        sum.truncate(win.order);
        CHECK(ft.equal_within(sum));
        for (const auto& [k, c] : ft.terms()) {
            CHECK(c > Rat(0));
            CHECK(ft.coeff(k.q, -k.z) == c);
        }
    }
}

TEST_CASE("series JSON encoding") {
    BiSeries s = character(CharSpec{CharKind::Weyl, 2, 1, 1, 0}, Window{Rat(2), Rat(-2), Rat(2)});
    json j = series_json(s);
    CHECK(j["qOrder"] == "2/1");
    CHECK(j["zWindow"] == json::array({-2, 2}));
    REQUIRE(j["terms"].size() == 4);
    CHECK(j["terms"][0]["q"] == "0/1");
    CHECK(j["terms"][0]["z"] == 0);
    CHECK(j["terms"][0]["c"] == "1/1");
    CHECK(char_kind_from_string("ft") == CharKind::FtAlgebra);
    CHECK_THROWS_AS(char_kind_from_string("nothing"), MathError);
}
