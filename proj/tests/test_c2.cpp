#include "voaforge/c2.hpp"

#include <doctest.h>

#include <random>

using namespace voaforge;

namespace {

CommPoly random_poly(std::mt19937& g, const VarList& v, int maxDeg, int terms) {
    std::uniform_int_distribution<int> deg(0, maxDeg), coef(-3, 3);
    CommPoly out(v);
    for (int t = 0; t < terms; ++t) {
        Exponent e(v->size(), 0);
        for (auto& x : e) x = deg(g) / static_cast<int>(v->size());
        out.add(e, Rat(coef(g)));
    }
    return out;
}

CommPoly var(const VarList& v, const std::string& n) { return CommPoly::variable(v, n); }

} // namespace

TEST_CASE("Groebner bases") {
    auto v = make_vars({"x", "y"});
    CommPoly x = var(v, "x"), y = var(v, "y");
    auto G = groebner({x * x, x * y});
    REQUIRE(G.size() == 2);
    CHECK(is_groebner({x * x, x * y}));
    CHECK(ideals_equal(G, {x * x, x * y}));
    CHECK_FALSE(is_groebner({x * x - y, x * y}));
    CHECK(ideal_member(CommPoly::constant(v, Rat(1)), {CommPoly::constant(v, Rat(1))}));
    CHECK_FALSE(ideal_member(y, {x * x, x * y}));
}

TEST_CASE("random ideals: generators reduce to zero modulo their basis") {
    std::mt19937 g(9);
    auto v = make_vars({"x", "y", "z"});
    for (int i = 0; i < 15; ++i) {
        std::vector<CommPoly> gens{random_poly(g, v, 6, 3), random_poly(g, v, 6, 3)};
        gens.erase(std::remove_if(gens.begin(), gens.end(), [](const CommPoly& p) { return p.is_zero(); }), gens.end());
        if (gens.empty()) continue;
        auto G = groebner(gens);
        CHECK(is_groebner(G));
        for (const auto& f : gens) CHECK(normal_form(f, G).is_zero());
        CommPoly combo = gens[0] * random_poly(g, v, 3, 2);
        CHECK(ideal_member(combo, G));
    }
}

TEST_CASE("Poisson brackets") {
    auto P = sl2_poisson();
    auto v = sl2_vars();
    CommPoly h = var(v, "h"), e = var(v, "e"), f = var(v, "f"), a = var(v, "a");
    CHECK(P.bracket(h, e) == Rat(2) * e);
    CHECK(P.bracket(e, f) == h);
    CHECK(P.bracket(a, e).is_zero());
    CHECK(P.bracket(casimir(), e).is_zero());
    CHECK(P.bracket(casimir(), f).is_zero());

    std::mt19937 g(4);
    for (int i = 0; i < 10; ++i) {
        CommPoly x = random_poly(g, v, 5, 3), y = random_poly(g, v, 5, 3), z = random_poly(g, v, 5, 3);
        CHECK(P.bracket(x, y) == -P.bracket(y, x));
        CHECK((P.bracket(x, P.bracket(y, z)) + P.bracket(y, P.bracket(z, x)) + P.bracket(z, P.bracket(x, y))).is_zero());
        CHECK(P.bracket(x, y * z) == P.bracket(x, y) * z + y * P.bracket(x, z));
        // the C2 map is a Poisson homomorphism
        CHECK(c2_map(P.bracket(x, y)) == bga_poisson().bracket(c2_map(x), c2_map(y)));
    }
}

TEST_CASE("the C2 map") {
    auto v = sl2_vars();
    auto b = bga_vars();
    CHECK(c2_map(var(v, "e")) == var(b, "beta"));
    CHECK(c2_map(CommPoly(v)).is_zero());
    CHECK(c2_map(casimir()) == var(b, "a").pow(2));
}

TEST_CASE("the nilpotent family") {
    auto v = sl2_vars();
    CommPoly h = var(v, "h"), e = var(v, "e"), f = var(v, "f"), a = var(v, "a");
    for (long p = 1; p <= 3; ++p) {
        auto fam = nilpotent_family_sl2(p);
        REQUIRE(fam.size() == 5);
        const unsigned k = static_cast<unsigned>(4 * p - 2);
        CHECK(fam[0] == e * e * a.pow(k));
        CHECK(fam[2] == (h * h - Rat(2) * e * f) * a.pow(k));
        for (const auto& x : fam) CHECK(x.homogeneous());
        CHECK(ideals_equal(nilpotent_family(p), target_ideal(p)));
        auto G = groebner(nilpotent_family(p));
        CHECK(ideal_member(var(bga_vars(), "a").pow(static_cast<unsigned>(4 * p)), G));
        CHECK_FALSE(ideal_member(c2_map(casimir()), G));
    }
}

TEST_CASE("derivation nilpotency") {
    auto t = make_vars({"t"});
    CommPoly T = var(t, "t");
    Derivation D{{T}};
    CHECK(D.apply(T.pow(3)) == Rat(3) * T.pow(3));
    CHECK(derivation_nilpotency({T * T}, D, T, 2).passed());
    CHECK_THROWS_WITH_AS(derivation_nilpotency({T * T}, D, CommPoly::constant(t, Rat(1)), 1),
                         "precondition failed: a^1 is not in the ideal", MathError);
}

TEST_CASE("packaged reports") {
    for (long p = 1; p <= 2; ++p) {
        CHECK(c2_ideal_equality(p).passed());
        Report c = c2_casimir(p);
        CHECK(c.passed());
        CHECK(c.data["least_casimir_power"] == 2 * p);
        CHECK(c2_nilpotency(p).passed());
    }
}
