#include "voaforge/quantum.hpp"

#include <doctest.h>

using namespace voaforge;

namespace {

NCExpr normal(const Presentation& P, const std::string& w) { return P.reduce(P.word(w)).normal; }

} // namespace

TEST_CASE("braiding matrices") {
    Presentation A = build_presentation(Variant::A, 2);
    const Cyclo q = A.q();
    CHECK(q * q == A.scalar(Rat(-1)));
    CHECK(A.braiding[0][0] == A.scalar(Rat(-1)));
    CHECK(A.braiding[0][1] == q.inverse());
    CHECK(A.braiding[1][0] == q.inverse());
    CHECK(A.braiding[1][1] == A.scalar(Rat(-1)));
    for (long p = 1; p <= 3; ++p) CHECK(braiding_check(p).passed());
    CHECK_THROWS_AS(build_presentation(Variant::A, 1), MathError);
    CHECK_THROWS_AS(build_presentation(Variant::UQH, 1), MathError);
    CHECK(variant_from_string("uqh") == Variant::UQH);
    CHECK_THROWS_AS(variant_from_string("b"), MathError);
}

TEST_CASE("rewriting examples") {
    for (long p = 2; p <= 3; ++p) {
        Presentation A = build_presentation(Variant::A, p);
        NCExpr want = A.braiding[0][0] * A.word("x1 x1*") + A.one() - A.word("K1 K1");
        CHECK(normal(A, "x1* x1") == want);
        CHECK(normal(A, "K1 x1 K1^-1") == A.q(2) * A.gen("x1"));
        CHECK(normal(A, "x2 x2").is_zero());
        CHECK(normal(A, "K1 K1^-1") == A.one());
        CHECK(normal(A, "H1 x1") == A.word("x1 H1") + A.scalar(Rat(2)) * A.gen("x1"));
    }
    Presentation S = build_presentation(Variant::S, 1);
    CHECK(normal(S, "x2 x2").is_zero());
    CHECK_THROWS_AS(S.word("x7"), MathError);
}

TEST_CASE("step budget") {
    Presentation A = build_presentation(Variant::A, 3);
    NCExpr big = A.word("x1* x2* x1* x1 x2 x1 K1^-1 H2 x2*");
    Reduction full = A.reduce(big);
    CHECK(full.complete);
    Reduction cut = A.reduce(big, 3);
    CHECK_FALSE(cut.complete);
    CHECK(cut.steps == 3);
    CHECK(A.reduce(cut.normal).normal == full.normal);
}

TEST_CASE("super Serre expansion") {
    for (long p = 1; p <= 4; ++p) CHECK(expand_super_serre(p).passed());
}

TEST_CASE("Nichols relations and PBW dimension") {
    for (long p = 1; p <= 3; ++p) {
        CHECK(nichols_check(Variant::S, p).passed());
        if (p >= 2) {
            CHECK(nichols_check(Variant::A, p).passed());
            CHECK(nichols_check(Variant::UQH, p).passed());
        }
    }
    for (long p = 2; p <= 3; ++p) {
        Presentation A = build_presentation(Variant::A, p);
        std::vector<int> pos{A.letter("x1"), A.letter("x2")};
        auto words = irreducible_words(A.rules, pos, static_cast<size_t>(4 * p));
        CHECK(words.size() == static_cast<size_t>(4 * p));
    }
}

TEST_CASE("rewriting is confluent on random words") {
    for (long p = 1; p <= 3; ++p)
        for (Variant v : {Variant::A, Variant::S, Variant::UQH}) {
            if (p == 1 && v != Variant::S) continue;
            Report r = confluence_check(build_presentation(v, p), 100, 6, static_cast<unsigned>(p));
            CHECK_MESSAGE(r.passed(), variant_name(v) << " p=" << p << ": " << r.first_problem());
        }
}

TEST_CASE("F and G are inverse isomorphisms") {
    for (long p = 2; p <= 3; ++p) {
        Presentation A = build_presentation(Variant::A, p), S = build_presentation(Variant::S, p);
        AlgebraMap F = map_F(A, S), G = map_G(S, A);
        CHECK(check_morphism(F, A, S).passed());
        CHECK(check_morphism(G, S, A).passed());
        CHECK(check_inverse(F, G, A, S).passed());
        for (const auto& name : A.alphabet) CHECK(S.reduce(apply_map(F, A, A.gen(name))).complete);
    }
    Presentation A = build_presentation(Variant::A, 3);
    CHECK(check_morphism(map_omega(A), A, A).passed());
    Presentation U = build_presentation(Variant::UQH, 3);
    CHECK(check_morphism(map_uqh(U, A), U, A).passed());
    CHECK(coproduct_twist_check(3).passed());
}

TEST_CASE("a corrupted linking constant is detected") {
    Presentation A = build_presentation(Variant::A, 3), S = build_presentation(Variant::S, 3);
    AlgebraMap F = map_F(A, S);
    bool found = false;
    for (auto& [label, rel] : A.relations)
        if (label.rfind("x1* x1", 0) == 0) {
            rel += A.scalar(Rat(1, 2)) * A.word("K1 K1");
            found = true;
        }
    REQUIRE(found);
    Report r = check_morphism(F, A, S);
    CHECK(r.verdict() == Verdict::Fail);
    CHECK(r.first_problem().find("x1* x1") != std::string::npos);
}

TEST_CASE("an exhausted budget is inconclusive") {
    Presentation A = build_presentation(Variant::A, 3), S = build_presentation(Variant::S, 3);
    Report r = check_morphism(map_F(A, S), A, S, 2);
    CHECK(r.verdict() == Verdict::Inconclusive);
}
