#include "voaforge/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace voaforge;

TEST_CASE("pairings in the named spaces") {
    auto pi0 = spaces::pi0_lattice(2);
    RatVec uv{Rat(1), Rat(1), Rat(0)};
    CHECK(pi0->pair(uv, uv) == Rat(0));
    CHECK(pi0->pair(pi0->unit(2), pi0->unit(2)) == Rat(4));
    CHECK(*pi0->alias("sqrtp*alpha") == pi0->unit(2));

    WeightVector varpi = named_weight("varpi", 1);
    WeightVector alpha = WeightVector::named(varpi.space, "alpha");
    CHECK(pair(alpha, varpi) == Rat(1));
    CHECK(pair(varpi, varpi) == Rat(1, 2));
    CHECK((Rat(2) * varpi) == alpha);

    CHECK_THROWS_WITH_AS(pi0->index("w"), "unknown generator w", MathError);
}

TEST_CASE("orthogonal sums") {
    QuadSpace uv({"u", "v"}, {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
    QuadSpace al({"alpha"}, {{Rat(2)}});
    QuadSpace t = tensor({uv, al});
    CHECK(t.dim() == 3);
    CHECK(t.gram() == RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(2)}});
    CHECK(tensor({}).dim() == 0);
    CHECK_THROWS_AS(tensor({al, al}), MathError);

    auto s = spaces::super_xaa();
    CHECK(s->gram() == RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(-2)}});
    auto r = spaces::super_rescaled(3);
    CHECK(r->gram()[1][1] == Rat(2, 3));
    CHECK(r->gram()[2][2] == Rat(-2, 3));
}

TEST_CASE("module parameters") {
    for (long p = 1; p <= 4; ++p) {
        CHECK(a_rs(p, 1, 1) == Rat(0));
        CHECK(named_weight("alpha_rs", p, 1, 1).c == RatVec{Rat(0), Rat(0), Rat(0)});
        CHECK(lambda_rs(p, 1, 1) == Rat(0));
        CHECK(delta_rs(p, 1, 1) == Rat(0));
        CHECK(lambda_rs(p, 1, 2) == Rat(1));
        // a_{r,s} + a_{-r,-s} = 1 - 1/p = -k - 1
        for (long r = 1; r <= p; ++r)
            for (long s = -3; s <= 3; ++s) CHECK(a_rs(p, r, s) + a_rs(p, -r, -s) == Rat(1) - Rat(1, p));
    }
    CHECK(delta_rs(2, 1, 2) == Rat(3, 2));
    CHECK_THROWS_AS(named_weight("alpha_rs", 2, 3, 1), MathError);
    CHECK_THROWS_AS(named_weight("nothing", 2), MathError);
}

TEST_CASE("lattice membership") {
    auto pi0 = spaces::pi0_lattice(2);
    CHECK(pi0->lattice_coords({Rat(1), Rat(1), Rat(0)}).has_value());
    CHECK(pi0->lattice_coords({Rat(0), Rat(-1), Rat(-1)}).has_value());
    CHECK_FALSE(pi0->lattice_coords({Rat(1, 2), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("cocycle is bimultiplicative with the expected commutator") {
    std::mt19937 g(3);
    std::uniform_int_distribution<long> d(-3, 3);
    for (long p : {1L, 2L, 3L}) {
        auto sp = spaces::pi0_lattice(p);
        const RatMat& B = sp->lattice_basis();
        REQUIRE(B.size() == 3);
        auto random_vec = [&] {
            RatVec v = sp->zero();
            for (const auto& b : B) {
                long c = d(g);
                for (size_t k = 0; k < v.size(); ++k) v[k] += Rat(c) * b[k];
            }
            return v;
        };
        auto add = [](RatVec a, const RatVec& b) {
            for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
            return a;
        };
        for (int i = 0; i < 60; ++i) {
            RatVec x = random_vec(), y = random_vec(), z = random_vec();
            CHECK(sp->cocycle(add(x, y), z) == sp->cocycle(x, z) * sp->cocycle(y, z));
            CHECK(sp->cocycle(x, add(y, z)) == sp->cocycle(x, y) * sp->cocycle(x, z));
            Rat e = sp->pair(x, y) + sp->pair(x, x) * sp->pair(y, y);
            const int want = (e.to_long() % 2 == 0) ? 1 : -1;
            CHECK(sp->cocycle(x, y) * sp->cocycle(y, x) == want);
        }
    }
}

TEST_CASE("cocycle fault switch") {
    auto sp = spaces::pi0_lattice(2);
    const RatVec b1 = sp->lattice_basis()[0];
    CHECK(sp->cocycle(b1, b1) == 1);
    set_cocycle_fault(true);
    CHECK(cocycle_fault());
    CHECK(sp->cocycle(b1, b1) == -1);
    set_cocycle_fault(false);
    CHECK(sp->cocycle(b1, b1) == 1);
}
