#include "voaforge/fock.hpp"
#include "voaforge/realizations.hpp"
#include "voaforge/screening.hpp"

#include <doctest.h>

using namespace voaforge;

namespace {

// Skew symmetry for even states: a_(n) b = sum_j (-1)^{n+j+1} T^(j) (b_(n+j) a).
FockState skew(const FockState& a, long n, const FockState& b) {
    FockState out(a.space());
    const long top = max_pole(b, a);
    for (long j = 0; n + j <= top; ++j) {
        FockState t = translate_div(nth_product(b, n + j, a), static_cast<int>(j));
        out += Rat((n + j + 1) % 2 == 0 ? 1 : -1) * t;
    }
    return out;
}

std::vector<FockState> sample_states(long p) {
    Realization w = build("wakimoto", p);
    std::vector<FockState> out;
    for (const auto& [g, s] : w.images) out.push_back(s);
    out.push_back(strong_generator_n00(1, p));
    out.push_back(FockState::vacuum(w.target).create(2, 2).create(0, 1));
    return out;
}

} // namespace

TEST_CASE("Heisenberg modes") {
    auto h = spaces::heisenberg_alpha();
    FockState vac = FockState::vacuum(h);
    FockState a1 = vac.create(0, 1);
    CHECK(mode_act(0, 1, a1) == Rat(2) * vac);
    for (int n = 0; n <= 3; ++n) CHECK(mode_act(0, n, vac).is_zero());
    CHECK(nth_product(a1, 1, a1) == Rat(2) * vac);
    CHECK(nth_product(a1, 0, a1).is_zero());

    auto pi0 = spaces::pi0_lattice(2);
    FockState eA = FockState::exp(pi0, pi0->unit(2));
    CHECK(mode_act(pi0->unit(2), 0, eA) == Rat(4) * eA);
}

TEST_CASE("vacuum axiom") {
    for (const auto& b : sample_states(2)) {
        FockState vac = FockState::vacuum(b.space());
        CHECK(nth_product(vac, -1, b) == b);
        for (long n : {-3L, -2L, 0L, 1L, 2L}) CHECK(nth_product(vac, n, b).is_zero());
        CHECK(nth_product(b, -1, vac) == b);
        CHECK(nth_product(b, -2, vac) == translate(b));
    }
}

TEST_CASE("lattice vertex operators") {
    auto pi0 = spaces::pi0_lattice(2);
    RatVec uv{Rat(1), Rat(1), Rat(0)}, muv{Rat(-1), Rat(-1), Rat(0)};
    FockState v = lattice_coeff(uv, Rat(0), FockState::exp(pi0, muv));
    REQUIRE(v.size() == 1);
    CHECK(v.terms().begin()->first == FockState::vacuum(pi0).terms().begin()->first);
    CHECK(v.terms().begin()->second.abs() == Rat(1));

    CHECK(lattice_coeff(pi0->unit(2), Rat(0), FockState::vacuum(pi0)) == FockState::exp(pi0, pi0->unit(2)));

    for (long p : {1L, 2L, 3L}) {
        FockState x = strong_generator_n00(1, p);
        CHECK(nth_product(x, -1, x).is_zero());
        CHECK(nth_product(x, -2 * p - 1, x) == strong_generator_n00(2, p));
    }
}

TEST_CASE("conformal weights") {
    auto pi0 = spaces::pi0_lattice(2);
    FockState L = build("wakimoto", 2).at("L");
    CHECK(conf_weight(FockState::exp(pi0, {Rat(1), Rat(1), Rat(0)}), L) == Rat(1));
    CHECK(conf_weight(FockState::exp(pi0, {Rat(0), Rat(0), Rat(-1)}), L) == Rat(4));
    CHECK(conf_weight(FockState::vacuum(pi0), L) == Rat(0));
    for (long p = 1; p <= 3; ++p) {
        FockState Lp = build("wakimoto", p).at("L");
        CHECK(conf_weight(strong_generator_n00(1, p), Lp) == Rat(2 * p));
        // Delta(e^{au+bv}) = (a^2 - b^2)/2 + (a + b)/2
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                FockState s = FockState::exp(spaces::pi0_lattice(p), {Rat(a), Rat(b), Rat(0)});
                CHECK(conf_weight(s, Lp) == Rat(a * a - b * b, 2) + Rat(a + b, 2));
            }
    }
    CHECK_THROWS_AS(conf_weight(FockState::vacuum(pi0) + FockState::exp(pi0, {Rat(1), Rat(0), Rat(0)}), L), MathError);
    for (const auto& s : sample_states(2)) {
        if (s.size() == 0) continue;
        try {
            Rat w = conf_weight(s, L);
            CHECK(spectral_flow_weight(pi0->zero(), s, L) == w);
        } catch (const MathError&) {
        }
    }
}

TEST_CASE("graded components") {
    ModuleSpec m = pi0_module(2);
    CHECK(enumerate_graded(m, Rat(0), Rat(0)).basis.size() == 1);
    CHECK(enumerate_graded(m, Rat(0), Rat(1)).basis.size() >= 2);
    FockState L = build("wakimoto", 2).at("L");
    for (int d = 0; d <= 2; ++d)
        for (const auto& s : enumerate_graded(m, Rat(0), Rat(d)).basis) CHECK(conf_weight(s, L) == Rat(d));

    ModuleSpec h;
    h.space = spaces::heisenberg_alpha();
    h.offset = {Rat(0)};
    h.hvec = {Rat(0)};
    h.rho = {Rat(0)};
    CHECK(enumerate_graded(h, Rat(0), Rat(2)).basis.size() == 2);
    CHECK(enumerate_graded(h, Rat(0), Rat(4)).basis.size() == 5);
    CHECK(colored_partitions(3, 2).size() == 10);
}

TEST_CASE("skew symmetry on free field states") {
    for (long p : {1L, 2L}) {
        auto states = sample_states(p);
        for (const auto& a : states)
            for (const auto& b : states)
                for (long n = -2; n <= 2; ++n) CHECK(nth_product(a, n, b) == skew(a, n, b));
    }
}

TEST_CASE("translation covariance") {
    for (const auto& a : sample_states(2))
        for (const auto& b : sample_states(2))
            for (long n = -1; n <= 3; ++n) CHECK(nth_product(translate(a), n, b) == Rat(-n) * nth_product(a, n - 1, b));
}

TEST_CASE("OPE singular parts") {
    Realization w = build("wakimoto", 2);
    auto poles = ope_singular(w.at("e"), w.at("f"), 2);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == w.at("h"));
    CHECK(poles[1] == level(2) * FockState::vacuum(w.target));
    CHECK(max_pole(w.at("e"), w.at("e")) == -1);
    CHECK(max_pole(w.at("L"), w.at("L")) == 3);
}
