#include "voaforge/realizations.hpp"
#include "voaforge/screening.hpp"

#include <doctest.h>

#include <map>

using namespace voaforge;

namespace {

using Poly = std::map<std::pair<long, long>, long>; // (q, z) -> coefficient

Poly mul(const Poly& a, const Poly& b, long N) {
    Poly c;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
            if (ka.first + kb.first <= N) c[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return c;
}

// sum_{n even} (n+1) chi_n(z) q^{pn(n+2)/4} / prod_m (1 - z^2 q^m)(1 - q^m)(1 - z^-2 q^m), up to q^N
Poly ft_oracle(long p, long N) {
    Poly den{{{0, 0}, 1}};
    for (long m = 1; m <= N; ++m)
        for (long ze : {2L, 0L, -2L}) {
            Poly geo;
            for (long k = 0; k * m <= N; ++k) geo[{k * m, k * ze}] = 1;
            den = mul(den, geo, N);
        }
    Poly num;
    for (long n = 0;; n += 2) {
        const long e = p * n * (n + 2) / 4;
        if (e > N) break;
        for (long j = 0; j <= n; ++j) num[{e, n - 2 * j}] += n + 1;
    }
    return mul(num, den, N);
}

std::vector<Screening> kernel_pair(long p) {
    if (p == 1) return {make_screening("S1", 1), make_screening("S2", 1)};
    return {make_screening("Qminus", p), make_screening("QFMS", p)};
}

} // namespace

TEST_CASE("screenings annihilate the realizations") {
    for (long p = 1; p <= 3; ++p) {
        Screening qp = make_screening("Qplus", p);
        for (const auto& [g, s] : build("wakimoto", p).images) CHECK(screen_apply(qp, s).is_zero());
        Screening fms = make_screening("QFMS", p);
        CHECK(screen_apply(fms, fms_beta(p)).is_zero());
        CHECK(screen_apply(fms, fms_gamma(p)).is_zero());
        CHECK(screen_apply(qp, strong_generator_n00(1, p)) == apply_q_plus(strong_generator_n00(1, p), p));
    }
    CHECK_THROWS_AS(make_screening("nothing", 2), MathError);
}

TEST_CASE("small kernel components") {
    ModuleSpec m = pi0_module(2);
    auto S = kernel_pair(2);
    CHECK(kernel_basis(S, m, Rat(0), Rat(0)).basis.size() == 1);
    CHECK(kernel_basis(S, m, Rat(0), Rat(1)).basis.size() == 1);
    auto e1 = kernel_basis(kernel_pair(1), pi0_module(1), Rat(2), Rat(1));
    REQUIRE(e1.basis.size() == 1);
    CHECK(kernel_dim_table(S, m, Rat(3), 2, -2).empty());
}

TEST_CASE("kernel dimensions match the FT character oracle") {
    for (long p : {1L, 2L}) {
        const Poly ft = ft_oracle(p, 2);
        auto table = kernel_dim_table(kernel_pair(p), pi0_module(p), Rat(2), -4, 4);
        REQUIRE_FALSE(table.empty());
        for (const auto& c : table) {
            if (c.conf_weight < Rat(0)) {
                CHECK(c.kernel_dim == 0);
                continue;
            }
            auto it = ft.find({c.conf_weight.to_long(), c.h_weight.to_long()});
            const long want = it == ft.end() ? 0 : it->second;
            CHECK_MESSAGE(static_cast<long>(c.kernel_dim) == want,
                          "p=" << p << " h=" << c.h_weight.str() << " conf=" << c.conf_weight.str());
        }
        for (const auto& [k, v] : ft) {
            if (k.second < -4 || k.second > 4) continue;
            bool found = false;
            for (const auto& c : table)
                if (c.conf_weight == Rat(k.first) && c.h_weight == Rat(k.second)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("parallel kernel table equals the serial reference") {
    for (long p : {1L, 2L}) {
        auto S = kernel_pair(p);
        ModuleSpec m = pi0_module(p);
        auto par = kernel_dim_table(S, m, Rat(2), -4, 4);
        auto ser = kernel_dim_table_serial(S, m, Rat(2), -4, 4);
        REQUIRE(par.size() == ser.size());
        for (size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].h_weight == ser[i].h_weight);
            CHECK(par[i].conf_weight == ser[i].conf_weight);
            CHECK(par[i].component_dim == ser[i].component_dim);
            CHECK(par[i].kernel_dim == ser[i].kernel_dim);
        }
    }
}
