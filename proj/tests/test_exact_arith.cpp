#include "voaforge/biseries.hpp"
#include "voaforge/characters.hpp"
#include "voaforge/cyclo.hpp"
#include "voaforge/realizations.hpp"

#include <doctest.h>

#include <random>

using namespace voaforge;

namespace {

Rat random_rat(std::mt19937& g) {
    std::uniform_int_distribution<long> n(-40, 40), d(1, 30);
    return Rat(n(g), d(g));
}

Cyclo random_cyclo(std::mt19937& g, int order) {
    Cyclo c(order, Rat(0));
    for (int k = 0; k < order; ++k) c += Cyclo::zeta_pow(order, k) * random_rat(g);
    return c;
}

// plain integer power series product, independent of BiSeries
std::vector<long> series_mul(const std::vector<long>& a, const std::vector<long>& b, size_t n) {
    std::vector<long> c(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

long partitions(long n, long maxPart) {
    if (n == 0) return 1;
    long total = 0;
    for (long k = 1; k <= std::min(n, maxPart); ++k) total += partitions(n - k, k);
    return total;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(4, 8).str() == "1/2");
    CHECK(Rat(4, 8).json() == "1/2");
    CHECK(Rat(6, -3).str() == "-2");
    CHECK(Rat(6, 3).json() == "2/1");
    CHECK(level(2) == Rat(-3, 2));
    CHECK(Rat::parse("-7/14") == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1, 0), MathError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), MathError);
    CHECK_FALSE(Rat(1).try_div(Rat(0)).has_value());
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(binomial(Rat(-1, 2), 2) == Rat(3, 8));
    CHECK(factorial(6) == Rat(720));
}

TEST_CASE("rationals form a field") {
    std::mt19937 g(11);
    for (int i = 0; i < 300; ++i) {
        Rat a = random_rat(g), b = random_rat(g), c = random_rat(g);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rat::parse(a.str()) == a);
    }
}

TEST_CASE("cyclotomic fields") {
    const Cyclo q4 = Cyclo::zeta(4);
    CHECK(q4 * q4 == Cyclo(4, Rat(-1)));
    CHECK((q4 + q4.inverse()).is_zero());
    const Cyclo q6 = Cyclo::zeta(6);
    CHECK(q6.pow(3) == Cyclo(6, Rat(-1)));
    CHECK(q6.pow(-1) == q6.pow(5));
    CHECK(cyclotomic_polynomial(6) == RatPoly{Rat(1), Rat(-1), Rat(1)});
    CHECK(cyclotomic_polynomial(8) == RatPoly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK_THROWS_AS(Cyclo(4, Rat(1)) + Cyclo(6, Rat(1)), MathError);
    CHECK_THROWS_AS(Cyclo(4, Rat(0)).inverse(), MathError);
}

TEST_CASE("cyclotomic arithmetic properties") {
    std::mt19937 g(5);
    for (int order : {2, 4, 6, 8}) {
        const Cyclo z = Cyclo::zeta(order);
        CHECK(z.pow(order).is_one());
        for (int k = 1; k < order; ++k) CHECK_FALSE(z.pow(k).is_one());
        for (int i = 0; i < 40; ++i) {
            Cyclo a = random_cyclo(g, order), b = random_cyclo(g, order);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK((a + b) * b == a * b + b * b);
        }
    }
}

TEST_CASE("truncated series arithmetic") {
    BiSeries one_minus_q = BiSeries::one() - BiSeries::monomial(Rat(1), Rat(1), Rat(0));
    BiSeries cubic = BiSeries::one() + BiSeries::monomial(Rat(1), Rat(1), Rat(0)) +
                     BiSeries::monomial(Rat(1), Rat(2), Rat(0));
    BiSeries prod = (one_minus_q * cubic).truncate(Rat(3));
    CHECK(prod.terms().size() == 1);
    CHECK(prod.coeff(Rat(0), Rat(0)) == Rat(1));

    BiSeries z = BiSeries::monomial(Rat(1), Rat(0), Rat(1));
    BiSeries zi = BiSeries::monomial(Rat(1), Rat(0), Rat(-1));
    CHECK((z * zi).equal_within(BiSeries::one()));

    BiSeries geo = one_minus_q;
    geo.truncate(Rat(4));
    BiSeries inv = geo.inverse();
    for (int k = 0; k < 4; ++k) CHECK(inv.coeff(Rat(k), Rat(0)) == Rat(1));
    CHECK(inv.terms().size() == 4);

    BiSeries w = BiSeries::monomial(Rat(1), Rat(0), Rat(0), 1);
    BiSeries wi = BiSeries::monomial(Rat(1), Rat(0), Rat(0), -1);
    BiSeries three = BiSeries::monomial(Rat(3), Rat(0), Rat(0));
    CHECK((w + three + wi).ct_w().equal_within(three));
    CHECK(((w - wi) * wi).ct_w().equal_within(BiSeries::one()));
}

TEST_CASE("Pochhammer symbols against brute force products") {
    const int N = 9;
    std::vector<long> euler{1};
    for (int m = 1; m < N; ++m) {
        std::vector<long> f(static_cast<size_t>(m + 1), 0);
        f[0] = 1;
        f[static_cast<size_t>(m)] = -1;
        euler = series_mul(euler, f, N);
    }
    BiSeries qq = pochhammer({{Rat(0), Rat(1)}}, Rat(N));
    for (int k = 0; k < N; ++k) CHECK(qq.coeff(Rat(k), Rat(0)) == Rat(euler[static_cast<size_t>(k)]));
    CHECK(qq.coeff(Rat(5), Rat(0)) == Rat(1));
    CHECK(qq.coeff(Rat(7), Rat(0)) == Rat(1));

    BiSeries inv = pochhammer_inverse({{Rat(0), Rat(1)}}, Rat(8), Rat(-6));
    for (int k = 0; k < 8; ++k) CHECK(inv.coeff(Rat(k), Rat(0)) == Rat(partitions(k, k)));

    CHECK(pochhammer({}, Rat(5)).equal_within(BiSeries::one()));

    // (z^2 q; q) up to q^3: (1 - z^2 q)(1 - z^2 q^2)(1 - z^2 q^3)
    BiSeries zq = pochhammer({{Rat(2), Rat(1)}}, Rat(4));
    CHECK(zq.coeff(Rat(1), Rat(2)) == Rat(-1));
    CHECK(zq.coeff(Rat(2), Rat(2)) == Rat(-1));
    CHECK(zq.coeff(Rat(3), Rat(2)) == Rat(-1));
    CHECK(zq.coeff(Rat(3), Rat(4)) == Rat(1));
    CHECK(zq.coeff(Rat(3), Rat(0)) == Rat(0));
}
