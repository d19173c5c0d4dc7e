#include "voaforge/cyclo.hpp"

#include <map>
#include <mutex>

namespace voaforge {

namespace {

void trim(RatPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (b.empty()) throw MathError("polynomial division by zero");
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rat f = a.back() / b.back();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

} // namespace

RatPoly cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, RatPoly> cache;
    if (n <= 0) throw MathError("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    RatPoly num(n + 1, Rat(0));
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(num, cyclotomic_polynomial(d));
        if (!r.empty()) throw MathError("cyclotomic division not exact");
        num = q;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = num;
    return num;
}

Cyclo::Cyclo(int order, const Rat& c) : order_(order) {
    size_t deg = cyclotomic_polynomial(order).size() - 1;
    c_.assign(deg, Rat(0));
    c_[0] = c;
}

Cyclo Cyclo::zeta(int order) {
    Cyclo z(order, Rat(0));
    RatPoly x{Rat(0), Rat(1)};
    z.reduce(x);
    return z;
}

Cyclo Cyclo::zeta_pow(int order, long k) { return zeta(order).pow(k); }

void Cyclo::reduce(RatPoly poly) {
    const RatPoly phi = cyclotomic_polynomial(order_);
    auto [q, r] = poly_divmod(std::move(poly), phi);
    (void)q;
    c_.assign(phi.size() - 1, Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c_[i] = r[i];
}

void Cyclo::check_order(const Cyclo& o) const {
    if (order_ != o.order_) throw MathError("cyclotomic order mismatch");
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c_.empty() || c_[0] != Rat(1)) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    check_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    check_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    check_order(o);
    RatPoly a(c_.begin(), c_.end()), b(o.c_.begin(), o.c_.end());
    trim(a);
    trim(b);
    reduce(poly_mul(a, b));
    return *this;
}

Cyclo& Cyclo::operator*=(const Rat& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    a.check_order(b);
    return a.c_ == b.c_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw MathError("inverse of zero in cyclotomic field");
    // Extended Euclid: find s with s*a = 1 mod phi.
    RatPoly r0 = cyclotomic_polynomial(order_), r1(c_.begin(), c_.end());
    trim(r1);
    RatPoly s0, s1{Rat(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = poly_divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw MathError("non-invertible cyclotomic element");
    }
    Rat lead = r1[0];
    for (auto& x : s1) x /= lead;
    Cyclo out(order_, Rat(0));
    out.reduce(s1);
    return out;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(order_, Rat(1)), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Cyclo::str() const {
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& x = c_[i];
        if (x.is_zero()) continue;
        Rat a = x.abs();
        std::string mono;
        if (i == 0) mono = a.str();
        else {
            mono = (a == Rat(1) ? "" : a.str() + "*") + "q";
            if (i > 1) mono += "^" + std::to_string(i);
        }
        if (out.empty()) out = (x.sign() < 0 ? "-" : "") + mono;
        else out += (x.sign() < 0 ? " - " : " + ") + mono;
    }
    return out.empty() ? "0" : out;
}

} // namespace voaforge
