#include "voaforge/rat.hpp"

namespace voaforge {

Rat::Rat(long n, long d) {
    if (d == 0) throw MathError("division by zero");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw MathError("division by zero in '" + s + "'");
        return Rat(mpq_class(n, d));
    } catch (const std::invalid_argument&) {
        throw MathError("not a rational number: '" + s + "'");
    }
}

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) throw MathError("not a machine integer: " + str());
    return v_.get_num().get_si();
}

mpz_class Rat::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

mpz_class Rat::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rat> Rat::try_div(const Rat& b) const {
    if (b.is_zero()) return std::nullopt;
    return *this / b;
}

Rat Rat::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw MathError("division by zero");
        return Rat(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::json() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rat binomial(const Rat& top, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r = r * (top - Rat(i)) / Rat(i + 1);
    return r;
}

Rat factorial(long n) {
    Rat r(1);
    for (long i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

} // namespace voaforge
