#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace voaforge {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Exact rational number, always in lowest terms with positive denominator. */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    long to_long() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::optional<Rat> try_div(const Rat& b) const;
    Rat pow(long e) const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /** Text form: "n" for integers, "n/d" otherwise. */
    std::string str() const;
    /** JSON form: always "n/d". */
    std::string json() const;

  private:
    mpq_class v_;
};

Rat binomial(const Rat& top, long k);
Rat factorial(long n);

} // namespace voaforge
