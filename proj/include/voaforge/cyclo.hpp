#pragma once

#include "voaforge/rat.hpp"

#include <string>
#include <vector>

namespace voaforge {

/** Dense rational polynomial, lowest degree first, no trailing zeros. */
using RatPoly = std::vector<Rat>;

RatPoly cyclotomic_polynomial(int n);

/**
 * Element of Q(zeta_n) stored as its canonical remainder modulo the n-th
 * cyclotomic polynomial. The quantum-group code uses n = 2p.
 */
class Cyclo {
  public:
    Cyclo() : order_(0) {}
    Cyclo(int order, const Rat& c);
    static Cyclo zeta(int order);
    static Cyclo zeta_pow(int order, long k);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator*=(const Rat& r);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator*(Cyclo a, const Rat& b) { return a *= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    Cyclo inverse() const;
    Cyclo pow(long e) const;
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    /** Polynomial in q, e.g. "q^2 - 1/2". */
    std::string str() const;

  private:
    void check_order(const Cyclo& o) const;
    void reduce(RatPoly poly);

    int order_;
    std::vector<Rat> c_;
};

} // namespace voaforge
