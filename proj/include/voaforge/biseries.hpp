#pragma once

#include "voaforge/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace voaforge {

/** Exponent triple (q, z, w); z is measured in units of the fundamental weight. */
struct SeriesKey {
    Rat q;
    Rat z;
    long w = 0;
    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
    friend auto operator<=>(const SeriesKey& a, const SeriesKey& b) {
        if (auto c = a.q <=> b.q; c != 0) return c;
        if (auto c = a.z <=> b.z; c != 0) return c;
        return a.w <=> b.w;
    }
};

/**
 * Truncated formal series in q with Laurent coefficients in z (and w).
 *
 * Terms with q-exponent below qOrder and z-exponent inside [zLo, zHi] are exact;
 * nothing else is stored. An absent bound means the series is exact in that
 * direction. w is never truncated.
 */
class BiSeries {
  public:
    BiSeries() = default;
    static BiSeries zero();
    static BiSeries one();
    static BiSeries monomial(const Rat& c, const Rat& q, const Rat& z, long w = 0);
    /** (1 - z^m)^{-1} expanded in powers of z^m, which must point away from the kept window bound. */
    static BiSeries geometric_z(const Rat& m, const Rat& bound);

    const std::map<SeriesKey, Rat>& terms() const { return terms_; }
    const std::optional<Rat>& q_order() const { return q_order_; }
    const std::optional<Rat>& z_lo() const { return z_lo_; }
    const std::optional<Rat>& z_hi() const { return z_hi_; }
    bool has_w() const { return has_w_; }
    bool empty() const { return terms_.empty(); }

    Rat coeff(const Rat& q, const Rat& z, long w = 0) const;
    void add_term(const Rat& c, const Rat& q, const Rat& z, long w = 0);

    BiSeries& truncate(const Rat& order);
    BiSeries& clip(const std::optional<Rat>& lo, const std::optional<Rat>& hi);

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const Rat& c);
    BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
    BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

    /** Multiplicative inverse; needs a single monomial at the lowest q-exponent. */
    BiSeries inverse() const;
    /** Coefficient of w^0 as a (z, q) series. */
    BiSeries ct_w() const;
    /** Coefficient of w^k as a (z, q) series. */
    BiSeries w_coeff(long k) const;
    /** Set w = 1. */
    BiSeries w_to_one() const;
    BiSeries shift(const Rat& dq, const Rat& dz, long dw = 0) const;

    std::optional<Rat> min_q() const;
    std::optional<Rat> max_z() const;
    std::optional<Rat> min_z() const;

    /** First key where the two series differ inside their common exact region. */
    std::optional<SeriesKey> first_difference(const BiSeries& o) const;
    bool equal_within(const BiSeries& o) const { return !first_difference(o).has_value(); }

    std::string str() const;

  private:
    void check_congruence(const SeriesKey& k) const;
    bool inside(const SeriesKey& k) const;

    std::map<SeriesKey, Rat> terms_;
    std::optional<Rat> q_order_;
    std::optional<Rat> z_lo_, z_hi_;
    bool has_w_ = false;
};

} // namespace voaforge
